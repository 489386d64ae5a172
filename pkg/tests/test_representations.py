import pytest

from omegalie.algebras import GeneralizedOmegaLieAlgebra, abelian, check_omega_lie
from omegalie.errors import AxiomViolation
from omegalie.linalg import Matrix, Vector
from omegalie.representations import (
    GenRepKind,
    GenRepPair,
    Representation,
    SpecialRepII,
    adjoint_pair,
    check_gen_rep,
    check_rep_i_generalized,
    check_representation,
    check_special_rep_ii,
    dual_representation,
    generalized_dual_pair,
    semidirect_gen_i,
    semidirect_rep,
    semidirect_special_ii,
    solve_f_for_special_ii,
)

from conftest import corpus_algebras, make_ax2, make_b2, raw_table
from oracles import classical_semidirect


def scalar_rep(algebra) -> Representation:
    """The linear form itself acts as a one-dimensional representation."""
    return Representation(
        algebra, 1, tuple(Matrix([[algebra.r[i]]]) for i in range(algebra.dim))
    )


def test_zero_rep_on_lie_algebra_passes(b2):
    rep = Representation(b2, 1, (Matrix([[0]]), Matrix([[0]])))
    assert check_representation(rep).passed


def test_ax2_scalar_rep_passes(ax2):
    rep = Representation(ax2, 1, (Matrix([[1]]), Matrix([[0]])))
    assert check_representation(rep).passed


def test_ax2_zero_rep_fails(ax2):
    rep = Representation(ax2, 1, (Matrix([[0]]), Matrix([[0]])))
    report = check_representation(rep)
    assert {v.indices for c in report.clauses for v in c.violations} == {(0, 1), (1, 0)}


def test_scalar_rep_valid_on_corpus():
    for algebra in corpus_algebras():
        assert check_representation(scalar_rep(algebra)).passed, algebra.label


def test_dual_of_zero_rep_is_zero(b2):
    rep = Representation(b2, 1, (Matrix([[0]]), Matrix([[0]])))
    dual = dual_representation(rep)
    assert all(m.is_zero() for m in dual.rho)


def test_dual_of_ax2_scalar_rep(ax2):
    dual = dual_representation(Representation(ax2, 1, (Matrix([[1]]), Matrix([[0]]))))
    assert dual.rho[0] == Matrix([[1]])
    assert dual.rho[1] == Matrix([[0]])


def test_dual_reduces_to_classical_transpose(b2):
    # the adjoint action is a representation in the untwisted case
    rho = (b2.ad1(0), b2.ad1(1))
    rep = Representation(b2, 2, rho)
    assert check_representation(rep).passed
    dual = dual_representation(rep)
    assert dual.rho[0] == -rho[0].transpose()
    assert dual.rho[1] == -rho[1].transpose()


def test_dual_rejects_invalid_rep(ax2):
    with pytest.raises(AxiomViolation):
        dual_representation(Representation(ax2, 1, (Matrix([[0]]), Matrix([[0]]))))


def test_equal_pair_reduces_to_representation(ax2):
    rep = Representation(ax2, 1, (Matrix([[1]]), Matrix([[0]])))
    for kind in (GenRepKind.GEN_I, GenRepKind.GEN_II):
        pair = GenRepPair(ax2, 1, rep.rho, rep.rho, kind)
        assert check_gen_rep(pair).passed


def test_adjoint_pair_values(ax2):
    pair = adjoint_pair(ax2)
    assert check_gen_rep(pair).passed
    # second family sends e1 -> e1 and e2 -> e1 under the first basis element
    assert pair.rho2[0] == Matrix([[1, 1], [0, 0]])


def test_adjoint_pair_lie_case_is_classical(b2):
    pair = adjoint_pair(b2)
    assert pair.rho1 == pair.rho2
    assert pair.rho1[0] == b2.ad1(0)


def test_adjoint_pair_abelian():
    alg = abelian(2, Vector([1, 0]))
    pair = adjoint_pair(alg)
    assert all(m.is_zero() for m in pair.rho1)
    # [x, y] + r(y) x with zero bracket: e_i column j picks up r_j
    assert pair.rho2[0] == Matrix([[1, 0], [0, 0]])


def test_zero_pair_fails_gen_i(ax2):
    z = (Matrix([[0]]), Matrix([[0]]))
    assert not check_gen_rep(GenRepPair(ax2, 1, z, z, GenRepKind.GEN_I)).passed


def test_generalized_dual_of_adjoint_is_associated():
    for algebra in corpus_algebras():
        dual = generalized_dual_pair(adjoint_pair(algebra))
        assert dual.kind is GenRepKind.ASSOCIATED_GEN_II, algebra.label
        assert check_gen_rep(dual).passed, algebra.label


def test_generalized_dual_coadjoint_on_lie(b2):
    dual = generalized_dual_pair(adjoint_pair(b2))
    assert dual.rho1[0] == -b2.ad1(0).transpose()
    assert dual.rho1 == dual.rho2


def test_generalized_dual_zero_algebra():
    alg = abelian(2, Vector([1, 0]))
    dual = generalized_dual_pair(adjoint_pair(alg))
    # first family becomes twice the form value on the identity
    assert dual.rho1[0] == Matrix([[2, 0], [0, 2]])
    assert dual.rho1[1].is_zero()


def test_semidirect_zero_rep_adds_central_line(b2):
    rep = Representation(b2, 1, (Matrix([[0]]), Matrix([[0]])))
    out = semidirect_rep(rep)
    assert out.dim == 3
    assert out.table[0][2].is_zero() and out.table[1][2].is_zero()


def test_semidirect_ax2_scalar(ax2):
    rep = Representation(ax2, 1, (Matrix([[1]]), Matrix([[0]])))
    out = semidirect_rep(rep)
    assert out.dim == 3
    assert check_omega_lie(out).passed
    assert out.r == Vector([1, 0, 0])


def test_semidirect_classical_reduction(b2):
    rho = (b2.ad1(0), b2.ad1(1))
    rep = Representation(b2, 2, rho)
    assert check_representation(rep).passed
    out = semidirect_rep(rep)
    raw_rho = [[[rho[i][p, b] for b in range(2)] for p in range(2)] for i in range(2)]
    expected = classical_semidirect(raw_table(b2), raw_rho)
    assert raw_table(out) == expected


def test_semidirect_rejects_invalid(ax2):
    with pytest.raises(AxiomViolation):
        semidirect_rep(Representation(ax2, 1, (Matrix([[0]]), Matrix([[0]]))))


def _ax2_generalized():
    ax2 = make_ax2()
    return GeneralizedOmegaLieAlgebra(2, ax2.table, ax2.table, r=ax2.r), ax2


def test_semidirect_gen_i_classical(b2):
    g = GeneralizedOmegaLieAlgebra(2, b2.table, b2.table, r=b2.r)
    rho = (Matrix([[0]]), Matrix([[0]]))
    out, report = semidirect_gen_i(g, rho, rho)
    assert report.passed
    assert out.dim == 3


def test_semidirect_gen_i_adjoint_pair():
    g, ax2 = _ax2_generalized()
    pair = adjoint_pair(ax2)
    assert check_rep_i_generalized(g, pair.rho1, pair.rho2).passed
    out, report = semidirect_gen_i(g, pair.rho1, pair.rho2)
    assert out.dim == 4
    assert report.passed


def test_semidirect_gen_i_iff():
    g, ax2 = _ax2_generalized()
    pair = adjoint_pair(ax2)
    # perturb one operator; the input identity and the output axioms must
    # fail together
    broken = (pair.rho1[0] + Matrix.identity(2), pair.rho1[1])
    assert not check_rep_i_generalized(g, broken, pair.rho2).passed
    _, report = semidirect_gen_i(g, broken, pair.rho2)
    assert not report.passed


def test_special_ii_from_dual_adjoint():
    g, ax2 = _ax2_generalized()
    dual = generalized_dual_pair(adjoint_pair(ax2))
    f = solve_f_for_special_ii(g, dual.rho1, dual.rho2)
    assert f is not None
    data = SpecialRepII(g, 2, dual.rho1, dual.rho2, f)
    assert check_special_rep_ii(data).passed
    out, report = semidirect_special_ii(data)
    assert report.passed
    assert out.dim == 4


def test_special_ii_classical_f_zero(b2):
    g = GeneralizedOmegaLieAlgebra(2, b2.table, b2.table, r=b2.r)
    rho = (Matrix([[0]]), Matrix([[0]]))
    data = SpecialRepII(g, 1, rho, rho, (Matrix([[0]]), Matrix([[0]])))
    assert check_special_rep_ii(data).passed
    out, report = semidirect_special_ii(data)
    assert report.passed


def test_special_ii_bad_f_fails():
    g, ax2 = _ax2_generalized()
    dual = generalized_dual_pair(adjoint_pair(ax2))
    f = solve_f_for_special_ii(g, dual.rho1, dual.rho2)
    bad_f = tuple(m + Matrix.identity(2) for m in f)
    data = SpecialRepII(g, 2, dual.rho1, dual.rho2, bad_f)
    assert not check_special_rep_ii(data).passed
    _, report = semidirect_special_ii(data)
    assert not report.passed


def test_constructions_classical_reduction_entrywise():
    """With a vanishing linear form every construction matches its
    classical counterpart computed independently."""
    b2 = make_b2()
    pair = adjoint_pair(b2)
    assert pair.rho1 == pair.rho2  # the shift vanishes
    dual = generalized_dual_pair(pair)
    for i in range(2):
        assert dual.rho1[i] == -b2.ad1(i).transpose()
