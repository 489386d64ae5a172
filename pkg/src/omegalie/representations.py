"""Representations of omega-Lie algebras, their duals, and semidirect products.

A representation is stored as one carrier-space matrix per basis element of
the acting algebra.  Defining identities are bilinear in the acting slots,
so all checkers quantify over basis pairs only.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .algebras import (
    GeneralizedOmegaLieAlgebra,
    OmegaLieAlgebra,
    check_generalized,
    check_omega_lie,
)
from .errors import AxiomViolation, DimensionMismatch
from .linalg import Matrix, Vector
from .reports import Report


def _check_operator_family(algebra_dim: int, carrier_dim: int, mats, what: str) -> tuple:
    mats = tuple(mats)
    if len(mats) != algebra_dim:
        raise DimensionMismatch(f"{what} needs one matrix per basis element")
    for m in mats:
        if m.shape != (carrier_dim, carrier_dim):
            raise DimensionMismatch(f"{what} matrices must be {carrier_dim} x {carrier_dim}")
    return mats


def _combine(mats: tuple, x: Vector) -> Matrix:
    out = Matrix.zero(mats[0].shape[0], mats[0].shape[1])
    for i, xi in enumerate(x):
        if xi != 0:
            out = out + xi * mats[i]
    return out


@dataclass(frozen=True)
class Representation:
    """Single operator family rho on a carrier space."""

    algebra: OmegaLieAlgebra
    carrier_dim: int
    rho: tuple

    def __post_init__(self):
        object.__setattr__(
            self,
            "rho",
            _check_operator_family(self.algebra.dim, self.carrier_dim, self.rho, "rho"),
        )

    def rho_of(self, x: Vector) -> Matrix:
        return _combine(self.rho, x)


class GenRepKind(Enum):
    GEN_I = "gen_i"
    GEN_II = "gen_ii"
    ASSOCIATED_GEN_II = "associated_gen_ii"


@dataclass(frozen=True)
class GenRepPair:
    """Two operator families (rho1, rho2) replacing a single representation."""

    algebra: OmegaLieAlgebra
    carrier_dim: int
    rho1: tuple
    rho2: tuple
    kind: GenRepKind

    def __post_init__(self):
        if not self.algebra.is_multiplicative:
            raise ValueError("generalized representation pairs need the multiplicative flavor")
        object.__setattr__(
            self,
            "rho1",
            _check_operator_family(self.algebra.dim, self.carrier_dim, self.rho1, "rho1"),
        )
        object.__setattr__(
            self,
            "rho2",
            _check_operator_family(self.algebra.dim, self.carrier_dim, self.rho2, "rho2"),
        )
        if self.kind is GenRepKind.ASSOCIATED_GEN_II and self.carrier_dim != self.algebra.dim:
            raise DimensionMismatch("the associated kind lives on the dual of the algebra")

    def rho1_of(self, x: Vector) -> Matrix:
        return _combine(self.rho1, x)

    def rho2_of(self, x: Vector) -> Matrix:
        return _combine(self.rho2, x)


@dataclass(frozen=True)
class SpecialRepII:
    """Second-kind representation data (rho1, rho2, f) of a two-bracket algebra."""

    algebra: GeneralizedOmegaLieAlgebra
    carrier_dim: int
    rho1: tuple
    rho2: tuple
    f: tuple

    def __post_init__(self):
        for name in ("rho1", "rho2", "f"):
            object.__setattr__(
                self,
                name,
                _check_operator_family(
                    self.algebra.dim, self.carrier_dim, getattr(self, name), name
                ),
            )


def check_representation(rep: Representation) -> Report:
    """rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) + omega(x,y) id, on basis pairs."""
    alg, n, m = rep.algebra, rep.algebra.dim, rep.carrier_dim
    report = Report("representation identity")
    clause = report.clause("representation")
    ident = Matrix.identity(m)
    for i in range(n):
        for j in range(n):
            lhs = rep.rho_of(alg.table[i][j])
            rhs = rep.rho[i] @ rep.rho[j] - rep.rho[j] @ rep.rho[i] + alg.omega_basis(i, j) * ident
            if lhs != rhs:
                clause.add((i, j), lhs, rhs)
    return report


def dual_representation(rep: Representation) -> Representation:
    """Dual family xi -> -xi o rho(x) + 2 r(x) xi on the dual carrier.

    In dual-basis coordinates each matrix is the negated transpose shifted
    by twice the r-value of the acting basis element.
    """
    alg = rep.algebra
    if not alg.is_multiplicative:
        raise AxiomViolation("dual representation needs the multiplicative flavor")
    if not check_representation(rep).passed:
        raise AxiomViolation("input does not satisfy the representation identity")
    ident = Matrix.identity(rep.carrier_dim)
    dual = Representation(
        alg,
        rep.carrier_dim,
        tuple(-rep.rho[i].transpose() + (2 * alg.r[i]) * ident for i in range(alg.dim)),
    )
    result = check_representation(dual)
    if not result.passed:
        raise AxiomViolation(f"dual family fails the representation identity: {result!r}")
    return dual


def check_gen_rep(pair: GenRepPair) -> Report:
    """Defining identity of the pair's kind on all basis pairs."""
    alg, n, m = pair.algebra, pair.algebra.dim, pair.carrier_dim
    report = Report(f"generalized representation ({pair.kind.value})")
    ident = Matrix.identity(m)
    clause = report.clause(f"{pair.kind.value}-identity")
    for i in range(n):
        for j in range(n):
            lhs = pair.rho1_of(alg.table[i][j])
            r_ij = alg.r.dot(alg.table[i][j])
            if pair.kind is GenRepKind.GEN_I:
                rhs = (
                    pair.rho2[i] @ pair.rho1[j]
                    - pair.rho2[j] @ pair.rho1[i]
                    + r_ij * ident
                )
            else:
                rhs = (
                    pair.rho1[i] @ pair.rho2[j]
                    - pair.rho1[j] @ pair.rho2[i]
                    + r_ij * ident
                    + (2 * alg.r[i]) * pair.rho1[j]
                    - (2 * alg.r[j]) * pair.rho1[i]
                    - (2 * alg.r[i]) * pair.rho2[j]
                    + (2 * alg.r[j]) * pair.rho2[i]
                )
            if lhs != rhs:
                clause.add((i, j), lhs, rhs)
    if pair.kind is GenRepKind.ASSOCIATED_GEN_II:
        # rho2(x)(xi) = rho1(x)(xi) - xi(x) r, checked per dual basis vector.
        linked = report.clause("rho2-from-rho1")
        for i in range(n):
            for k in range(n):
                lhs = pair.rho2[i].column(k)
                rhs = pair.rho1[i].column(k) - (Fraction(1) if k == i else Fraction(0)) * alg.r
                if lhs != rhs:
                    linked.add((i, k), lhs, rhs)
    return report


def adjoint_pair(algebra: OmegaLieAlgebra) -> GenRepPair:
    """The pair (x -> [x, .], x -> [x, .] + r(.) x) acting on the algebra."""
    if not algebra.is_multiplicative:
        raise ValueError("the adjoint pair needs the multiplicative flavor")
    n = algebra.dim
    ad1 = tuple(algebra.ad1(i) for i in range(n))
    ad2 = tuple(ad1[i] + Vector.unit(n, i).outer(algebra.r) for i in range(n))
    return GenRepPair(algebra, n, ad1, ad2, GenRepKind.GEN_I)


def generalized_dual_pair(pair: GenRepPair) -> GenRepPair:
    """Dual pair on the dual carrier, second kind.

    Built from a first-kind pair; raises when the input fails its identity.
    """
    if pair.kind is not GenRepKind.GEN_I:
        raise ValueError("the dual construction starts from a first-kind pair")
    if not check_gen_rep(pair).passed:
        raise AxiomViolation("input pair fails the first-kind identity")
    alg = pair.algebra
    ident = Matrix.identity(pair.carrier_dim)
    dual_kind = (
        GenRepKind.ASSOCIATED_GEN_II if pair.carrier_dim == alg.dim else GenRepKind.GEN_II
    )
    rho1 = tuple(-pair.rho1[i].transpose() + (2 * alg.r[i]) * ident for i in range(alg.dim))
    rho2 = tuple(-pair.rho2[i].transpose() + (2 * alg.r[i]) * ident for i in range(alg.dim))
    dual = GenRepPair(alg, pair.carrier_dim, rho1, rho2, GenRepKind.GEN_II)
    result = check_gen_rep(dual)
    if not result.passed:
        raise AxiomViolation(f"dual pair fails the second-kind identity: {result!r}")
    if dual_kind is GenRepKind.ASSOCIATED_GEN_II:
        associated = GenRepPair(alg, pair.carrier_dim, rho1, rho2, dual_kind)
        if check_gen_rep(associated).passed:
            return associated
    return dual


def semidirect_rep(rep: Representation, label: str = "") -> OmegaLieAlgebra:
    """Semidirect product of the algebra with the carrier of a representation.

    Bracket ([x,y], rho(x)v - rho(y)u) with the linear form pulled back from
    the algebra factor.
    """
    if not check_representation(rep).passed:
        raise AxiomViolation("input does not satisfy the representation identity")
    alg = rep.algebra
    if not alg.is_multiplicative:
        raise AxiomViolation("semidirect product needs the multiplicative flavor")
    n, m = alg.dim, rep.carrier_dim
    total = n + m

    def pad(head: Vector, tail: Vector) -> Vector:
        return Vector(tuple(head) + tuple(tail))

    table = [[Vector.zero(total) for _ in range(total)] for _ in range(total)]
    zero_l, zero_v = Vector.zero(n), Vector.zero(m)
    for i in range(n):
        for j in range(n):
            table[i][j] = pad(alg.table[i][j], zero_v)
    for i in range(n):
        for b in range(m):
            action = rep.rho[i].column(b)
            table[i][n + b] = pad(zero_l, action)
            table[n + b][i] = pad(zero_l, -action)
    r_bar = pad(alg.r, zero_v)
    out = OmegaLieAlgebra(total, table, r=r_bar, label=label or "semidirect")
    result = check_omega_lie(out)
    if not result.passed:
        raise AxiomViolation(f"semidirect product fails its axioms: {result!r}")
    return out


def check_rep_i_generalized(
    algebra: GeneralizedOmegaLieAlgebra, rho1: tuple, rho2: tuple
) -> Report:
    """First-kind identity over the first bracket of a two-bracket algebra."""
    n = algebra.dim
    m = rho1[0].shape[0]
    rho1 = _check_operator_family(n, m, rho1, "rho1")
    rho2 = _check_operator_family(n, m, rho2, "rho2")
    report = Report("representation-i (two-bracket)")
    clause = report.clause("rep-i-identity")
    ident = Matrix.identity(m)
    for i in range(n):
        for j in range(n):
            lhs = _combine(rho1, algebra.table1[i][j])
            rhs = (
                rho2[i] @ rho1[j]
                - rho2[j] @ rho1[i]
                + algebra.r.dot(algebra.table1[i][j]) * ident
            )
            if lhs != rhs:
                clause.add((i, j), lhs, rhs)
    return report


def check_special_rep_ii(data: SpecialRepII) -> Report:
    """Second-kind identity plus the f-identity of a special second-kind tuple."""
    alg, n, m = data.algebra, data.algebra.dim, data.carrier_dim
    report = Report("special representation-ii")
    ident = Matrix.identity(m)
    main = report.clause("rep-ii-identity")
    f_clause = report.clause("f-identity")
    r = alg.r
    for i in range(n):
        for j in range(n):
            bracket1 = alg.table1[i][j]
            correction = (
                (2 * r[i]) * data.rho1[j]
                - (2 * r[j]) * data.rho1[i]
                - (2 * r[i]) * data.rho2[j]
                + (2 * r[j]) * data.rho2[i]
            )
            lhs = _combine(data.rho1, bracket1)
            rhs = (
                data.rho1[i] @ data.rho2[j]
                - data.rho1[j] @ data.rho2[i]
                + r.dot(bracket1) * ident
                + correction
            )
            if lhs != rhs:
                main.add((i, j), lhs, rhs)
            lhs_f = _combine(data.f, bracket1)
            if lhs_f != correction:
                f_clause.add((i, j), lhs_f, correction)
    return report


def _semidirect_generalized(
    algebra: GeneralizedOmegaLieAlgebra,
    block1,
    block2,
    label: str,
) -> GeneralizedOmegaLieAlgebra:
    n = algebra.dim
    m = block1("carrier")
    total = n + m

    def pad(head: Vector, tail: Vector) -> Vector:
        return Vector(tuple(head) + tuple(tail))

    zero_l, zero_v = Vector.zero(n), Vector.zero(m)
    t1 = [[Vector.zero(total) for _ in range(total)] for _ in range(total)]
    t2 = [[Vector.zero(total) for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            t1[i][j] = pad(algebra.table1[i][j], zero_v)
            t2[i][j] = pad(algebra.table2[i][j], zero_v)
    for i in range(n):
        for b in range(m):
            t1[i][n + b] = pad(zero_l, block1("left", i, b))
            t1[n + b][i] = pad(zero_l, block1("right", i, b))
            t2[i][n + b] = pad(zero_l, block2("left", i, b))
            t2[n + b][i] = pad(zero_l, block2("right", i, b))
    r_bar = pad(algebra.r, zero_v)
    return GeneralizedOmegaLieAlgebra(total, t1, t2, r=r_bar, label=label)


def semidirect_gen_i(
    algebra: GeneralizedOmegaLieAlgebra, rho1: tuple, rho2: tuple, label: str = ""
) -> tuple[GeneralizedOmegaLieAlgebra, Report]:
    """Semidirect product for a first-kind pair on a two-bracket algebra.

    The structure is returned together with its axiom report; by the
    equivalence with the first-kind identity, the report fails exactly when
    the input pair does.
    """
    m = rho1[0].shape[0]
    rho1 = _check_operator_family(algebra.dim, m, rho1, "rho1")
    rho2 = _check_operator_family(algebra.dim, m, rho2, "rho2")

    def block1(which, i=None, b=None):
        if which == "carrier":
            return m
        col = rho1[i].column(b)
        return col if which == "left" else -col

    def block2(which, i=None, b=None):
        if which == "carrier":
            return m
        if which == "left":
            return rho1[i].column(b)
        return -rho2[i].column(b)

    out = _semidirect_generalized(algebra, block1, block2, label or "semidirect-gen-i")
    return out, check_generalized(out)


def semidirect_special_ii(
    data: SpecialRepII, label: str = ""
) -> tuple[GeneralizedOmegaLieAlgebra, Report]:
    """Semidirect product for a special second-kind tuple.

    Second bracket acts by rho1 minus the one-sided f-correction on the
    left slot only, exactly as the construction prescribes.
    """
    m = data.carrier_dim

    def block1(which, i=None, b=None):
        if which == "carrier":
            return m
        col = data.rho2[i].column(b)
        return col if which == "left" else -col

    def block2(which, i=None, b=None):
        if which == "carrier":
            return m
        if which == "left":
            return data.rho1[i].column(b) - data.f[i].column(b)
        return -data.rho1[i].column(b)

    out = _semidirect_generalized(data.algebra, block1, block2, label or "semidirect-special-ii")
    return out, check_generalized(out)


def solve_f_for_special_ii(
    algebra: GeneralizedOmegaLieAlgebra, rho1: tuple, rho2: tuple
):
    """Solve the f-identity for a linear family f, entry by entry.

    Returns the pivot-convention solution as a matrix family, or None when
    the identity admits no linear f.
    """
    from .linalg import Matrix as _M, solve_linear as _solve

    n = algebra.dim
    m = rho1[0].shape[0]
    pairs = [(i, j) for i in range(n) for j in range(n)]
    coeff = _M([[algebra.table1[i][j][k] for k in range(n)] for (i, j) in pairs])
    r = algebra.r
    targets = {}
    for (i, j) in pairs:
        targets[(i, j)] = (
            (2 * r[i]) * rho1[j]
            - (2 * r[j]) * rho1[i]
            - (2 * r[i]) * rho2[j]
            + (2 * r[j]) * rho2[i]
        )
    solution = [[[Fraction(0)] * m for _ in range(m)] for _ in range(n)]
    for p in range(m):
        for q in range(m):
            rhs = Vector([targets[pair][p, q] for pair in pairs])
            x = _solve(coeff, rhs)
            if x is None:
                return None
            for k in range(n):
                solution[k][p][q] = x[k]
    return tuple(Matrix(mat) for mat in solution)
