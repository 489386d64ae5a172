"""Core algebraic structures and their axiom checkers.

Structure constants are stored in full (both index orders), and every axiom
is checked rather than assumed, so malformed inputs surface as FAIL reports
instead of silently corrupt objects.  Checkers evaluate identities on basis
tuples only; multilinearity makes that sufficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import AxiomViolation, DimensionMismatch
from .linalg import Matrix, Subspace, Vector, nullspace, rat, solve_linear
from .reports import Report

# Eligibility rules for the distinguished central element used by the
# Yang-Baxter machinery: "center" admits any central element, "zero" admits
# only the zero vector.
CENTRAL_RULES = ("center", "zero")


def _as_bracket_table(dim: int, table) -> tuple:
    rows = tuple(tuple(Vector(v) if not isinstance(v, Vector) else v for v in row) for row in table)
    if len(rows) != dim or any(len(row) != dim for row in rows):
        raise DimensionMismatch("structure-constant table must be dim x dim")
    for row in rows:
        for v in row:
            if len(v) != dim:
                raise DimensionMismatch("structure-constant vectors must have length dim")
    return rows


@dataclass(frozen=True)
class OmegaLieAlgebra:
    """Anticommutative algebra together with its twisting form.

    Exactly one of ``r`` (multiplicative flavor, with the bilinear twist
    recovered as r([x, y])) and ``omega`` (explicit form on basis pairs) is
    set.  ``table[i][j]`` holds the bracket of the i-th and j-th basis
    vectors.
    """

    dim: int
    table: tuple
    r: Optional[Vector] = None
    omega: Optional[Matrix] = None
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "table", _as_bracket_table(self.dim, self.table))
        if (self.r is None) == (self.omega is None):
            raise ValueError("exactly one of r and omega must be given")
        if self.r is not None and len(self.r) != self.dim:
            raise DimensionMismatch("r must have length dim")
        if self.omega is not None and self.omega.shape != (self.dim, self.dim):
            raise DimensionMismatch("omega must be dim x dim")

    @property
    def is_multiplicative(self) -> bool:
        return self.r is not None

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def bracket(self, x: Vector, y: Vector) -> Vector:
        """Bilinear extension of the structure constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("bracket operands must match the algebra dimension")
        out = Vector.zero(self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                out = out + (xi * yj) * self.table[i][j]
        return out

    def r_of(self, x: Vector) -> Fraction:
        if self.r is None:
            raise ValueError("algebra has no linear form r")
        return self.r.dot(x)

    def omega_basis(self, i: int, j: int) -> Fraction:
        """Twist value on a basis pair, via r([.,.]) in the multiplicative flavor."""
        if self.r is not None:
            return self.r.dot(self.table[i][j])
        return self.omega[i, j]

    def omega_of(self, x: Vector, y: Vector) -> Fraction:
        if self.r is not None:
            return self.r.dot(self.bracket(x, y))
        return x.dot(self.omega.apply(y))

    def ad1(self, i: int) -> Matrix:
        """Matrix of y -> [e_i, y]."""
        return Matrix.from_columns([self.table[i][j] for j in range(self.dim)])

    def ad1_of(self, x: Vector) -> Matrix:
        m = Matrix.zero(self.dim, self.dim)
        for i, xi in enumerate(x):
            if xi != 0:
                m = m + xi * self.ad1(i)
        return m


def abelian(dim: int, r: Optional[Vector] = None, label: str = "") -> OmegaLieAlgebra:
    """Abelian algebra, multiplicative with the given r (default 0)."""
    table = [[Vector.zero(dim) for _ in range(dim)] for _ in range(dim)]
    return OmegaLieAlgebra(dim, table, r=r if r is not None else Vector.zero(dim), label=label)


@dataclass(frozen=True)
class GeneralizedOmegaLieAlgebra:
    """Two-bracket structure: the first bracket anticommutative, the pair
    tied together by a twisted Jacobi identity through the linear form r."""

    dim: int
    table1: tuple
    table2: tuple
    r: Vector
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "table1", _as_bracket_table(self.dim, self.table1))
        object.__setattr__(self, "table2", _as_bracket_table(self.dim, self.table2))
        if len(self.r) != self.dim:
            raise DimensionMismatch("r must have length dim")

    def bracket1(self, x: Vector, y: Vector) -> Vector:
        return _bilinear(self.table1, x, y)

    def bracket2(self, x: Vector, y: Vector) -> Vector:
        return _bilinear(self.table2, x, y)


def _bilinear(table: tuple, x: Vector, y: Vector) -> Vector:
    n = len(table)
    if len(x) != n or len(y) != n:
        raise DimensionMismatch("operands must match the algebra dimension")
    out = Vector.zero(n)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            out = out + (xi * yj) * table[i][j]
    return out


@dataclass(frozen=True)
class LeftSymmetricAlgebra:
    """Left-symmetric product with an optional twist.

    Flavors: plain (twist identically zero), explicit ``omega`` matrix, or
    multiplicative with a linear form ``r`` and twist r(u.v) - r(v.u).
    """

    dim: int
    table: tuple
    r: Optional[Vector] = None
    omega: Optional[Matrix] = None
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "table", _as_bracket_table(self.dim, self.table))
        if self.r is not None and self.omega is not None:
            raise ValueError("at most one of r and omega may be given")
        if self.r is not None and len(self.r) != self.dim:
            raise DimensionMismatch("r must have length dim")
        if self.omega is not None and self.omega.shape != (self.dim, self.dim):
            raise DimensionMismatch("omega must be dim x dim")

    @property
    def is_multiplicative(self) -> bool:
        return self.r is not None

    @property
    def is_plain(self) -> bool:
        return self.r is None and self.omega is None

    def product_basis(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def product(self, x: Vector, y: Vector) -> Vector:
        return _bilinear(self.table, x, y)

    def omega_basis(self, i: int, j: int) -> Fraction:
        if self.r is not None:
            return self.r.dot(self.table[i][j]) - self.r.dot(self.table[j][i])
        if self.omega is not None:
            return self.omega[i, j]
        return Fraction(0)


def check_omega_lie(algebra: OmegaLieAlgebra) -> Report:
    """Anticommutativity and the twisted Jacobi identity on all basis triples."""
    n = algebra.dim
    report = Report(f"omega-lie axioms [{algebra.label or 'unnamed'}]")
    anti = report.clause("anticommutativity")
    for i in range(n):
        for j in range(i, n):
            lhs = algebra.table[i][j]
            rhs = -algebra.table[j][i]
            if lhs != rhs:
                anti.add((i, j), lhs, rhs)
    jacobi = report.clause("twisted-jacobi")
    # raw-entry loops: the n^3-triple sweep dominates the checker's cost
    c = [[algebra.table[i][j].entries for j in range(n)] for i in range(n)]
    omega = [[algebra.omega_basis(i, j) for j in range(n)] for i in range(n)]
    zero = Fraction(0)
    for i in range(n):
        for j in range(n):
            cij = c[i][j]
            for k in range(n):
                lhs = [zero] * n
                for coeff, other in ((cij, k), (c[j][k], i), (c[k][i], j)):
                    for p in range(n):
                        cp = coeff[p]
                        if cp:
                            row = c[p][other]
                            for t in range(n):
                                if row[t]:
                                    lhs[t] += cp * row[t]
                rhs = [zero] * n
                rhs[k] += omega[i][j]
                rhs[i] += omega[j][k]
                rhs[j] += omega[k][i]
                if lhs != rhs:
                    jacobi.add((i, j, k), Vector(lhs), Vector(rhs))
    return report


def infer_r(algebra: OmegaLieAlgebra):
    """Solve r([e_i, e_j]) = omega(e_i, e_j) for a linear form r.

    Returns the pivot-convention solution, or None when the explicit twist
    is not of bracket-pullback form.  Input must carry an explicit omega.
    """
    if algebra.omega is None:
        raise ValueError("infer_r expects an algebra with an explicit omega")
    n = algebra.dim
    rows, rhs = [], []
    for i in range(n):
        for j in range(i + 1, n):
            rows.append(list(algebra.table[i][j]))
            rhs.append(algebra.omega[i, j])
    if not rows:
        return Vector.zero(n)
    return solve_linear(Matrix(rows), Vector(rhs))


def check_generalized(algebra: GeneralizedOmegaLieAlgebra) -> Report:
    """First-bracket anticommutativity plus the two-bracket twisted Jacobi
    identity on all basis triples."""
    n = algebra.dim
    report = Report(f"generalized axioms [{algebra.label or 'unnamed'}]")
    anti = report.clause("bracket1-anticommutativity")
    for i in range(n):
        for j in range(i, n):
            lhs = algebra.table1[i][j]
            rhs = -algebra.table1[j][i]
            if lhs != rhs:
                anti.add((i, j), lhs, rhs)
    jacobi = report.clause("twisted-jacobi")
    c1 = [[algebra.table1[i][j].entries for j in range(n)] for i in range(n)]
    c2 = [[algebra.table2[i][j].entries for j in range(n)] for i in range(n)]
    r1 = [[algebra.r.dot(algebra.table1[i][j]) for j in range(n)] for i in range(n)]
    zero = Fraction(0)
    for i in range(n):
        for j in range(n):
            c1ij = c1[i][j]
            for k in range(n):
                lhs = [zero] * n
                for coeff, other in ((c1ij, k), (c1[j][k], i), (c1[k][i], j)):
                    for p in range(n):
                        cp = coeff[p]
                        if cp:
                            row = c2[p][other]
                            for t in range(n):
                                if row[t]:
                                    lhs[t] += cp * row[t]
                rhs = [zero] * n
                rhs[k] += r1[i][j]
                rhs[i] += r1[j][k]
                rhs[j] += r1[k][i]
                if lhs != rhs:
                    jacobi.add((i, j, k), Vector(lhs), Vector(rhs))
    return report


def center(algebra: OmegaLieAlgebra) -> Subspace:
    """Elements whose bracket with the whole algebra vanishes."""
    n = algebra.dim
    rows = []
    for j in range(n):
        # rows of the map x -> [x, e_j]
        for k in range(n):
            rows.append([algebra.table[i][j][k] for i in range(n)])
    return nullspace(Matrix(rows))


def central_elements(algebra: OmegaLieAlgebra, rule: str = "center") -> Subspace:
    """The configured pool of eligible distinguished elements."""
    if rule not in CENTRAL_RULES:
        raise ValueError(f"unknown central rule {rule!r}")
    if rule == "zero":
        return Subspace.zero(algebra.dim)
    return center(algebra)


def admissible_subspace(algebra: OmegaLieAlgebra) -> Subspace:
    """ker r intersected with { x : r([x, e_j]) = 0 for all j }."""
    if not algebra.is_multiplicative:
        raise ValueError("admissible subspace is defined for the multiplicative flavor")
    n = algebra.dim
    rows = [list(algebra.r)]
    for j in range(n):
        rows.append([algebra.r.dot(algebra.table[i][j]) for i in range(n)])
    return nullspace(Matrix(rows))


def check_lsa(algebra: LeftSymmetricAlgebra) -> Report:
    """Twisted left-symmetry on all basis triples."""
    n = algebra.dim
    report = Report(f"left-symmetric axioms [{algebra.label or 'unnamed'}]")
    clause = report.clause("twisted-left-symmetry")
    a = [[algebra.table[i][j].entries for j in range(n)] for i in range(n)]
    omega = [[algebra.omega_basis(i, j) for j in range(n)] for i in range(n)]
    zero = Fraction(0)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                res = [zero] * n
                aij, aji = a[i][j], a[j][i]
                for p in range(n):
                    # ((e_i e_j) e_k - (e_j e_i) e_k) via left factors
                    left = aij[p] - aji[p]
                    if left:
                        row = a[p][k]
                        for t in range(n):
                            if row[t]:
                                res[t] += left * row[t]
                ajk, aik = a[j][k], a[i][k]
                for q in range(n):
                    # -e_i (e_j e_k) + e_j (e_i e_k) via right factors
                    if ajk[q]:
                        row = a[i][q]
                        for t in range(n):
                            if row[t]:
                                res[t] -= ajk[q] * row[t]
                    if aik[q]:
                        row = a[j][q]
                        for t in range(n):
                            if row[t]:
                                res[t] += aik[q] * row[t]
                rhs = [zero] * n
                rhs[k] = omega[i][j]
                if res != rhs:
                    clause.add((i, j, k), Vector(res), Vector(rhs))
    return report


def subadjacent(algebra: LeftSymmetricAlgebra) -> OmegaLieAlgebra:
    """Commutator algebra of a left-symmetric product, with the same twist.

    The plain flavor maps to the multiplicative flavor with r = 0.
    """
    if not check_lsa(algebra).passed:
        raise AxiomViolation("input does not satisfy the left-symmetric axioms")
    n = algebra.dim
    table = [
        [algebra.table[i][j] - algebra.table[j][i] for j in range(n)] for i in range(n)
    ]
    label = f"sub-adjacent({algebra.label})" if algebra.label else "sub-adjacent"
    if algebra.omega is not None:
        out = OmegaLieAlgebra(n, table, omega=algebra.omega, label=label)
    else:
        r = algebra.r if algebra.r is not None else Vector.zero(n)
        out = OmegaLieAlgebra(n, table, r=r, label=label)
    result = check_omega_lie(out)
    if not result.passed:
        raise AxiomViolation(f"sub-adjacent algebra fails its axioms: {result!r}")
    return out


def omega_lie(
    dim: int,
    entries: dict,
    r=None,
    omega=None,
    label: str = "",
) -> OmegaLieAlgebra:
    """Convenience constructor from sparse upper-triangular entries.

    ``entries`` maps (i, j) with i < j to the bracket vector of e_i and e_j
    (given as any iterable of rationals); the antisymmetric completion is
    filled in automatically.
    """
    table = [[Vector.zero(dim) for _ in range(dim)] for _ in range(dim)]
    for (i, j), value in entries.items():
        if not 0 <= i < j < dim:
            raise ValueError("sparse entries must have 0 <= i < j < dim")
        v = value if isinstance(value, Vector) else Vector(value)
        table[i][j] = v
        table[j][i] = -v
    if r is None and omega is None:
        r = Vector.zero(dim)
    if r is not None and not isinstance(r, Vector):
        r = Vector(r)
    if omega is not None and not isinstance(omega, Matrix):
        omega = Matrix(omega)
    return OmegaLieAlgebra(dim, table, r=r, omega=omega, label=label)


def left_symmetric(
    dim: int,
    entries: dict,
    r=None,
    omega=None,
    label: str = "",
) -> LeftSymmetricAlgebra:
    """Convenience constructor from sparse product entries (no symmetry)."""
    table = [[Vector.zero(dim) for _ in range(dim)] for _ in range(dim)]
    for (i, j), value in entries.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError("sparse entries out of range")
        table[i][j] = value if isinstance(value, Vector) else Vector(value)
    if r is not None and not isinstance(r, Vector):
        r = Vector(r)
    if omega is not None and not isinstance(omega, Matrix):
        omega = Matrix(omega)
    return LeftSymmetricAlgebra(dim, table, r=r, omega=omega, label=label)
