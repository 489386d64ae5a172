"""Independent brute-force evaluators used as oracles by the test suite.

Everything here works on raw nested lists of Fractions with explicit index
loops and no imports from the package under test, so agreement between a
checker and its oracle is evidence, not circularity.
"""

from fractions import Fraction


def bracket_vec(c, x, y):
    """[x, y] from structure constants c[i][j][k], raw lists."""
    n = len(c)
    out = [Fraction(0)] * n
    for i in range(n):
        for j in range(n):
            coeff = x[i] * y[j]
            if coeff:
                for k in range(n):
                    out[k] += coeff * c[i][j][k]
    return out


def omega_lie_violations(c, omega):
    """Anticommutativity and twisted-Jacobi violations for raw tables.

    omega[i][j] is the twist on basis pairs (already pulled back through r
    when applicable).  Returns two sets of index tuples.
    """
    n = len(c)
    anti = set()
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if c[i][j][k] != -c[j][i][k]:
                    anti.add((min(i, j), max(i, j)))
    jac = set()
    unit = lambda t: [Fraction(1) if s == t else Fraction(0) for s in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = bracket_vec(c, c[i][j], unit(k))
                mid = bracket_vec(c, c[j][k], unit(i))
                rgt = bracket_vec(c, c[k][i], unit(j))
                for t in range(n):
                    lhs[t] += mid[t] + rgt[t]
                rhs = [Fraction(0)] * n
                rhs[k] += omega[i][j]
                rhs[i] += omega[j][k]
                rhs[j] += omega[k][i]
                if lhs != rhs:
                    jac.add((i, j, k))
    return anti, jac


def generalized_violations(c1, c2, r):
    n = len(c1)
    anti = set()
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if c1[i][j][k] != -c1[j][i][k]:
                    anti.add((min(i, j), max(i, j)))
    jac = set()
    unit = lambda t: [Fraction(1) if s == t else Fraction(0) for s in range(n)]
    rdot = lambda v: sum((a * b for a, b in zip(r, v)), Fraction(0))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = bracket_vec(c2, c1[i][j], unit(k))
                mid = bracket_vec(c2, c1[j][k], unit(i))
                rgt = bracket_vec(c2, c1[k][i], unit(j))
                for t in range(n):
                    lhs[t] += mid[t] + rgt[t]
                rhs = [Fraction(0)] * n
                rhs[k] += rdot(c1[i][j])
                rhs[i] += rdot(c1[j][k])
                rhs[j] += rdot(c1[k][i])
                if lhs != rhs:
                    jac.add((i, j, k))
    return anti, jac


def lsa_violations(a, omega):
    """Twisted left-symmetry violations for a raw product table."""
    n = len(a)
    unit = lambda t: [Fraction(1) if s == t else Fraction(0) for s in range(n)]
    bad = set()
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = bracket_vec(a, a[i][j], unit(k))
                t2 = bracket_vec(a, unit(i), a[j][k])
                t3 = bracket_vec(a, a[j][i], unit(k))
                t4 = bracket_vec(a, unit(j), a[i][k])
                res = [lhs[t] - t2[t] - t3[t] + t4[t] for t in range(n)]
                res[k] -= omega[i][j]
                if any(res):
                    bad.add((i, j, k))
    return bad


def classical_cybe(c, rmat):
    """Classical quadratic residual of a two-tensor, raw triple loops."""
    n = len(c)
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for p in range(n):
                cab = c[a][b][p]
                if not cab:
                    continue
                for i in range(n):
                    for j in range(n):
                        out[p][i][j] += cab * rmat[a][i] * rmat[b][j]
                        out[i][p][j] += cab * rmat[i][a] * rmat[b][j]
                        out[i][j][p] += cab * rmat[i][a] * rmat[j][b]
    return out


def classical_semidirect(c, rho):
    """Classical semidirect bracket table for a Lie algebra acting through
    rho (one raw matrix per basis element) on a carrier."""
    n = len(c)
    m = len(rho[0])
    total = n + m
    table = [[[Fraction(0)] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                table[i][j][k] = c[i][j][k]
    for i in range(n):
        for b in range(m):
            for p in range(m):
                table[i][n + b][n + p] = rho[i][p][b]
                table[n + b][i][n + p] = -rho[i][p][b]
    return table


def classical_cocycle_holds(c, cstar):
    """Untwisted compatibility: the map dual to the second bracket must be a
    derivation-style cocycle for the first.  Raw loops, no package imports.
    """
    n = len(c)
    # delta[k][i][j]: coefficient of e_i (x) e_j in the image of e_k
    delta = [[[cstar[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)]

    def ad(x):
        return [[c[x][q][p] for q in range(n)] for p in range(n)]

    for x in range(n):
        for y in range(n):
            lhs = [[Fraction(0)] * n for _ in range(n)]
            for k in range(n):
                coeff = c[x][y][k]
                if coeff:
                    for i in range(n):
                        for j in range(n):
                            lhs[i][j] += coeff * delta[k][i][j]
            rhs = [[Fraction(0)] * n for _ in range(n)]
            ax, ay = ad(x), ad(y)
            for i in range(n):
                for j in range(n):
                    acc = Fraction(0)
                    for p in range(n):
                        acc += ax[i][p] * delta[y][p][j] + ax[j][p] * delta[y][i][p]
                        acc -= ay[i][p] * delta[x][p][j] + ay[j][p] * delta[x][i][p]
                    rhs[i][j] = acc
            if lhs != rhs:
                return False
    return True


def jacobiator_table(c):
    """All twisted-Jacobi left sides, indexed [i][j][k][t], raw loops."""
    n = len(c)
    unit = lambda t: [Fraction(1) if s == t else Fraction(0) for s in range(n)]
    out = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = bracket_vec(c, c[i][j], unit(k))
                mid = bracket_vec(c, c[j][k], unit(i))
                rgt = bracket_vec(c, c[k][i], unit(j))
                out[(i, j, k)] = [lhs[t] + mid[t] + rgt[t] for t in range(n)]
    return out
