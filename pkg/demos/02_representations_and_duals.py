"""Representations, their duals, and the two-operator generalization.

The usual adjoint action is not a representation once the twist is nonzero;
the fix is a *pair* of operator families, and the dual side then lives on
the dual space with a shift by twice the linear form.
"""

from omegalie import omega_lie
from omegalie.linalg import Matrix
from omegalie.representations import (
    Representation,
    adjoint_pair,
    check_gen_rep,
    check_representation,
    dual_representation,
    generalized_dual_pair,
    semidirect_rep,
)

ax2 = omega_lie(2, {(0, 1): [1, 0]}, r=[1, 0], label="ax2")

# The linear form itself always gives a 1-dim representation.
scalar = Representation(ax2, 1, (Matrix([[1]]), Matrix([[0]])))
print("scalar representation:", check_representation(scalar).verdict)

# Its dual: negated transpose plus 2 r(x) id.  Here that is a fixed point.
dual = dual_representation(scalar)
print("dual matrices:", [m.rows for m in dual.rho])

# The adjoint *pair*: ad1 x = [x, .] and ad2 x = [x, .] + r(.) x.
pair = adjoint_pair(ax2)
print("adjoint pair (first kind):", check_gen_rep(pair).verdict)
print("ad2(e1) =", pair.rho2[0].rows)

# Dualizing a first-kind pair yields a second-kind pair on the dual space;
# for the adjoint pair it satisfies the extra associated-pair relation.
codual = generalized_dual_pair(pair)
print("dual pair kind:", codual.kind.value, "->", check_gen_rep(codual).verdict)

# Semidirect product with a representation carrier; the result is again a
# multiplicative structure and the checker agrees.
bigger = semidirect_rep(scalar)
print("semidirect product: dim", bigger.dim, "with form", bigger.r)
