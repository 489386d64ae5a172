"""From a left-symmetric product to an exact skew solution.

The pipeline: a plain left-symmetric product gives a multiplicative
commutator algebra, whose shifted left multiplications form a
representation for which the identity map is a transport operator; lifting
that operator to the semidirect product with the dual carrier produces a
skew two-tensor with identically zero residual.
"""

from omegalie import check_lsa, left_symmetric
from omegalie.linalg import Matrix, Vector
from omegalie.operators import (
    check_o_operator,
    lift_o_operator,
    lsa_from_o_operator,
    omega_lie_from_lsa,
    rep_from_lsa,
)
from omegalie.yang_baxter import YbeContext, yb_residual

# Products e1 e1 = e1, e1 e2 = e2 (a left unit on the first generator).
nc2 = left_symmetric(2, {(0, 0): [1, 0], (0, 1): [0, 1]}, label="NC2")
print("left-symmetric axioms:", check_lsa(nc2).verdict)

# Commutator algebra with the linear form that kills commutators and takes
# the value 1 on the chosen complement.
algebra = omega_lie_from_lsa(nc2, 1)
print("bracket [e1, e2] =", algebra.table[0][1], "| form r =", algebra.r)

# Shifted left multiplication is a representation, and the identity map
# satisfies the transport identity for it.
rep = rep_from_lsa(algebra, nc2)
identity = Matrix.identity(2)
print("identity operator:", check_o_operator(algebra, rep, identity).verdict)

# The operator also regenerates a left-symmetric product on the carrier.
regenerated = lsa_from_o_operator(algebra, rep, identity)
print("regenerated product passes:", check_lsa(regenerated).verdict)

# Lift: a skew two-tensor on the dim-4 semidirect product with the dual
# carrier, whose residual vanishes identically.
ambient, tensor = lift_o_operator(algebra, rep, identity)
residual = yb_residual(YbeContext(ambient, Vector.zero(ambient.dim)), tensor)
print("ambient dim:", ambient.dim, "| lift residual zero:", residual.is_zero())

# The equivalence is two-sided.  For the zero action on a 2-dim carrier the
# identity map is NOT a transport operator, and the lifted residual shows it.
from omegalie import omega_lie
from omegalie.representations import Representation

b2 = omega_lie(2, {(0, 1): [1, 0]}, r=[0, 0], label="b2")
zero_rep = Representation(b2, 2, (Matrix.zero(2, 2), Matrix.zero(2, 2)))
broken = check_o_operator(b2, zero_rep, Matrix.identity(2)).passed
bad_ambient, bad_tensor = lift_o_operator(b2, zero_rep, Matrix.identity(2))
bad_residual = yb_residual(YbeContext(bad_ambient, Vector.zero(4)), bad_tensor)
print("identity on the zero action passes:", broken, "| residual zero:", bad_residual.is_zero())
