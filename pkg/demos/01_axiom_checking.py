"""Checking the twisted axioms on small algebras.

Every structure is given by exact rational structure constants, so each
verdict below is an exact statement, not a numerical one.
"""

from omegalie import check_omega_lie, omega_lie
from omegalie.algebras import infer_r
from omegalie.linalg import Matrix, Vector

# A 2-dim solvable Lie algebra: [e1, e2] = e1, with vanishing linear form.
b2 = omega_lie(2, {(0, 1): [1, 0]}, r=[0, 0], label="b2")
print("b2:", check_omega_lie(b2))

# The same bracket with the linear form r = e1*.  In dimension 2 both sides
# of the twisted Jacobi identity are alternating and trilinear, so *every*
# anticommutative bracket passes, whatever r is.
ax2 = omega_lie(2, {(0, 1): [1, 0]}, r=[1, 0], label="ax2")
print("ax2:", check_omega_lie(ax2))

# A bracket that genuinely fails the Jacobi identity; the report carries
# the exact values of both sides at each violating triple.
bad = omega_lie(3, {(0, 1): [0, 1, 0], (1, 2): [1, 0, 0]}, r=[0, 0, 0], label="broken")
report = check_omega_lie(bad)
print("broken:", report.verdict)
for clause in report.clauses:
    for violation in clause.violations[:2]:
        print(f"  {clause.name} at {violation.indices}: {violation.lhs} != {violation.rhs}")

# Given an explicit twist matrix, solve for a linear form that induces it.
explicit = omega_lie(2, {(0, 1): [1, 0]}, omega=Matrix([[0, 1], [-1, 0]]))
print("recovered linear form:", infer_r(explicit))

# The recovered form reproduces the twist through the bracket.
assert infer_r(explicit) == Vector([1, 0])
