"""Numerical search for skew solutions, certified by exact re-verification.

The search space is spanned by wedge products of an admissible-subspace
basis, so skewness and the component conditions hold by construction.  A
float minimum is only ever a candidate: its coordinates are rationalized
with a denominator bound and the residual is recomputed exactly.
"""

from omegalie import omega_lie
from omegalie.solver import SolveOptions, build_problem, minimize, rationalize_verify
from omegalie.yang_baxter import YbeContext, yb_residual

# dim 3: the solvable dim-2 algebra plus a central line.
algebra = omega_lie(3, {(0, 1): [1, 0, 0]}, r=[0, 0, 0], label="b2+line")
problem = build_problem(algebra, options=SolveOptions(seed=1, restarts=16))
print("search dimension:", problem.parameter_dim)

result = minimize(problem)
print("converged:", result.converged, "| float residual:", result.residual_norm)
print("iterations recorded:", len(result.trace))

verified = rationalize_verify(problem, result)
print("exactly verified:", verified.exact_verified)
if verified.exact_verified:
    tensor = verified.rationalized
    print("exact solution tensor:")
    for row in tensor.entries.rows:
        print("  ", [str(e) for e in row])
    ctx = YbeContext(algebra, problem.u_r)
    print("recomputed exact residual is zero:", yb_residual(ctx, tensor).is_zero())
    print("skew:", tensor.is_skew())
