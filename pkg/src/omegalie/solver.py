"""Floating-point search for skew solutions of the twisted Yang-Baxter
equation, with exact rationalization and re-verification.

The search space is the span of wedge products of an admissible-subspace
basis, so the component conditions and skew-symmetry hold by construction
and the objective is a plain quartic least-squares problem in the span
coordinates.  A float result never certifies anything: a candidate counts
as a solution only after its rationalization re-verifies to an identically
zero residual in the exact kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

import numpy as np

from .algebras import OmegaLieAlgebra, admissible_subspace
from .errors import DimensionMismatch, EmptyParameterSpace
from .linalg import Vector
from .yang_baxter import TwoTensor, YbeContext, yb_residual


@dataclass(frozen=True)
class SolveOptions:
    max_iterations: int = 500
    step_tolerance: float = 1e-12
    residual_tolerance: float = 1e-10
    restarts: int = 32
    seed: int = 1
    max_denominator: int = 64


def skew_parameter_basis(algebra: OmegaLieAlgebra) -> list[TwoTensor]:
    """Linearly independent skew tensors spanning the wedge square of the
    admissible subspace."""
    w = admissible_subspace(algebra)
    basis = []
    for a in range(w.dim):
        for b in range(a + 1, w.dim):
            basis.append(TwoTensor.wedge(w.basis[a], w.basis[b]))
    return basis


@dataclass(frozen=True)
class SolveProblem:
    """Search problem: algebra, fixed distinguished element, options, and
    the float image of everything the objective needs."""

    algebra: OmegaLieAlgebra
    u_r: Vector
    options: SolveOptions
    basis: tuple
    structure: np.ndarray
    basis_float: np.ndarray
    u_float: np.ndarray

    @property
    def parameter_dim(self) -> int:
        return len(self.basis)


def build_problem(
    algebra: OmegaLieAlgebra,
    u_r: Optional[Vector] = None,
    options: SolveOptions = SolveOptions(),
) -> SolveProblem:
    n = algebra.dim
    if u_r is None:
        u_r = Vector.zero(n)
    if len(u_r) != n:
        raise DimensionMismatch("distinguished element must live in the algebra")
    basis = tuple(skew_parameter_basis(algebra))
    structure = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                structure[i, j, k] = float(algebra.table[i][j][k])
    basis_float = np.zeros((len(basis), n, n))
    for t, tensor in enumerate(basis):
        for i in range(n):
            for j in range(n):
                basis_float[t, i, j] = float(tensor.entries[i, j])
    u_float = np.array([float(c) for c in u_r])
    return SolveProblem(algebra, u_r, options, basis, structure, basis_float, u_float)


def _tensor_bilinear(c: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Bilinear part of the residual: the three slot-pairing bracket blocks."""
    return (
        np.einsum("ai,bj,abp->pij", x, y, c)
        + np.einsum("ia,bj,abp->ipj", x, y, c)
        + np.einsum("ia,jb,abp->ijp", x, y, c)
    )


def _tensor_linear(u: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Linear part: the three placements of the distinguished element."""
    return 3.0 * (
        np.einsum("ji,k->ijk", x, u)
        + np.einsum("ik,j->ijk", x, u)
        + np.einsum("kj,i->ijk", x, u)
    )


def _coords_to_tensor(problem: SolveProblem, coords: np.ndarray) -> np.ndarray:
    return np.tensordot(coords, problem.basis_float, axes=1)


def residual_tensor(problem: SolveProblem, coords: np.ndarray) -> np.ndarray:
    coords = np.asarray(coords, dtype=float)
    if coords.shape != (problem.parameter_dim,):
        raise DimensionMismatch("coordinate vector has the wrong length")
    r = _coords_to_tensor(problem, coords)
    return _tensor_bilinear(problem.structure, r, r) + _tensor_linear(problem.u_float, r)


def residual_norm_sq(problem: SolveProblem, coords: np.ndarray) -> float:
    t = residual_tensor(problem, coords)
    return float(np.sum(t * t))


def residual_jacobian(problem: SolveProblem, coords: np.ndarray) -> np.ndarray:
    """Jacobian of the flattened residual tensor with respect to coords."""
    coords = np.asarray(coords, dtype=float)
    r = _coords_to_tensor(problem, coords)
    c, u = problem.structure, problem.u_float
    cols = []
    for t in range(problem.parameter_dim):
        b = problem.basis_float[t]
        d = _tensor_bilinear(c, b, r) + _tensor_bilinear(c, r, b) + _tensor_linear(u, b)
        cols.append(d.ravel())
    return np.array(cols).T if cols else np.zeros((problem.structure.size, 0))


def residual_gradient(problem: SolveProblem, coords: np.ndarray) -> np.ndarray:
    """Analytic gradient of the squared residual norm."""
    coords = np.asarray(coords, dtype=float)
    if coords.shape != (problem.parameter_dim,):
        raise DimensionMismatch("coordinate vector has the wrong length")
    fvec = residual_tensor(problem, coords).ravel()
    jac = residual_jacobian(problem, coords)
    return 2.0 * (jac.T @ fvec)


@dataclass
class SolveResult:
    best_coords: np.ndarray
    best_r_float: np.ndarray
    residual_norm: float
    converged: bool
    trace: list = field(default_factory=list)
    rationalized: Optional[TwoTensor] = None
    exact_verified: bool = False


def _single_start(problem: SolveProblem, x0: np.ndarray) -> tuple[np.ndarray, float, list]:
    """Damped Gauss-Newton with step-halving and gradient-descent fallback."""
    opts = problem.options
    x = np.array(x0, dtype=float)
    fvec = residual_tensor(problem, x).ravel()
    cost = float(fvec @ fvec)
    trace = [float(np.sqrt(cost))]
    damping = 1e-3
    for _ in range(opts.max_iterations):
        if np.sqrt(cost) < opts.residual_tolerance:
            break
        jac = residual_jacobian(problem, x)
        grad = 2.0 * (jac.T @ fvec)
        jtj = jac.T @ jac
        k = len(x)
        try:
            step = np.linalg.solve(jtj + damping * np.eye(k), -jac.T @ fvec)
        except np.linalg.LinAlgError:
            step = -grad

        def try_step(direction: np.ndarray) -> tuple[float, np.ndarray, float]:
            alpha = 1.0
            while alpha > 1e-14:
                cand = x + alpha * direction
                fc = residual_tensor(problem, cand).ravel()
                cc = float(fc @ fc)
                if cc < cost:
                    return cc, cand, alpha
                alpha *= 0.5
            return cost, x, 0.0

        new_cost, new_x, alpha = try_step(step)
        if alpha == 0.0:
            new_cost, new_x, alpha = try_step(-grad)
            if alpha == 0.0:
                break
            damping = min(damping * 10.0, 1e6)
        else:
            damping = max(damping / 3.0, 1e-12)
        moved = float(np.linalg.norm(new_x - x))
        x, cost = new_x, new_cost
        fvec = residual_tensor(problem, x).ravel()
        trace.append(float(np.sqrt(cost)))
        if moved < opts.step_tolerance:
            break
    return x, float(np.sqrt(cost)), trace


def minimize(problem: SolveProblem) -> SolveResult:
    """Best candidate across seeded restarts; deterministic for a fixed seed.

    Restart merging uses a lexicographic tie-break (residual, then
    coordinates) so concurrent execution orders cannot change the result.
    """
    if problem.parameter_dim < 1:
        raise EmptyParameterSpace(
            "admissible subspace carries no nonzero skew tensor to search over"
        )
    opts = problem.options
    rng = np.random.default_rng(opts.seed)
    starts = rng.uniform(-1.0, 1.0, size=(opts.restarts, problem.parameter_dim))
    best = None
    for s in range(opts.restarts):
        x, res, trace = _single_start(problem, starts[s])
        key = (res, tuple(x))
        if best is None or key < best[0]:
            best = (key, x, res, trace)
    _, x, res, trace = best
    return SolveResult(
        best_coords=x,
        best_r_float=_coords_to_tensor(problem, x),
        residual_norm=res,
        converged=res < opts.residual_tolerance,
        trace=trace,
    )


def rationalize_verify(problem: SolveProblem, result: SolveResult) -> SolveResult:
    """Continued-fraction rationalization of the converged coordinates with
    a denominator bound, then exact re-verification of the residual.

    ``exact_verified`` is set only when the exact residual vanishes
    identically and the tensor is exactly skew; otherwise the float
    candidate is preserved and no rationalization is reported.
    """
    if not result.converged:
        raise ValueError("only converged candidates are rationalized")
    bound = problem.options.max_denominator
    coords = [Fraction(float(c)).limit_denominator(bound) for c in result.best_coords]
    n = problem.algebra.dim
    exact = TwoTensor.zero(n)
    for q, tensor in zip(coords, problem.basis):
        if q != 0:
            exact = exact + tensor.scale(q)
    ctx = YbeContext(problem.algebra, problem.u_r)
    residual = yb_residual(ctx, exact)
    if residual.is_zero() and exact.is_skew():
        return replace(result, rationalized=exact, exact_verified=True)
    return replace(result, rationalized=None, exact_verified=False)
