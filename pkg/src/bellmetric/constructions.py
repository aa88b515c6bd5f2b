"""Explicit sequences of nonlocal states converging to arbitrary targets.

Three constructions, each indexed by a step parameter ``n``:

* :func:`violating_step` -- mixes a truncation of the target with an
  entangled two-level tail so every step violates the CHSH inequality
  while the sequence converges to the target in trace norm.
* :func:`hidden_nonlocal_step` -- same idea with the tail placed so the
  violation only appears after local filtering (a generalized CHSH
  violation), which works even when one factor stays small.
* :func:`insensitive_mixture_step` -- mixes a nonseparable CHSH-quiet
  state toward a low-coefficient state, certifying a coefficient
  ceiling below 1 by convexity.

Plus the continuous path experiment: a family of reduced states that
stays CHSH-quiet near its product-state endpoint, reported with a
partial-transpose negativity witness (one-sided: zero negativity is
inconclusive, never a separability claim).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bell import (
    SQRT2,
    CorrelationSettings,
    chsh_value,
    horodecki_settings_2x2,
    safe_radius,
    settings_from_matrices,
)
from .config import OPTIMIZER_TOL, VIOLATION_MARGIN
from .operators import (
    DensityOperator,
    Projection,
    basis_projection,
    identity,
    partial_transpose,
    tensor,
    trace_norm,
)
from .seesaw import BellBoundCertificate, seesaw_gamma
from .states import condition, flip_operator, path_vector, reduced, truncate, two_level_pure


@dataclass(frozen=True, eq=False)
class FilterViolation:
    """A generalized CHSH violation revealed by local filter projections."""

    q1: Projection
    q2: Projection
    filtered_state: DensityOperator
    certificate: BellBoundCertificate


@dataclass(frozen=True, eq=False)
class NoViolationFound:
    """Filtering produced no certified violation; the bound found is kept."""

    q1: Projection
    q2: Projection
    filtered_state: DensityOperator
    certificate: BellBoundCertificate


@dataclass(frozen=True, eq=False)
class GammaCeiling:
    """Convexity-certified upper bound on a mixture's CHSH coefficient."""

    ceiling: float
    mixer_gamma: float
    flip_expectation: float


@dataclass(frozen=True, eq=False)
class SequenceStep:
    """One element of an approximating sequence with its witness."""

    n: int
    state: DensityOperator
    witness: object
    distance_to_target: float


@dataclass(frozen=True, eq=False)
class PathPoint:
    """One sampled point of the CHSH-quiet path experiment."""

    lam: float
    distance: float
    gamma_lower: float
    negativity: float
    certified_quiet: bool
    certificate: BellBoundCertificate


def _certificate_from_settings(state: DensityOperator,
                               settings: CorrelationSettings) -> BellBoundCertificate:
    value = min(max(abs(chsh_value(state, settings)), 0.0), SQRT2)
    return BellBoundCertificate(
        gamma_lower=value,
        settings=settings,
        iterations=0,
        restarts_used=0,
        converged=True,
        monotone_trace=(value,),
        seed=None,
    )


def _embed_block(obs2: np.ndarray, dim: int, indices) -> np.ndarray:
    """Place a 2x2 observable on two basis vectors, identity elsewhere."""
    m = identity(dim)
    idx = np.asarray(indices, dtype=int)
    m[np.ix_(idx, idx)] = obs2
    return m


def _tail_settings(d1: int, d2: int, rows, cols) -> CorrelationSettings:
    """CHSH-optimal settings on a correlated two-level tail block.

    The block state is the balanced correlated superposition, so the
    optimal qubit observables come from its correlation-matrix oracle;
    they are embedded to act as the identity off the block.
    """
    block = two_level_pure(2, 2, (0, 0), (1, 1)).projector()
    opt = horodecki_settings_2x2(block)
    return settings_from_matrices(
        _embed_block(opt.a1.matrix, d1, rows),
        _embed_block(opt.a2.matrix, d1, rows),
        _embed_block(opt.b1.matrix, d2, cols),
        _embed_block(opt.b2.matrix, d2, cols),
    )


def violating_step(target: DensityOperator, n: int) -> SequenceStep:
    """Step ``n`` of the CHSH-violating sequence converging to ``target``.

    The state is ``(1 - 1/n) T_n + (1/n) P_n`` where ``T_n`` conditions
    the target on its leading ``n x n`` block and ``P_n`` projects onto a
    balanced superposition over the next two diagonal basis pairs.  The
    witness settings act optimally on that tail block and as the
    identity elsewhere, so the truncated part contributes exactly 1 and
    the certified value is ``1 + (sqrt(2) - 1)/n > 1``.
    """
    d1, d2 = target.require_bipartite()
    if n < 1:
        raise ValueError("sequence index must be >= 1")
    if d1 < n + 2 or d2 < n + 2:
        raise ValueError(
            f"need factor dims >= {n + 2} for step {n}, got {target.factor_dims}"
        )
    truncated = truncate(target, n)
    tail = two_level_pure(d1, d2, (n, n), (n + 1, n + 1)).projector()
    mixed = (1.0 - 1.0 / n) * truncated.matrix + (1.0 / n) * tail.matrix
    state = DensityOperator(mixed, factor_dims=(d1, d2))
    settings = _tail_settings(d1, d2, (n, n + 1), (n, n + 1))
    witness = _certificate_from_settings(state, settings)
    return SequenceStep(
        n=n,
        state=state,
        witness=witness,
        distance_to_target=trace_norm(state.matrix - target.matrix),
    )


def hidden_nonlocal_step(
    target: DensityOperator,
    n: int,
    restarts: int = 20,
    max_iters: int = 200,
    tol: float = OPTIMIZER_TOL,
    seed: int | None = 0,
) -> SequenceStep:
    """Step ``n`` of the hidden-nonlocal sequence converging to ``target``.

    Only the second factor needs headroom: the state mixes a right-factor
    truncation with a balanced superposition across basis pairs
    ``(0, n)`` and ``(1, n+1)``.  Conditioning on the designated filter
    projections recovers that superposition exactly, whose certified
    coefficient is sqrt(2), so every step violates a generalized CHSH
    inequality.
    """
    d1, d2 = target.require_bipartite()
    if n < 1:
        raise ValueError("sequence index must be >= 1")
    if d1 < 2 or d2 < n + 2:
        raise ValueError(
            f"need d1 >= 2 and d2 >= {n + 2} for step {n}, got {target.factor_dims}"
        )
    truncated = truncate(target, n, factor=1)
    tail = two_level_pure(d1, d2, (0, n), (1, n + 1)).projector()
    mixed = (1.0 - 1.0 / n) * truncated.matrix + (1.0 / n) * tail.matrix
    state = DensityOperator(mixed, factor_dims=(d1, d2))
    q1 = basis_projection(d1, (0, 1))
    q2 = basis_projection(d2, (n, n + 1))
    witness = hidden_nonlocality_check(
        state, q1, q2, restarts=restarts, max_iters=max_iters, tol=tol, seed=seed
    )
    return SequenceStep(
        n=n,
        state=state,
        witness=witness,
        distance_to_target=trace_norm(state.matrix - target.matrix),
    )


def insensitive_mixture_step(
    base: DensityOperator,
    mixer: DensityOperator,
    n: int,
    mixer_gamma: float,
) -> SequenceStep:
    """Step ``n`` of a CHSH-insensitive mixture sequence converging to ``base``.

    ``base`` must be CHSH-quiet (coefficient at most 1) and ``mixer``
    must come with evidence ``mixer_gamma < 1``; convexity then caps the
    mixture's coefficient at ``(1 - 1/n) + mixer_gamma/n < 1``, which is
    reported as the certified ceiling.  The block flip expectation is
    recorded as the nonseparability witness.
    """
    if n < 1:
        raise ValueError("sequence index must be >= 1")
    if not 0.0 <= mixer_gamma < 1.0:
        raise ValueError(f"mixer evidence must satisfy 0 <= gamma < 1, got {mixer_gamma}")
    if base.factor_dims != mixer.factor_dims:
        raise ValueError(
            f"factor dims differ: base {base.factor_dims} vs mixer {mixer.factor_dims}"
        )
    d1, d2 = base.require_bipartite()
    mixed = (1.0 - 1.0 / n) * base.matrix + (1.0 / n) * mixer.matrix
    state = DensityOperator(mixed, factor_dims=(d1, d2))
    flip = flip_operator(d1, d2)
    flip_expectation = float(np.trace(state.matrix @ flip.matrix).real)
    ceiling = (1.0 - 1.0 / n) + mixer_gamma / n
    witness = GammaCeiling(
        ceiling=ceiling, mixer_gamma=float(mixer_gamma), flip_expectation=flip_expectation
    )
    return SequenceStep(
        n=n,
        state=state,
        witness=witness,
        distance_to_target=trace_norm(state.matrix - base.matrix),
    )


def _projection_basis(p: Projection) -> np.ndarray:
    """Orthonormal columns spanning the range of a projection."""
    w, v = np.linalg.eigh(p.matrix)
    return v[:, w > 0.5]


def hidden_nonlocality_check(
    state: DensityOperator,
    q1: Projection,
    q2: Projection,
    restarts: int = 20,
    max_iters: int = 200,
    tol: float = OPTIMIZER_TOL,
    seed: int | None = 0,
):
    """Test whether local filters reveal a CHSH violation.

    Conditions the state on ``Q1 (x) Q2`` and bounds the filtered
    state's coefficient with the see-saw; when both filters have rank 2
    the filtered state is effectively two-qubit, so the exact oracle
    settings on the filter block are also tried and the better
    certificate wins.  Returns :class:`FilterViolation` when the bound
    clears 1, :class:`NoViolationFound` (with the bound) otherwise.
    """
    d1, d2 = state.require_bipartite()
    filtered = condition(state, tensor(q1, q2))
    cert = seesaw_gamma(filtered, restarts=restarts, max_iters=max_iters, tol=tol, seed=seed)
    if q1.rank == 2 and q2.rank == 2:
        u1 = _projection_basis(q1)
        u2 = _projection_basis(q2)
        iso = np.kron(u1, u2)
        block = DensityOperator(
            iso.conj().T @ filtered.matrix @ iso, factor_dims=(2, 2)
        )
        opt = horodecki_settings_2x2(block)

        def lift(obs2: np.ndarray, u: np.ndarray, q: Projection) -> np.ndarray:
            return u @ obs2 @ u.conj().T + identity(q.dim) - q.matrix

        settings = settings_from_matrices(
            lift(opt.a1.matrix, u1, q1),
            lift(opt.a2.matrix, u1, q1),
            lift(opt.b1.matrix, u2, q2),
            lift(opt.b2.matrix, u2, q2),
        )
        oracle_cert = _certificate_from_settings(filtered, settings)
        if oracle_cert.gamma_lower > cert.gamma_lower:
            cert = oracle_cert
    cls = FilterViolation if cert.gamma_lower > 1.0 + VIOLATION_MARGIN else NoViolationFound
    return cls(q1=q1, q2=q2, filtered_state=filtered, certificate=cert)


def negativity(state: DensityOperator) -> float:
    """Magnitude sum of negative partial-transpose eigenvalues.

    A one-sided nonseparability witness: positive negativity certifies
    the state nonseparable, zero is inconclusive.
    """
    w = np.linalg.eigvalsh(partial_transpose(state).matrix)
    return float(max(0.0, -np.sum(w[w < 0.0])))


DEFAULT_LAMBDA_GRID = (0.5, 0.25, 0.1, 0.05, 0.01)


def path_experiment(
    lambda_grid=None,
    tail_terms: int = 8,
    restarts: int = 20,
    max_iters: int = 200,
    tol: float = OPTIMIZER_TOL,
    seed: int | None = 0,
) -> list[PathPoint]:
    """Scan the CHSH-quiet path of reduced states.

    For each grid value the three-factor path vector is reduced over its
    first two factors; the report records the trace-norm distance to the
    endpoint state, a see-saw coefficient bound, and the negativity
    witness.  The endpoint has coefficient 0, so every point within
    ``safe_radius(0) = 1/sqrt(2)`` of it is certified CHSH-quiet.
    """
    grid = DEFAULT_LAMBDA_GRID if lambda_grid is None else tuple(float(x) for x in lambda_grid)
    if any(not 0.0 <= x <= 1.0 for x in grid):
        raise ValueError(f"grid values must lie in [0, 1], got {grid}")
    endpoint = reduced(path_vector(0.0, tail_terms), keep=(0, 1))
    radius = safe_radius(0.0)
    points = []
    for lam in grid:
        rho = reduced(path_vector(lam, tail_terms), keep=(0, 1))
        cert = seesaw_gamma(rho, restarts=restarts, max_iters=max_iters, tol=tol, seed=seed)
        distance = trace_norm(rho.matrix - endpoint.matrix)
        points.append(
            PathPoint(
                lam=lam,
                distance=distance,
                gamma_lower=cert.gamma_lower,
                negativity=negativity(rho),
                certified_quiet=bool(distance < radius),
                certificate=cert,
            )
        )
    return points
