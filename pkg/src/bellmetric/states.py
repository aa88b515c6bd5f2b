"""Constructors for named states and the state-transforming maps.

Infinite-dimensional factors are represented by explicit finite cutoffs
chosen per experiment; every constructor takes the dimensions it acts
on.  Basis indices are 0-based.
"""

from __future__ import annotations

import math

import numpy as np

from .config import CONDITION_TOL
from .operators import (
    ComplexOperator,
    DensityOperator,
    HermitianOperator,
    PureVector,
    basis_projection,
    identity,
    tensor,
)
from .validation import NullConditioningError, as_complex_matrix


def maximally_mixed(d1: int, d2: int) -> DensityOperator:
    """The state ``I/(d1*d2)`` on a ``d1 x d2`` bipartite space."""
    if d1 < 1 or d2 < 1:
        raise ValueError("factor dimensions must be >= 1")
    dim = d1 * d2
    return DensityOperator(identity(dim) / dim, factor_dims=(d1, d2))


def two_level_pure(d1: int, d2: int, pair_a, pair_b, amplitudes=None) -> PureVector:
    """Unit vector supported on exactly two product basis vectors.

    ``pair_a`` and ``pair_b`` are distinct ``(i, j)`` basis index pairs,
    0-based; ``amplitudes`` defaults to the balanced ``(1/sqrt2, 1/sqrt2)``.
    """
    ia, ja = (int(x) for x in pair_a)
    ib, jb = (int(x) for x in pair_b)
    for i, j in ((ia, ja), (ib, jb)):
        if not (0 <= i < d1 and 0 <= j < d2):
            raise ValueError(f"basis pair ({i},{j}) out of range for {d1}x{d2}")
    if (ia, ja) == (ib, jb):
        raise ValueError("the two basis pairs must be distinct")
    if amplitudes is None:
        amplitudes = (1 / math.sqrt(2), 1 / math.sqrt(2))
    ca, cb = (complex(c) for c in amplitudes)
    v = np.zeros(d1 * d2, dtype=np.complex128)
    v[ia * d2 + ja] = ca
    v[ib * d2 + jb] = cb
    return PureVector(v, factor_dims=(d1, d2))


def singlet_projector() -> DensityOperator:
    """Rank-1 projection onto ``(|01> - |10>)/sqrt2`` on the 2x2 space."""
    v = np.zeros(4, dtype=np.complex128)
    v[1] = 1 / math.sqrt(2)
    v[2] = -1 / math.sqrt(2)
    return DensityOperator(np.outer(v, v.conj()), factor_dims=(2, 2))


def flip_operator(d1: int, d2: int, rows=(0, 1), cols=(0, 1)) -> HermitianOperator:
    """Swap on a designated 2x2 product block, zero elsewhere.

    Maps ``e_{rows[i]} (x) f_{cols[j]}`` to ``e_{rows[j]} (x) f_{cols[i]}``
    and annihilates the block's orthocomplement.  With ``d1 == d2 == 2``
    and the default block this is the full permutation operator, which
    has trace 2 and squares to the identity; separable states always
    give it a nonnegative expectation.
    """
    r = tuple(int(x) for x in rows)
    c = tuple(int(x) for x in cols)
    if len(set(r)) != 2 or len(set(c)) != 2:
        raise ValueError("block must be spanned by two distinct indices per factor")
    if not (0 <= min(r) and max(r) < d1 and 0 <= min(c) and max(c) < d2):
        raise ValueError(f"block {r}x{c} out of range for {d1}x{d2}")
    m = np.zeros((d1 * d2, d1 * d2), dtype=np.complex128)
    for i in range(2):
        for j in range(2):
            m[r[j] * d2 + c[i], r[i] * d2 + c[j]] = 1.0
    return HermitianOperator(m)


def werner22() -> DensityOperator:
    """The 2x2 Werner state ``I/8 + P_singlet/2``.

    Equals ``(1/8) I + (1/4)(I - U)`` for the permutation operator ``U``;
    both forms agree entrywise because ``U = I - 2 P_singlet``.
    """
    m = identity(4) / 8.0 + singlet_projector().matrix / 2.0
    return DensityOperator(m, factor_dims=(2, 2))


def embedded_werner(d1: int, d2: int) -> DensityOperator:
    """The 2x2 Werner state embedded in the top-left block of ``d1 x d2``.

    Built as ``(1/8)(P(x)Q) + (1/4)[(P(x)Q) - U']`` where ``P``, ``Q``
    project onto the first two basis vectors of each factor and ``U'``
    is the block swap; the range lies inside the spanned 2x2 subspace.
    """
    if d1 < 2 or d2 < 2:
        raise ValueError("embedding requires both factor dimensions >= 2")
    pq = tensor(basis_projection(d1, (0, 1)), basis_projection(d2, (0, 1)))
    uprime = flip_operator(d1, d2).matrix
    m = pq / 8.0 + (pq - uprime) / 4.0
    return DensityOperator(m, factor_dims=(d1, d2))


def condition(state: DensityOperator, operator) -> DensityOperator:
    """Post-selection map ``D -> A D A* / trace(A D A*)``.

    Raises
    ------
    NullConditioningError
        When ``trace(A D A*)`` falls below the conditioning tolerance,
        i.e. the operator (numerically) annihilates the state.
    """
    a = as_complex_matrix(operator, "conditioning operator")
    if a.shape[0] != state.dim:
        raise ValueError(f"dimension mismatch: operator {a.shape[0]} vs state {state.dim}")
    m = a @ state.matrix @ a.conj().T
    weight = float(np.trace(m).real)
    if weight <= CONDITION_TOL:
        raise NullConditioningError(
            f"conditioning is null: trace(A D A*) = {weight:.3e} <= {CONDITION_TOL:.0e}"
        )
    m = m / weight
    m = (m + m.conj().T) / 2.0
    return DensityOperator(m, factor_dims=state.factor_dims)


def conditioning_weight(state: DensityOperator, operator) -> float:
    """``trace(A D A*)``, the normalization absorbed by :func:`condition`."""
    a = as_complex_matrix(operator, "conditioning operator")
    return float(np.trace(a @ state.matrix @ a.conj().T).real)


def truncate(state: DensityOperator, n: int, factor: int | None = None) -> DensityOperator:
    """Condition a bipartite state on the first ``n`` basis vectors.

    With ``factor=None`` both factors are cut to their leading ``n``
    basis vectors; ``factor=0`` or ``factor=1`` cuts only that factor.
    The trace-norm distance to the original state shrinks to zero as
    ``n`` approaches the full dimensions.
    """
    d1, d2 = state.require_bipartite()
    if n < 1:
        raise ValueError("truncation size must be >= 1")
    p1 = basis_projection(d1, range(min(n, d1))).matrix if factor in (None, 0) else identity(d1)
    p2 = basis_projection(d2, range(min(n, d2))).matrix if factor in (None, 1) else identity(d2)
    return condition(state, np.kron(p1, p2))


def reduced(vector: PureVector, keep) -> DensityOperator:
    """Reduced density operator of a pure vector on the kept factors.

    ``keep`` lists 0-based factor indices (order-insensitive); all other
    factors are traced out.  The result is pure exactly when the vector
    is a product across the kept/traced cut.
    """
    dims = vector.factor_dims
    kept = sorted(set(int(k) for k in keep))
    if not kept or any(k < 0 or k >= len(dims) for k in kept):
        raise ValueError(f"keep indices {keep} invalid for {len(dims)} factors")
    traced = [i for i in range(len(dims)) if i not in kept]
    psi = vector.amplitudes.reshape(dims)
    psi = np.moveaxis(psi, kept + traced, range(len(dims)))
    dk = int(np.prod([dims[i] for i in kept]))
    dt = int(np.prod([dims[i] for i in traced])) if traced else 1
    m = psi.reshape(dk, dt)
    rho = m @ m.conj().T
    return DensityOperator(rho, factor_dims=tuple(dims[i] for i in kept))


def path_vector(lam: float, tail_terms: int = 8, dims=None) -> PureVector:
    """Three-factor unit vector tracing a CHSH-quiet path of reduced states.

    At ``lam = 0`` the vector reduces (over factors 0 and 1) to the
    product state ``(P/2) (x) (I/2)``, whose CHSH coefficient vanishes;
    for ``lam > 0`` an orthogonal entangling component with geometrically
    decaying weights is blended in, keeping unit norm exactly because
    ``(1-lam)^2 + lam(2-lam) = 1``.

    The infinite geometric tail is cut at ``tail_terms`` terms and
    renormalized; the discarded weight is ``2**-tail_terms``.  Minimal
    dimensions are ``(2*tail_terms + 2, 2, max(4, tail_terms))``.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"path parameter must lie in [0, 1], got {lam}")
    n = int(tail_terms)
    if n < 1:
        raise ValueError("tail_terms must be >= 1")
    d1_min, d3_min = 2 * n + 2, max(4, n)
    if dims is None:
        d1, d2, d3 = d1_min, 2, d3_min
    else:
        d1, d2, d3 = (int(d) for d in dims)
        if d1 < d1_min or d2 != 2 or d3 < d3_min:
            raise ValueError(
                f"dims {dims} too small for {n} tail terms; need (>= {d1_min}, 2, >= {d3_min})"
            )

    def unit(i, j, k):
        v = np.zeros(d1 * d2 * d3, dtype=np.complex128)
        v[(i * d2 + j) * d3 + k] = 1.0
        return v

    v0 = 0.5 * (unit(0, 0, 0) + unit(1, 1, 1) + unit(1, 0, 2) + unit(0, 1, 3))
    u = np.zeros(d1 * d2 * d3, dtype=np.complex128)
    for m in range(1, n + 1):
        w = 2.0 ** (-(m + 1) / 2.0)
        u += w * (unit(2 * m, 0, m - 1) + unit(2 * m + 1, 1, m - 1))
    u /= np.linalg.norm(u)
    v = (1.0 - lam) * v0 + math.sqrt(lam * (2.0 - lam)) * u
    return PureVector(v, factor_dims=(d1, d2, d3))
