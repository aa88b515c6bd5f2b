"""Seeded random generators for states, observables, and settings.

Everything takes a ``numpy.random.Generator`` so experiments replay
bit-for-bit from a recorded seed.
"""

from __future__ import annotations

import numpy as np

from .operators import (
    DensityOperator,
    DichotomicObservable,
    Projection,
    best_dichotomic,
    spectral_sign,
    tensor,
)


def rng_from(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_complex_gaussian(rng, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_hermitian(dim: int, rng) -> np.ndarray:
    g = random_complex_gaussian(rng, (dim, dim))
    return (g + g.conj().T) / 2.0


def random_dichotomic(dim: int, rng, nontrivial: bool = False) -> DichotomicObservable:
    """Spectral sign of a random Gaussian Hermitian (Haar-like coverage)."""
    h = random_hermitian(dim, rng)
    if nontrivial:
        return best_dichotomic(h, require_nontrivial=True)
    return spectral_sign(h)


def random_density(factor_dims, rng, rank: int | None = None) -> DensityOperator:
    """Normalized Wishart-type random density with full support by default."""
    dims = tuple(int(d) for d in factor_dims)
    dim = int(np.prod(dims))
    k = rank if rank is not None else dim
    g = random_complex_gaussian(rng, (dim, k))
    m = g @ g.conj().T
    m /= np.trace(m).real
    return DensityOperator(m, factor_dims=dims)


def random_pure_state(dim: int, rng) -> np.ndarray:
    v = random_complex_gaussian(rng, dim)
    return v / np.linalg.norm(v)


def random_product_density(d1: int, d2: int, rng) -> DensityOperator:
    a = random_density((d1,), rng)
    b = random_density((d2,), rng)
    return DensityOperator(tensor(a, b), factor_dims=(d1, d2))


def random_separable(d1: int, d2: int, rng, terms: int = 20) -> DensityOperator:
    """Random convex mixture of at most ``terms`` pure product states."""
    k = int(rng.integers(1, terms + 1))
    weights = rng.dirichlet(np.ones(k))
    m = np.zeros((d1 * d2, d1 * d2), dtype=np.complex128)
    for w in weights:
        va = random_pure_state(d1, rng)
        vb = random_pure_state(d2, rng)
        v = np.kron(va, vb)
        m += w * np.outer(v, v.conj())
    return DensityOperator(m, factor_dims=(d1, d2))


def random_projection(dim: int, rank: int, rng) -> Projection:
    """Rank-``rank`` projection with Haar-random range."""
    if not 0 < rank <= dim:
        raise ValueError(f"rank must be in 1..{dim}, got {rank}")
    g = random_complex_gaussian(rng, (dim, rank))
    q, _ = np.linalg.qr(g)
    return Projection(q @ q.conj().T)
