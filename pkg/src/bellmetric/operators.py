"""Dense complex operator types and the spectral primitives built on them.

Operators are immutable wrappers around square ``complex128`` matrices.
Construction validates the class invariants (hermiticity, positivity,
unit trace, ...) using the structural tolerance from
:mod:`bellmetric.config`; the wrapped array is made read-only so values
can be shared freely between threads.

All operations are pure functions.  Factor indices are 0-based
throughout the API; serialized files use the same convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import ASSERTION_TOL, SIGN_TOL, STRUCTURAL_TOL
from . import validation as val


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class ComplexOperator:
    """A bounded operator on a finite-dimensional space, stored dense."""

    matrix: np.ndarray

    def __post_init__(self):
        m = val.as_complex_matrix(self.matrix, type(self).__name__)
        self._validate(m)
        object.__setattr__(self, "matrix", _freeze(m))

    def _validate(self, m: np.ndarray) -> None:
        pass

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.array(self.matrix, dtype=dtype or np.complex128)


@dataclass(frozen=True, eq=False)
class HermitianOperator(ComplexOperator):
    """Self-adjoint operator; entries within 1e-10 of the conjugate transpose."""

    def _validate(self, m: np.ndarray) -> None:
        val.check_hermitian(m, name=type(self).__name__)


@dataclass(frozen=True, eq=False)
class Projection(HermitianOperator):
    """Orthogonal projection: Hermitian and idempotent."""

    def _validate(self, m: np.ndarray) -> None:
        super()._validate(m)
        val.check_idempotent(m, name=type(self).__name__)

    @property
    def rank(self) -> int:
        return int(round(float(np.trace(self.matrix).real)))


@dataclass(frozen=True, eq=False)
class DichotomicObservable(HermitianOperator):
    """Self-adjoint unitary (a generalized spin component).

    ``nontrivial`` records whether both eigenvalue signs occur, i.e.
    whether the observable differs from +/-identity.  Trivial
    observables never witness a CHSH violation, so the flag is carried
    through to certificates.
    """

    nontrivial: bool = field(init=False, default=False)

    def _validate(self, m: np.ndarray) -> None:
        super()._validate(m)
        val.check_involution(m, name=type(self).__name__)

    def __post_init__(self):
        super().__post_init__()
        tr = float(np.trace(self.matrix).real)
        # trace == +/-dim exactly characterizes A == +/-I for involutions
        derived = abs(abs(tr) - self.dim) > 0.5
        object.__setattr__(self, "nontrivial", bool(derived))


@dataclass(frozen=True, eq=False)
class DensityOperator(HermitianOperator):
    """Positive, trace-1 operator with declared tensor factor dimensions."""

    factor_dims: tuple[int, ...] = field(default=())

    def _validate(self, m: np.ndarray) -> None:
        super()._validate(m)
        val.check_trace_one(m, name=type(self).__name__)
        val.check_positive(m, name=type(self).__name__)

    def __post_init__(self):
        super().__post_init__()
        dims = self.factor_dims if self.factor_dims else (self.matrix.shape[0],)
        object.__setattr__(self, "factor_dims", val.check_factor_dims(dims, self.dim))

    def require_bipartite(self) -> tuple[int, int]:
        if len(self.factor_dims) != 2:
            raise ValueError(f"expected a bipartite state, got factor_dims {self.factor_dims}")
        return self.factor_dims


@dataclass(frozen=True, eq=False)
class PureVector:
    """Unit vector with declared tensor factor dimensions."""

    amplitudes: np.ndarray
    factor_dims: tuple[int, ...] = ()

    def __post_init__(self):
        v = val.as_complex_vector(self.amplitudes, "PureVector")
        val.check_unit_norm(v, name="PureVector")
        dims = self.factor_dims if self.factor_dims else (v.size,)
        object.__setattr__(self, "factor_dims", val.check_factor_dims(dims, v.size))
        object.__setattr__(self, "amplitudes", _freeze(v))

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def projector(self) -> DensityOperator:
        """Rank-1 density operator onto the ray this vector generates."""
        m = np.outer(self.amplitudes, self.amplitudes.conj())
        return DensityOperator(m, factor_dims=self.factor_dims)


# ---------------------------------------------------------------------------
# operations


def tensor(a, b) -> np.ndarray:
    """Kronecker product with ``a`` indexing the left factor."""
    am = np.asarray(getattr(a, "matrix", a), dtype=np.complex128)
    bm = np.asarray(getattr(b, "matrix", b), dtype=np.complex128)
    return np.kron(am, bm)


def partial_trace(state: DensityOperator, keep: int) -> DensityOperator:
    """Reduce a bipartite state to one factor.

    Parameters
    ----------
    state : DensityOperator
        Bipartite state with ``factor_dims == (d1, d2)``.
    keep : int
        0 keeps the left factor, 1 the right.

    Returns
    -------
    DensityOperator
        The reduced state on the kept factor; trace is preserved.
    """
    d1, d2 = state.require_bipartite()
    r = state.matrix.reshape(d1, d2, d1, d2)
    if keep == 0:
        m = np.einsum("ijkj->ik", r)
        return DensityOperator(m, factor_dims=(d1,))
    if keep == 1:
        m = np.einsum("ijil->jl", r)
        return DensityOperator(m, factor_dims=(d2,))
    raise ValueError(f"keep must be 0 or 1, got {keep}")


def trace_norm(a) -> float:
    """Sum of singular values (sum of |eigenvalues| for Hermitian input)."""
    m = val.as_complex_matrix(a, "trace_norm argument")
    return float(np.sum(np.linalg.svd(m, compute_uv=False)))


def operator_norm(a) -> float:
    """Largest singular value."""
    m = val.as_complex_matrix(a, "operator_norm argument")
    return float(np.linalg.svd(m, compute_uv=False)[0])


def expectation(state: DensityOperator, observable) -> float:
    """Real part of ``trace(D A)``; the imaginary part must be negligible."""
    om = np.asarray(getattr(observable, "matrix", observable), dtype=np.complex128)
    val.check_same_dim(state.matrix, om, "state and observable")
    value = complex(np.trace(state.matrix @ om))
    if abs(value.imag) > ASSERTION_TOL:
        raise AssertionError(f"expectation has imaginary part {value.imag:.3e}")
    return float(value.real)


def spectral_sign(h, sign_tol: float = SIGN_TOL) -> DichotomicObservable:
    """Map a Hermitian operator to the nearest dichotomic observable.

    Keeps the eigenvectors of ``h`` and replaces each eigenvalue by its
    sign; eigenvalues of magnitude below ``sign_tol`` map to +1, so the
    result is always a valid self-adjoint unitary (the zero matrix maps
    to the identity).
    """
    m = val.as_complex_matrix(h, "spectral_sign argument")
    val.check_hermitian(m, name="spectral_sign argument")
    w, v = np.linalg.eigh(m)
    signs = np.where(np.abs(w) < sign_tol, 1.0, np.sign(w))
    a = (v * signs) @ v.conj().T
    return DichotomicObservable((a + a.conj().T) / 2.0)


def best_dichotomic(effective: np.ndarray, require_nontrivial: bool = True) -> DichotomicObservable:
    """Dichotomic observable maximizing ``trace(A @ effective)``.

    The unconstrained maximizer is the spectral sign of ``effective``.
    With ``require_nontrivial`` the maximization runs over observables
    distinct from +/-identity: when every eigenvalue sign agrees, the
    eigendirection of least magnitude is flipped, which is the exact
    constrained optimum (it costs twice the smallest |eigenvalue|).
    """
    m = np.asarray(effective, dtype=np.complex128)
    if require_nontrivial and m.shape[0] == 2:
        # closed form: the nontrivial qubit optimum is the unit spin
        # component along the traceless (Bloch) part of the effective
        # operator, or a canonical z-component when that part vanishes
        bx = m[0, 1].real
        by = -m[0, 1].imag
        bz = 0.5 * (m[0, 0].real - m[1, 1].real)
        norm = np.sqrt(bx * bx + by * by + bz * bz)
        if norm < SIGN_TOL:
            bx, by, bz, norm = 0.0, 0.0, 1.0, 1.0
        a = np.array(
            [[bz, bx - 1j * by], [bx + 1j * by, -bz]], dtype=np.complex128
        ) / norm
        return DichotomicObservable(a)
    w, v = np.linalg.eigh(m)
    signs = np.where(np.abs(w) < SIGN_TOL, 1.0, np.sign(w))
    if require_nontrivial and (np.all(signs > 0) or np.all(signs < 0)):
        signs[int(np.argmin(np.abs(w)))] *= -1.0
    a = (v * signs) @ v.conj().T
    return DichotomicObservable((a + a.conj().T) / 2.0)


def partial_transpose(state: DensityOperator, factor: int = 1) -> HermitianOperator:
    """Transpose one tensor factor of a bipartite state."""
    d1, d2 = state.require_bipartite()
    r = state.matrix.reshape(d1, d2, d1, d2)
    if factor == 0:
        m = np.transpose(r, (2, 1, 0, 3)).reshape(d1 * d2, d1 * d2)
    elif factor == 1:
        m = np.transpose(r, (0, 3, 2, 1)).reshape(d1 * d2, d1 * d2)
    else:
        raise ValueError(f"factor must be 0 or 1, got {factor}")
    return HermitianOperator(m)


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=np.complex128)


def basis_projection(dim: int, indices) -> Projection:
    """Projection onto the span of the given coordinate basis vectors."""
    idx = sorted(set(int(i) for i in indices))
    if idx and (idx[0] < 0 or idx[-1] >= dim):
        raise ValueError(f"basis indices {idx} out of range for dimension {dim}")
    m = np.zeros((dim, dim), dtype=np.complex128)
    for i in idx:
        m[i, i] = 1.0
    return Projection(m)
