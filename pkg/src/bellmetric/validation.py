"""Input validation helpers shared by every constructor and operation.

All helpers accept either a raw array-like or one of the operator
wrapper types and return plain ``numpy`` arrays; the wrapper classes in
:mod:`bellmetric.operators` call them from their constructors.
"""

from __future__ import annotations

import numpy as np

from .config import STRUCTURAL_TOL


class NullConditioningError(ValueError):
    """Raised when conditioning a state on an operator annihilates it."""


def as_complex_matrix(value, name: str = "operator") -> np.ndarray:
    """Coerce to a square, finite, complex128 matrix (always a copy)."""
    m = np.array(getattr(value, "matrix", value), dtype=np.complex128, order="C")
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise ValueError(f"{name} must have positive dimension")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise ValueError(f"{name} contains non-finite entries")
    return m


def as_complex_vector(value, name: str = "vector") -> np.ndarray:
    """Coerce to a finite 1-d complex128 array (always a copy)."""
    v = np.array(getattr(value, "amplitudes", value), dtype=np.complex128, order="C")
    if v.ndim != 1 or v.size < 1:
        raise ValueError(f"{name} must be a nonempty 1-d array, got shape {v.shape}")
    if not np.all(np.isfinite(v.view(np.float64))):
        raise ValueError(f"{name} contains non-finite entries")
    return v


def max_abs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


def check_hermitian(m: np.ndarray, tol: float = STRUCTURAL_TOL, name: str = "operator") -> None:
    dev = max_abs(m - m.conj().T)
    if dev > tol:
        raise ValueError(f"{name} is not Hermitian: max deviation {dev:.3e} > {tol:.0e}")


def check_trace_one(m: np.ndarray, tol: float = STRUCTURAL_TOL, name: str = "state") -> None:
    tr = complex(np.trace(m))
    if abs(tr - 1.0) > tol:
        raise ValueError(f"{name} trace {tr} is not 1 within {tol:.0e}")


def check_positive(m: np.ndarray, tol: float = STRUCTURAL_TOL, name: str = "state") -> None:
    lo = float(np.linalg.eigvalsh(m)[0])
    if lo < -tol:
        raise ValueError(f"{name} has negative eigenvalue {lo:.3e} below -{tol:.0e}")


def check_idempotent(m: np.ndarray, tol: float = STRUCTURAL_TOL, name: str = "projection") -> None:
    dev = max_abs(m @ m - m)
    if dev > tol:
        raise ValueError(f"{name} is not idempotent: max |P^2-P| = {dev:.3e} > {tol:.0e}")


def check_involution(m: np.ndarray, tol: float = STRUCTURAL_TOL, name: str = "observable") -> None:
    dev = max_abs(m @ m - np.eye(m.shape[0]))
    if dev > tol:
        raise ValueError(f"{name} does not square to identity: max dev {dev:.3e} > {tol:.0e}")


def check_unit_norm(v: np.ndarray, tol: float = STRUCTURAL_TOL, name: str = "vector") -> None:
    nrm = float(np.linalg.norm(v))
    if abs(nrm - 1.0) > tol:
        raise ValueError(f"{name} has norm {nrm}, not 1 within {tol:.0e}")


def check_factor_dims(dims, dim: int) -> tuple[int, ...]:
    """Validate tensor factor dimensions against the total dimension."""
    fd = tuple(int(d) for d in dims)
    if len(fd) < 1 or any(d < 1 for d in fd):
        raise ValueError(f"factor_dims must be positive integers, got {dims}")
    total = int(np.prod(fd))
    if total != dim:
        raise ValueError(f"factor_dims {fd} multiply to {total}, expected {dim}")
    return fd


def check_same_dim(a, b, what: str = "operators") -> None:
    da = a.shape[0] if hasattr(a, "shape") else a.dim
    db = b.shape[0] if hasattr(b, "shape") else b.dim
    if da != db:
        raise ValueError(f"dimension mismatch between {what}: {da} vs {db}")
