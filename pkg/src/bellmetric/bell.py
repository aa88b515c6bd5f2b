"""Bell operators, CHSH values, the exact 2-qubit oracle, and analytic bounds.

A Bell operator here is the 1/2-normalized combination

    R = (1/2) [ A1 (x) (B1 + B2)  +  A2 (x) (B1 - B2) ]

built from one pair of dichotomic observables per subsystem.  Under this
normalization local hidden variable models predict ``|tr(D R)| <= 1``
and quantum states obey ``|tr(D R)| <= sqrt(2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import ASSERTION_TOL
from .operators import (
    DensityOperator,
    DichotomicObservable,
    HermitianOperator,
    Projection,
    identity,
    operator_norm,
    tensor,
)

SQRT2 = math.sqrt(2.0)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


@dataclass(frozen=True, eq=False)
class CorrelationSettings:
    """The measurement quadruple (A1, A2, B1, B2), two per subsystem."""

    a1: DichotomicObservable
    a2: DichotomicObservable
    b1: DichotomicObservable
    b2: DichotomicObservable

    def __post_init__(self):
        if self.a1.dim != self.a2.dim:
            raise ValueError("A1 and A2 act on different dimensions")
        if self.b1.dim != self.b2.dim:
            raise ValueError("B1 and B2 act on different dimensions")

    @property
    def dims(self) -> tuple[int, int]:
        return (self.a1.dim, self.b1.dim)

    @property
    def all_nontrivial(self) -> bool:
        return all(o.nontrivial for o in (self.a1, self.a2, self.b1, self.b2))


@dataclass(frozen=True, eq=False)
class BellOperator:
    """A correlation quadruple together with its cached matrix."""

    settings: CorrelationSettings
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def settings_from_matrices(a1, a2, b1, b2) -> CorrelationSettings:
    return CorrelationSettings(
        DichotomicObservable(a1),
        DichotomicObservable(a2),
        DichotomicObservable(b1),
        DichotomicObservable(b2),
    )


def bell_matrix(settings: CorrelationSettings) -> np.ndarray:
    a1, a2 = settings.a1.matrix, settings.a2.matrix
    b1, b2 = settings.b1.matrix, settings.b2.matrix
    m = 0.5 * (np.kron(a1, b1 + b2) + np.kron(a2, b1 - b2))
    return (m + m.conj().T) / 2.0


def bell_operator(settings: CorrelationSettings) -> BellOperator:
    """Assemble and cache the Bell operator matrix for a quadruple."""
    m = bell_matrix(settings)
    m.setflags(write=False)
    return BellOperator(settings, m)


def landau_residual(settings: CorrelationSettings) -> float:
    """Operator-norm defect of ``R^2 = I - (1/4)[A1,A2] (x) [B1,B2]``.

    The identity holds exactly for dichotomic observables, so the
    residual is pure floating-point noise; it also forces
    ``norm(R) <= sqrt(2)``.
    """
    a1, a2 = settings.a1.matrix, settings.a2.matrix
    b1, b2 = settings.b1.matrix, settings.b2.matrix
    r = bell_matrix(settings)
    comm_a = a1 @ a2 - a2 @ a1
    comm_b = b1 @ b2 - b2 @ b1
    target = identity(r.shape[0]) - 0.25 * np.kron(comm_a, comm_b)
    return operator_norm(r @ r - target)


def chsh_value(state: DensityOperator, settings: CorrelationSettings) -> float:
    """``tr(D R)`` evaluated by factor contraction, real within 1e-9."""
    d1, d2 = state.require_bipartite()
    if settings.dims != (d1, d2):
        raise ValueError(f"settings dims {settings.dims} do not match state {state.factor_dims}")
    rr = state.matrix.reshape(d1, d2, d1, d2)
    e1 = contract_factor2(rr, (settings.b1.matrix + settings.b2.matrix) / 2.0)
    e2 = contract_factor2(rr, (settings.b1.matrix - settings.b2.matrix) / 2.0)
    value = complex(np.trace(settings.a1.matrix @ e1) + np.trace(settings.a2.matrix @ e2))
    if abs(value.imag) > ASSERTION_TOL:
        raise AssertionError(f"CHSH value has imaginary part {value.imag:.3e}")
    return float(value.real)


def contract_factor2(state_4d: np.ndarray, m2: np.ndarray) -> np.ndarray:
    """Effective factor-1 operator: ``E[i,k] = sum_jl D[(i,j),(k,l)] M[l,j]``.

    Satisfies ``tr(D (A (x) M)) = tr(A E)`` for any factor-1 operator A.
    """
    e = np.einsum("ijkl,lj->ik", state_4d, m2)
    return (e + e.conj().T) / 2.0


def contract_factor1(state_4d: np.ndarray, m1: np.ndarray) -> np.ndarray:
    """Effective factor-2 operator: ``F[j,l] = sum_ik D[(i,j),(k,l)] M[k,i]``."""
    f = np.einsum("ijkl,ki->jl", state_4d, m1)
    return (f + f.conj().T) / 2.0


def compress_bell(bell: BellOperator, p: Projection, q: Projection) -> HermitianOperator:
    """Compress ``R`` to ``(P(x)Q) R (P(x)Q)``.

    For any state supported inside ``ran(P(x)Q)`` the compressed operator
    reproduces the original expectation value exactly.
    """
    pq = tensor(p, q)
    if pq.shape[0] != bell.dim:
        raise ValueError(f"projection block {pq.shape[0]} does not match operator {bell.dim}")
    return HermitianOperator(pq @ bell.matrix @ pq)


def pauli_correlation_matrix(state: DensityOperator) -> np.ndarray:
    """3x3 matrix ``T[i,j] = tr(D sigma_i (x) sigma_j)`` for a 2x2 state."""
    if state.require_bipartite() != (2, 2):
        raise ValueError(f"needs a 2x2 state, got factor_dims {state.factor_dims}")
    t = np.empty((3, 3), dtype=np.float64)
    for i in range(3):
        for j in range(3):
            t[i, j] = float(np.trace(state.matrix @ np.kron(PAULI[i], PAULI[j])).real)
    return t


def horodecki_gamma_2x2(state: DensityOperator) -> float:
    """Exact CHSH coefficient of a two-qubit state.

    Returns ``sqrt(s1^2 + s2^2)`` for the two largest singular values of
    the Pauli correlation matrix.  This closed form is exact on 2x2
    because the nontrivial dichotomic qubit observables are precisely
    the unit spin components; it serves as the independent oracle that
    certifies the see-saw optimizer at small scale.
    """
    s = np.linalg.svd(pauli_correlation_matrix(state), compute_uv=False)
    return float(math.sqrt(s[0] ** 2 + s[1] ** 2))


def _spin(axis: np.ndarray) -> np.ndarray:
    return axis[0] * PAULI[0] + axis[1] * PAULI[1] + axis[2] * PAULI[2]


def horodecki_settings_2x2(state: DensityOperator) -> CorrelationSettings:
    """Optimal qubit settings realizing the oracle value.

    Derived from the singular decomposition ``T = U diag(s) V^T``: the A
    observables are spin components along the two leading left singular
    directions, the B observables mix the right singular directions with
    angle ``atan2(s2, s1)``, which attains ``sqrt(s1^2 + s2^2)``.
    """
    t = pauli_correlation_matrix(state)
    u, s, vt = np.linalg.svd(t)
    theta = math.atan2(s[1], s[0])
    b1_axis = math.cos(theta) * vt[0] + math.sin(theta) * vt[1]
    b2_axis = math.cos(theta) * vt[0] - math.sin(theta) * vt[1]
    b1_axis /= np.linalg.norm(b1_axis)
    b2_axis /= np.linalg.norm(b2_axis)
    return settings_from_matrices(_spin(u[:, 0]), _spin(u[:, 1]), _spin(b1_axis), _spin(b2_axis))


def mixed_factor_bound(d1: int) -> float:
    """CHSH-coefficient cap ``1 - 2/d1`` for states ``(I/d1) (x) D2``.

    Any nontrivial dichotomic observable on a ``d1``-dimensional factor
    has trace of magnitude at most ``d1 - 2``, which caps the attainable
    value regardless of the other factor's state.
    """
    if d1 < 2:
        raise ValueError(f"bound needs factor dimension >= 2, got {d1}")
    return 1.0 - 2.0 / float(d1)


def safe_radius(gamma: float) -> float:
    """Trace-norm radius around a state certified free of CHSH violation.

    Every state within ``(1 - gamma)/sqrt(2)`` of a state with CHSH
    coefficient ``gamma`` keeps its coefficient at most 1, by the
    sqrt(2)-Lipschitz continuity of the coefficient in trace norm.
    """
    if not -ASSERTION_TOL <= gamma <= SQRT2 + ASSERTION_TOL:
        raise ValueError(f"gamma must lie in [0, sqrt(2)], got {gamma}")
    return max(0.0, (1.0 - gamma) / SQRT2)
