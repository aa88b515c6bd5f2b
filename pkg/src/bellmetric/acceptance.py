"""The package's acceptance gate: nine self-contained checks.

Each check pins its tolerances and seeds, measures its own runtime
against a fixed budget, and reports a single pass/fail result.  The
pytest acceptance module and the CLI ``selftest`` command both run
exactly these functions, so CI and installed copies verify the same
contract.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .bell import (
    SQRT2,
    CorrelationSettings,
    bell_operator,
    compress_bell,
    horodecki_gamma_2x2,
    landau_residual,
    mixed_factor_bound,
    safe_radius,
)
from .constructions import (
    DEFAULT_LAMBDA_GRID,
    FilterViolation,
    hidden_nonlocal_step,
    path_experiment,
    violating_step,
)
from .operators import (
    DensityOperator,
    basis_projection,
    expectation,
    operator_norm,
    trace_norm,
)
from .sampling import random_density, random_dichotomic, rng_from
from .seesaw import seesaw_gamma
from .states import embedded_werner, flip_operator, path_vector, reduced, singlet_projector, two_level_pure, werner22


@dataclass(frozen=True)
class CriterionResult:
    index: int
    name: str
    passed: bool
    elapsed: float
    budget: float
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] {self.index}. {self.name}: {self.detail} "
            f"({self.elapsed:.2f}s, budget {self.budget:.0f}s)"
        )


def _result(index, name, budget, start, failures, detail_ok) -> CriterionResult:
    elapsed = time.perf_counter() - start
    within = elapsed < budget
    if not within:
        failures = failures + [f"runtime {elapsed:.2f}s exceeds {budget:.0f}s"]
    detail = detail_ok if not failures else "; ".join(failures)
    return CriterionResult(index, name, not failures, elapsed, budget, detail)


def check_werner_witnesses() -> CriterionResult:
    """Werner state: flip expectation -1/4 and spectrum {1/8 x3, 5/8}."""
    budget = 1e-3
    # warm construction so the timed section measures the witnesses only
    werner22(), flip_operator(2, 2)
    start = time.perf_counter()
    w = werner22()
    u = flip_operator(2, 2)
    witness = expectation(w, u)
    eigs = np.linalg.eigvalsh(w.matrix)
    failures = []
    if abs(witness + 0.25) > 1e-12:
        failures.append(f"flip witness {witness} != -0.25 within 1e-12")
    expected = np.array([0.125, 0.125, 0.125, 0.625])
    dev = float(np.max(np.abs(np.sort(eigs) - expected)))
    if dev > 1e-12:
        failures.append(f"eigenvalue deviation {dev:.2e} > 1e-12")
    return _result(
        1, "Werner witnesses", budget, start, failures,
        f"flip witness {witness:+.3f}, spectrum deviation {dev:.1e}",
    )


def check_oracle_agreement() -> CriterionResult:
    """See-saw matches the exact two-qubit oracle on 200 random states."""
    budget = 30.0
    start = time.perf_counter()
    rng = rng_from(20220)
    failures = []
    worst = 0.0
    for k in range(200):
        state = random_density((2, 2), rng)
        gap = abs(horodecki_gamma_2x2(state) - seesaw_gamma(state, restarts=20, seed=k).gamma_lower)
        worst = max(worst, gap)
        if gap > 1e-4:
            failures.append(f"state {k}: oracle gap {gap:.2e} > 1e-4")
            break
    g_singlet = seesaw_gamma(singlet_projector(), restarts=20, seed=1).gamma_lower
    if abs(g_singlet - SQRT2) > 1e-6:
        failures.append(f"singlet bound {g_singlet} != sqrt(2) within 1e-6")
    g_werner = seesaw_gamma(werner22(), restarts=20, seed=2).gamma_lower
    if abs(g_werner - 1 / SQRT2) > 1e-6 or g_werner > 1 / SQRT2 + 1e-6:
        failures.append(f"Werner bound {g_werner} != 2^-1/2 within 1e-6")
    return _result(
        2, "Oracle agreement", budget, start, failures,
        f"worst oracle gap {worst:.2e}, singlet {g_singlet:.9f}, Werner {g_werner:.9f}",
    )


def check_landau_suite() -> CriterionResult:
    """Dichotomic Bell operators satisfy the square identity and norm cap."""
    budget = 60.0
    start = time.perf_counter()
    rng = rng_from(303)
    dims = ((2, 2), (3, 4), (4, 4))
    failures = []
    worst_res, worst_norm = 0.0, 0.0
    for k in range(500):
        da, db = dims[k % len(dims)]
        settings = CorrelationSettings(
            random_dichotomic(da, rng), random_dichotomic(da, rng),
            random_dichotomic(db, rng), random_dichotomic(db, rng),
        )
        res = landau_residual(settings)
        nrm = operator_norm(bell_operator(settings).matrix)
        worst_res = max(worst_res, res)
        worst_norm = max(worst_norm, nrm)
        if res > 1e-9:
            failures.append(f"settings {k}: square-identity residual {res:.2e} > 1e-9")
            break
        if nrm > SQRT2 + 1e-9:
            failures.append(f"settings {k}: norm {nrm} exceeds sqrt(2) + 1e-9")
            break
    return _result(
        3, "Bell operator square identity", budget, start, failures,
        f"500 settings, worst residual {worst_res:.2e}, worst norm {worst_norm:.9f}",
    )


def check_violating_sequence() -> CriterionResult:
    """Violating approximants: exact step values and shrinking distances."""
    budget = 120.0
    start = time.perf_counter()
    rng = rng_from(404)
    failures = []
    for t in range(10):
        target = random_density((12, 12), rng)
        distances = {}
        for n in range(2, 11):
            step = violating_step(target, n)
            value = step.witness.gamma_lower
            expect_value = 1.0 + (SQRT2 - 1.0) / n
            if abs(value - expect_value) > 1e-6:
                failures.append(f"target {t} n={n}: value {value} != {expect_value} within 1e-6")
            if value <= 1.0:
                failures.append(f"target {t} n={n}: value {value} does not violate")
            distances[n] = step.distance_to_target
        if not distances[10] < distances[2]:
            failures.append(
                f"target {t}: distance did not shrink ({distances[2]:.3f} -> {distances[10]:.3f})"
            )
        if failures:
            break
    return _result(
        4, "Dense violating sequence", budget, start, failures,
        "10 targets on 12x12, step values 1 + (sqrt(2)-1)/n exact to 1e-6, distances shrink",
    )


def check_hidden_nonlocal_sequence() -> CriterionResult:
    """Filtering the approximants recovers the entangled tail exactly."""
    budget = 120.0
    start = time.perf_counter()
    rng = rng_from(505)
    failures = []
    for t in range(10):
        target = random_density((3, 16), rng)
        for n in range(2, 11):
            step = hidden_nonlocal_step(target, n, restarts=20, seed=100 * t + n)
            witness = step.witness
            tail = two_level_pure(3, 16, (0, n), (1, n + 1)).projector()
            ident = float(np.max(np.abs(witness.filtered_state.matrix - tail.matrix)))
            if ident > 1e-10:
                failures.append(f"target {t} n={n}: filter identity error {ident:.2e} > 1e-10")
            if not isinstance(witness, FilterViolation):
                failures.append(f"target {t} n={n}: no violation found")
            value = witness.certificate.gamma_lower
            if abs(value - SQRT2) > 1e-6:
                failures.append(f"target {t} n={n}: filtered bound {value} != sqrt(2) within 1e-6")
            if failures:
                break
        if failures:
            break
    return _result(
        5, "Hidden nonlocal sequence", budget, start, failures,
        "10 targets on 3x16, filter identity exact, filtered bound sqrt(2) to 1e-6",
    )


def check_mixed_factor_neighborhoods() -> CriterionResult:
    """States with a maximally mixed factor respect the 1 - 2/d cap."""
    budget = 180.0
    start = time.perf_counter()
    rng = rng_from(606)
    failures = []
    observed = []
    for d1 in (2, 3, 4):
        cap = mixed_factor_bound(d1)
        for k in range(5):
            other = random_density((6,), rng)
            state = DensityOperator(
                np.kron(np.eye(d1) / d1, other.matrix), factor_dims=(d1, 6)
            )
            g = seesaw_gamma(state, restarts=20, seed=10 * d1 + k).gamma_lower
            observed.append(g)
            if g > cap + 1e-4:
                failures.append(f"d1={d1} sample {k}: bound {g} exceeds cap {cap} + 1e-4")
            if d1 == 2 and g > 1e-4:
                failures.append(f"d1=2 sample {k}: bound {g} > 1e-4")
    return _result(
        6, "Mixed-factor neighborhoods", budget, start, failures,
        f"15 states, all bounds within caps (max observed {max(observed):.6f})",
    )


def check_lipschitz_convexity() -> CriterionResult:
    """The two-qubit coefficient is sqrt(2)-Lipschitz and convex."""
    budget = 60.0
    start = time.perf_counter()
    rng = rng_from(707)
    failures = []
    for k in range(500):
        a = random_density((2, 2), rng)
        b = random_density((2, 2), rng)
        lhs = abs(horodecki_gamma_2x2(a) - horodecki_gamma_2x2(b))
        rhs = SQRT2 * trace_norm(a.matrix - b.matrix)
        if lhs > rhs + 1e-8:
            failures.append(f"pair {k}: Lipschitz violated ({lhs} > {rhs})")
            break
    for k in range(500):
        a = random_density((2, 2), rng)
        b = random_density((2, 2), rng)
        lam = float(rng.uniform())
        mix = DensityOperator(lam * a.matrix + (1 - lam) * b.matrix, factor_dims=(2, 2))
        lhs = horodecki_gamma_2x2(mix)
        rhs = lam * horodecki_gamma_2x2(a) + (1 - lam) * horodecki_gamma_2x2(b)
        if lhs > rhs + 1e-8:
            failures.append(f"mixture {k}: convexity violated ({lhs} > {rhs})")
            break
    return _result(
        7, "Lipschitz and convexity", budget, start, failures,
        "500 pairs and 500 mixtures on 2x2 via the exact oracle",
    )


def check_block_compression() -> CriterionResult:
    """Compressing Bell operators to the embedded block preserves values."""
    budget = 10.0
    start = time.perf_counter()
    rng = rng_from(808)
    failures = []
    state = embedded_werner(3, 4)
    flip = flip_operator(3, 4)
    witness = expectation(state, flip)
    if abs(witness + 0.25) > 1e-12:
        failures.append(f"block flip witness {witness} != -0.25 within 1e-12")
    p = basis_projection(3, (0, 1))
    q = basis_projection(4, (0, 1))
    worst = 0.0
    for k in range(100):
        settings = CorrelationSettings(
            random_dichotomic(3, rng), random_dichotomic(3, rng),
            random_dichotomic(4, rng), random_dichotomic(4, rng),
        )
        bell = bell_operator(settings)
        compressed = compress_bell(bell, p, q)
        gap = abs(abs(expectation(state, bell.matrix)) - abs(expectation(state, compressed)))
        worst = max(worst, gap)
        if gap > 1e-10:
            failures.append(f"operator {k}: compression gap {gap:.2e} > 1e-10")
            break
    return _result(
        8, "Block compression", budget, start, failures,
        f"100 operators on 3x4, worst compression gap {worst:.2e}, flip witness {witness:+.3f}",
    )


def check_quiet_path() -> CriterionResult:
    """The reduced-state path stays certified CHSH-quiet near its endpoint."""
    budget = 60.0
    start = time.perf_counter()
    failures = []
    tail = 8
    endpoint = reduced(path_vector(0.0, tail), keep=(0, 1))
    d1 = endpoint.factor_dims[0]
    product_form = np.kron(basis_projection(d1, (0, 1)).matrix / 2.0, np.eye(2) / 2.0)
    structure = float(np.max(np.abs(endpoint.matrix - product_form)))
    if structure > 1e-10:
        failures.append(f"endpoint structure error {structure:.2e} > 1e-10")
    points = path_experiment(
        lambda_grid=DEFAULT_LAMBDA_GRID, tail_terms=tail, restarts=20, seed=909
    )
    distances = [p.distance for p in points]
    if not all(d_prev > d_next for d_prev, d_next in zip(distances, distances[1:])):
        failures.append(f"distances not strictly decreasing: {distances}")
    last = points[-1]
    if not (last.lam == 0.01 and last.distance < safe_radius(0.0) and last.certified_quiet):
        failures.append(
            f"lambda=0.01 distance {last.distance} not inside quiet radius {safe_radius(0.0)}"
        )
    g0 = seesaw_gamma(endpoint, restarts=20, seed=910).gamma_lower
    if g0 > 1e-6:
        failures.append(f"endpoint bound {g0} > 1e-6")
    return _result(
        9, "Quiet path", budget, start, failures,
        f"distances {['%.3f' % d for d in distances]}, endpoint bound {g0:.1e}",
    )


ALL_CHECKS = (
    check_werner_witnesses,
    check_oracle_agreement,
    check_landau_suite,
    check_violating_sequence,
    check_hidden_nonlocal_sequence,
    check_mixed_factor_neighborhoods,
    check_lipschitz_convexity,
    check_block_compression,
    check_quiet_path,
)


def run_all() -> list[CriterionResult]:
    return [check() for check in ALL_CHECKS]
