"""Named invariant checks shared by the `check` subcommand and the test suite.

Every check returns a CheckResult holding the measured value, the bound it is
held to and the direction of the comparison, so the CLI can print one line
per invariant.  Random draws use fixed seeds; reruns reproduce the same
numbers exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entanglement import (PSD_TOL, OperatorOrdering, classify_orderings,
                           infinite_acceleration_reduced_state, negativity,
                           qubit_partial_trace, qubit_reduced_state,
                           reduced_state, subalgebra_reduced_state)
from .fock import (DIM, N_MODES, annihilation, apply_annihilation,
                   apply_creation, apply_operator, coefficient_distance,
                   creation, occupations, operator_matrix, OperatorExpr,
                   CREATE, ANNIHILATE)
from .sweep import SweepConfig, render_csv, sweep_records
from .unruh import (QR_GRID, R_GRID, R_MAX, SQRT_HALF, StateFamily,
                    UnruhParams, build_state, random_family, random_params,
                    region_modes, unruh_creation, unruh_vacuum)

SEED = 20260818


@dataclass(frozen=True)
class CheckResult:
    """One invariant: measured value versus bound.

    mode "max" passes when measured <= bound, mode "min" when
    measured >= bound."""

    name: str
    measured: float
    bound: float
    mode: str = "max"

    @property
    def passed(self) -> bool:
        if self.mode == "max":
            return self.measured <= self.bound
        return self.measured >= self.bound

    def line(self) -> str:
        op = "<=" if self.mode == "max" else ">="
        flag = "PASS" if self.passed else "FAIL"
        return f"[{flag}] {self.name}: {self.measured:.3e} (required {op} {self.bound:g})"


def _rng(offset: int) -> np.random.Generator:
    return np.random.default_rng(SEED + offset)


def _random_expr(rng) -> OperatorExpr:
    terms = []
    for _ in range(rng.integers(1, 5)):
        coeff = complex(rng.standard_normal(), rng.standard_normal())
        mono = tuple((int(rng.integers(0, N_MODES)),
                      CREATE if rng.integers(0, 2) else ANNIHILATE)
                     for _ in range(rng.integers(0, 5)))
        terms.append((coeff, mono))
    return OperatorExpr(tuple(terms))


def _spread(values) -> float:
    return float(max(values) - min(values))


# ---------------------------------------------------------------- fock-core

def check_car_algebra() -> CheckResult:
    """{f_j, f_k^dag} = delta_jk, {f_j, f_k} = {f_j^dag, f_k^dag} = 0."""
    eye = np.eye(DIM)
    cre = [operator_matrix(creation(m)) for m in range(N_MODES)]
    ann = [operator_matrix(annihilation(m)) for m in range(N_MODES)]
    worst = 0.0
    for j in range(N_MODES):
        for k in range(N_MODES):
            mixed = ann[j] @ cre[k] + cre[k] @ ann[j] - (eye if j == k else 0.0)
            worst = max(worst,
                        float(np.max(np.abs(mixed))),
                        float(np.max(np.abs(ann[j] @ ann[k] + ann[k] @ ann[j]))),
                        float(np.max(np.abs(cre[j] @ cre[k] + cre[k] @ cre[j]))))
    return CheckResult("car-algebra", worst, 1e-12)


def check_ladder_projector() -> CheckResult:
    """Create then annihilate on the same mode projects onto the empty-mode sector."""
    worst = 0.0
    for mode in range(N_MODES):
        for index in range(DIM):
            vec = np.zeros(DIM, dtype=complex)
            vec[index] = 1.0
            out = apply_annihilation(mode, apply_creation(mode, vec))
            expected = vec if occupations(index)[mode] == 0 else np.zeros(DIM, dtype=complex)
            worst = max(worst, float(np.max(np.abs(out - expected))))
    return CheckResult("ladder-projector", worst, 1e-12)


def check_adjoint_consistency() -> CheckResult:
    """operator_matrix(op).conj().T equals operator_matrix(op.adjoint())."""
    rng = _rng(1)
    worst = 0.0
    for _ in range(50):
        op = _random_expr(rng)
        gap = operator_matrix(op).conj().T - operator_matrix(op.adjoint())
        worst = max(worst, float(np.max(np.abs(gap))))
    return CheckResult("adjoint-consistency", worst, 1e-12)


def check_apply_matches_matrix() -> CheckResult:
    """apply_operator agrees with dense multiplication on random states."""
    rng = _rng(2)
    worst = 0.0
    for _ in range(100):
        op = _random_expr(rng)
        psi = rng.standard_normal(DIM) + 1j * rng.standard_normal(DIM)
        gap = apply_operator(op, psi) - operator_matrix(op) @ psi
        worst = max(worst, float(np.max(np.abs(gap))))
    return CheckResult("apply-matches-matrix", worst, 1e-12)


# ------------------------------------------------------------ unruh-setting

def check_vacuum_norm(r_values=R_GRID) -> CheckResult:
    """The Unruh vacuum is unit norm at every r."""
    worst = max(abs(float(np.linalg.norm(unruh_vacuum(r))) - 1.0) for r in r_values)
    return CheckResult("vacuum-norm", worst, 1e-12)


def check_vacuum_annihilated(r_values=R_GRID, q_r_values=QR_GRID) -> CheckResult:
    """C_U kills the Unruh vacuum for every (r, q_R) on the sample."""
    worst = 0.0
    for r in r_values:
        vac = unruh_vacuum(r)
        for q in q_r_values:
            lower = unruh_creation(UnruhParams.from_qr(r, q)).adjoint()
            worst = max(worst, float(np.linalg.norm(apply_operator(lower, vac))))
    return CheckResult("vacuum-annihilated", worst, 1e-12)


def check_limit_identity_endpoint() -> CheckResult:
    """a_I^dag and a_II^dag act identically on the vacuum at r = pi/4."""
    vac = unruh_vacuum(R_MAX)
    worst = 0.0
    for q in QR_GRID:
        a_one, a_two = region_modes(UnruhParams.from_qr(R_MAX, q))
        worst = max(worst, float(np.linalg.norm(apply_operator(a_one - a_two, vac))))
    return CheckResult("limit-identity-endpoint", worst, 1e-12)


def check_limit_identity_midpoint() -> CheckResult:
    """Away from the endpoint the two wedge actions stay clearly distinct;
    at r = pi/8 the gap norm is |cos r - sin r| ~ 0.541 for every q_R."""
    r = R_MAX / 2.0
    vac = unruh_vacuum(r)
    smallest = min(
        float(np.linalg.norm(apply_operator(
            region_modes(UnruhParams.from_qr(r, q))[0]
            - region_modes(UnruhParams.from_qr(r, q))[1], vac)))
        for q in QR_GRID)
    return CheckResult("limit-identity-midpoint", smallest, 0.1, mode="min")


def check_state_norm() -> CheckResult:
    """build_state output is unit norm for random families and parameters."""
    rng = _rng(3)
    worst = 0.0
    for _ in range(100):
        psi = build_state(random_family(rng), random_params(rng))
        worst = max(worst, abs(float(np.linalg.norm(psi)) - 1.0))
    return CheckResult("state-norm", worst, 1e-12)


def check_endpoint_mode_coefficients() -> CheckResult:
    """At r = pi/4: C_U^dag = (a_I^dag + a_II^dag)/sqrt(2), coefficient by
    coefficient."""
    rng = _rng(4)
    worst = 0.0
    params = [UnruhParams.from_qr(R_MAX, q) for q in QR_GRID]
    params += [random_params(rng, r=R_MAX) for _ in range(5)]
    for p in params:
        a_one, a_two = region_modes(p)
        gap = coefficient_distance(unruh_creation(p), SQRT_HALF * (a_one + a_two))
        worst = max(worst, gap)
    return CheckResult("endpoint-mode-coefficients", worst, 1e-12)


# -------------------------------------------------------------- entanglement

def check_thermal_vacuum() -> CheckResult:
    """Tracing Alice and wedge II from the endpoint vacuum leaves I_4/4."""
    marginal = qubit_partial_trace(unruh_vacuum(R_MAX), (0, 3, 4))
    gap = marginal.matrix - np.eye(4) / 4.0
    return CheckResult("thermal-vacuum", float(np.max(np.abs(gap))), 1e-12)


def _all_orderings():
    import itertools
    return [OperatorOrdering((0,) + rest)
            for rest in itertools.permutations((1, 2, 3, 4))]


def check_reduced_state_hermiticity() -> CheckResult:
    """Reduced states are hermitian with unit trace for every ordering."""
    rng = _rng(5)
    worst = 0.0
    orderings = _all_orderings()
    for _ in range(100):
        psi = build_state(random_family(rng), random_params(rng))
        for ordering in orderings:
            mat = qubit_reduced_state(psi, ordering).matrix
            worst = max(worst,
                        float(np.max(np.abs(mat - mat.conj().T))),
                        abs(complex(mat.trace()) - 1.0))
    return CheckResult("reduced-state-hermiticity", worst, 1e-12)


def check_reduced_state_psd() -> CheckResult:
    """Reduced states are positive for every ordering (smallest eigenvalue)."""
    rng = _rng(5)  # same draws as the hermiticity check
    lowest = np.inf
    orderings = _all_orderings()
    for _ in range(100):
        psi = build_state(random_family(rng), random_params(rng))
        for ordering in orderings:
            eigs = np.linalg.eigvalsh(qubit_reduced_state(psi, ordering).matrix)
            lowest = min(lowest, float(eigs[0]))
    return CheckResult("reduced-state-psd", float(lowest), -PSD_TOL, mode="min")


def _haar_unitary(rng, dim: int) -> np.ndarray:
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def check_local_unitary_invariance() -> CheckResult:
    """Negativity is unchanged by U_A (x) U_I conjugation."""
    rng = _rng(6)
    worst = 0.0
    for _ in range(20):
        rho = reduced_state(random_family(rng), random_params(rng), "physical")
        u = np.kron(_haar_unitary(rng, 2), _haar_unitary(rng, 4))
        rotated = u @ rho.matrix @ u.conj().T
        worst = max(worst, abs(negativity(rho) - negativity(rotated, cut=(2, 4))))
    return CheckResult("local-unitary-invariance", worst, 1e-10)


def check_physical_convergence(extra_families: int = 20) -> CheckResult:
    """Physical-ordering negativity at r = pi/4 is q_R independent."""
    rng = _rng(7)
    families = [StateFamily.bell()] + [random_family(rng) for _ in range(extra_families)]
    worst = 0.0
    for family in families:
        values = [negativity(reduced_state(family, UnruhParams.from_qr(R_MAX, q), "physical"))
                  for q in QR_GRID]
        worst = max(worst, _spread(values))
    return CheckResult("physical-ordering-convergence", worst, 1e-10)


def check_legacy_spread() -> CheckResult:
    """The interleaved ordering fails to converge: its q_R spread at r = pi/4
    stays macroscopic for the bell family."""
    values = [negativity(reduced_state(StateFamily.bell(),
                                       UnruhParams.from_qr(R_MAX, q),
                                       "legacy-interleaved"))
              for q in QR_GRID]
    return CheckResult("legacy-ordering-spread", _spread(values), 0.01, mode="min")


def check_route_agreement_default() -> CheckResult:
    """Qubit, subalgebra and (at the endpoint) conjugation routes agree on
    the bell family over the full default grid."""
    family = StateFamily.bell()
    worst = 0.0
    for q in QR_GRID:
        for r in R_GRID:
            p = UnruhParams.from_qr(r, q)
            psi = build_state(family, p)
            n_qubit = negativity(qubit_reduced_state(psi, "physical"))
            n_oracle = negativity(subalgebra_reduced_state(psi))
            worst = max(worst, abs(n_qubit - n_oracle))
            if r == R_MAX:
                n_end = negativity(infinite_acceleration_reduced_state(family, p))
                worst = max(worst, abs(n_qubit - n_end), abs(n_oracle - n_end))
    return CheckResult("route-agreement-default-family", worst, 1e-10)


def check_route_agreement_random(n_families: int = 20) -> CheckResult:
    """Qubit and subalgebra routes agree for random families over the grid."""
    rng = _rng(8)
    worst = 0.0
    for _ in range(n_families):
        family = random_family(rng)
        for q in QR_GRID:
            for r in R_GRID:
                psi = build_state(family, UnruhParams.from_qr(r, q))
                gap = abs(negativity(qubit_reduced_state(psi, "physical"))
                          - negativity(subalgebra_reduced_state(psi)))
                worst = max(worst, gap)
    return CheckResult("route-agreement-random-families", worst, 1e-10)


# ------------------------------------------------------------------ harness

def check_anchor_bell() -> CheckResult:
    """The bell family at (r=0, q_R=1) reduces to a Bell pair: N = 1/2."""
    value = negativity(reduced_state(StateFamily.bell(), UnruhParams.from_qr(0.0, 1.0),
                                     "physical"))
    return CheckResult("anchor-bell", abs(value - 0.5), 1e-12)


def check_anchor_pq() -> CheckResult:
    """At (r=0, q_R=1) the family (P, Q, 1, 0, 0, 1) scores N = |P Q|."""
    rng = _rng(9)
    worst = 0.0
    for _ in range(10):
        z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        z = z / np.linalg.norm(z)
        family = StateFamily(complex(z[0]), complex(z[1]), 1.0, 0.0, 0.0, 1.0)
        value = negativity(reduced_state(family, UnruhParams.from_qr(0.0, 1.0), "physical"))
        worst = max(worst, abs(value - abs(z[0] * z[1])))
    return CheckResult("anchor-pq", worst, 1e-12)


def check_anchor_product() -> CheckResult:
    """Product families (P = 0 or 1) carry no Alice entanglement anywhere."""
    families = [StateFamily(1.0, 0.0, 0.6, 0.8j, 0.8, -0.6j),
                StateFamily(0.0, 1.0, 0.6, 0.8j, 0.8, -0.6j)]
    worst = 0.0
    for family in families:
        for q in QR_GRID:
            for r in R_GRID:
                worst = max(worst, negativity(reduced_state(
                    family, UnruhParams.from_qr(r, q), "physical")))
    return CheckResult("anchor-product", worst, 1e-12)


def check_sweep_determinism() -> CheckResult:
    """Two full default sweeps render byte-identical CSV text."""
    first = render_csv(sweep_records(SweepConfig()))
    second = render_csv(sweep_records(SweepConfig()))
    return CheckResult("sweep-determinism", 0.0 if first == second else 1.0, 0.0)


def check_sweep_range() -> CheckResult:
    """Every default-sweep negativity lies in [0, 1/2] up to 1e-9."""
    records = sweep_records(SweepConfig())
    worst = max(max(rec.negativity - 0.5, -rec.negativity) for rec in records)
    return CheckResult("sweep-range", float(worst), 1e-9)


ALL_CHECKS = (
    check_car_algebra,
    check_ladder_projector,
    check_adjoint_consistency,
    check_apply_matches_matrix,
    check_vacuum_norm,
    check_vacuum_annihilated,
    check_limit_identity_endpoint,
    check_limit_identity_midpoint,
    check_state_norm,
    check_endpoint_mode_coefficients,
    check_thermal_vacuum,
    check_reduced_state_hermiticity,
    check_reduced_state_psd,
    check_local_unitary_invariance,
    check_physical_convergence,
    check_legacy_spread,
    check_route_agreement_default,
    check_route_agreement_random,
    check_anchor_bell,
    check_anchor_pq,
    check_anchor_product,
    check_sweep_determinism,
    check_sweep_range,
)


def run_all() -> list:
    """Run every registered invariant check in order."""
    return [check() for check in ALL_CHECKS]
