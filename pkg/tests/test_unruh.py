import math

import numpy as np
import pytest

from unruhsim.fock import (A, C_I, C_II, D_I, D_II, annihilation,
                           apply_operator, coefficient_distance, creation,
                           ket)
from unruhsim.unruh import (QR_GRID, R_GRID, R_MAX, SQRT_HALF, StateFamily,
                            UnruhParams, build_state, random_family,
                            random_params, region_I_operator, region_modes,
                            unruh_creation, unruh_vacuum)

TOL = 1e-12


def test_params_validation():
    UnruhParams(0.1, 0.6, 0.8)
    with pytest.raises(ValueError):
        UnruhParams(-0.01, 1.0, 0.0)
    with pytest.raises(ValueError):
        UnruhParams(R_MAX + 0.01, 1.0, 0.0)
    with pytest.raises(ValueError):
        UnruhParams(0.1, 1.0, 0.5)
    with pytest.raises(ValueError):
        UnruhParams.from_qr(0.1, 1.2)


def test_from_qr_builds_real_weights():
    p = UnruhParams.from_qr(0.2, 0.8)
    assert p.q_r == 0.8
    assert abs(p.q_l - 0.6) <= TOL


def test_family_validation():
    StateFamily.bell()
    with pytest.raises(ValueError):
        StateFamily(1.0, 1.0, 1.0, 0.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        StateFamily(1.0, 0.0, 0.5, 0.5, 0.0, 1.0)


def test_unruh_creation_single_mode_limits():
    # r = 0 with q_R = 1 leaves the bare wedge-I particle creator.
    op = unruh_creation(UnruhParams.from_qr(0.0, 1.0))
    assert coefficient_distance(op, creation(C_I)) <= TOL
    op = unruh_creation(UnruhParams.from_qr(0.0, 0.0))
    assert coefficient_distance(op, creation(C_II)) <= TOL


def test_unruh_creation_term_structure():
    p = UnruhParams.from_qr(0.3, 0.8)
    coeffs = unruh_creation(p).coefficients()
    c, s = math.cos(0.3), math.sin(0.3)
    assert abs(coeffs[((C_I, "+"),)] - 0.8 * c) <= TOL
    assert abs(coeffs[((D_II, "-"),)] + 0.8 * s) <= TOL
    assert abs(coeffs[((C_II, "+"),)] - 0.6 * c) <= TOL
    assert abs(coeffs[((D_I, "-"),)] + 0.6 * s) <= TOL


def test_region_modes_structure():
    a_one, a_two = region_modes(UnruhParams.from_qr(0.2, 1.0))
    assert coefficient_distance(a_one, creation(C_I)) <= TOL
    assert coefficient_distance(a_two, -1.0 * annihilation(D_II)) <= TOL
    a_one, _ = region_modes(UnruhParams.from_qr(0.2, SQRT_HALF))
    coeffs = a_one.coefficients()
    assert abs(coeffs[((C_I, "+"),)] - SQRT_HALF) <= TOL
    assert abs(coeffs[((D_I, "-"),)] + SQRT_HALF) <= TOL


def test_endpoint_unruh_creation_is_mean_of_region_modes():
    rng = np.random.default_rng(3)
    params = [UnruhParams.from_qr(R_MAX, q) for q in QR_GRID]
    params += [random_params(rng, r=R_MAX) for _ in range(5)]
    for p in params:
        a_one, a_two = region_modes(p)
        assert coefficient_distance(unruh_creation(p),
                                    SQRT_HALF * (a_one + a_two)) <= TOL


def test_vacuum_at_r_zero_is_bare_vacuum():
    np.testing.assert_allclose(unruh_vacuum(0.0), ket("00000"), atol=0)


def test_vacuum_amplitudes_at_endpoint():
    vac = unruh_vacuum(R_MAX)
    expected = np.zeros(32, dtype=complex)
    expected[[0, 6, 9, 15]] = [0.5, -0.5, 0.5, -0.5]
    np.testing.assert_allclose(vac, expected, atol=TOL)


def test_vacuum_amplitudes_generic_r():
    r = math.pi / 8
    vac = unruh_vacuum(r)
    c, s = math.cos(r), math.sin(r)
    expected = np.zeros(32, dtype=complex)
    expected[0] = c * c          # |00000>
    expected[6] = -c * s         # |00110> = cII+ dI+ pair, reordered sign
    expected[9] = c * s          # |01001>
    expected[15] = -s * s        # |01111>
    np.testing.assert_allclose(vac, expected, atol=TOL)


def test_vacuum_normalized_on_grid():
    for r in R_GRID:
        assert abs(np.linalg.norm(unruh_vacuum(r)) - 1.0) <= TOL


def test_vacuum_annihilated_by_unruh_modes():
    for r in (0.0, math.pi / 8, R_MAX):
        vac = unruh_vacuum(r)
        for q in QR_GRID:
            lower = unruh_creation(UnruhParams.from_qr(r, q)).adjoint()
            assert np.linalg.norm(apply_operator(lower, vac)) <= TOL


def test_vacuum_rejects_out_of_range_r():
    with pytest.raises(ValueError):
        unruh_vacuum(-0.1)
    with pytest.raises(ValueError):
        unruh_vacuum(1.0)


def test_region_mode_gap_norm_is_cos_minus_sin():
    # ||(aI+ - aII+) vac|| = |cos r - sin r| independently of the weights.
    rng = np.random.default_rng(11)
    for r in (0.0, 0.2, math.pi / 8, R_MAX):
        vac = unruh_vacuum(r)
        for p in (UnruhParams.from_qr(r, 0.3), UnruhParams.from_qr(r, 1.0),
                  random_params(rng, r=r)):
            a_one, a_two = region_modes(p)
            gap = np.linalg.norm(apply_operator(a_one - a_two, vac))
            assert abs(gap - abs(math.cos(r) - math.sin(r))) <= TOL


def test_build_state_pure_vacuum_family():
    family = StateFamily(1.0, 0.0, 1.0, 0.0, 0.0, 1.0)
    for r in (0.0, 0.4, R_MAX):
        p = UnruhParams.from_qr(r, 0.9)
        np.testing.assert_allclose(build_state(family, p), unruh_vacuum(r), atol=TOL)


def test_build_state_bell_point():
    psi = build_state(StateFamily.bell(), UnruhParams.from_qr(0.0, 1.0))
    expected = np.zeros(32, dtype=complex)
    expected[0] = SQRT_HALF      # |00000>
    expected[24] = SQRT_HALF     # |11000> = A+ cI+ pair
    np.testing.assert_allclose(psi, expected, atol=TOL)


def test_build_state_endpoint_single_mode_support():
    # q_R = 1 kills the q_L branch, leaving six nonzero amplitudes.
    psi = build_state(StateFamily.bell(), UnruhParams.from_qr(R_MAX, 1.0))
    expected = np.zeros(32, dtype=complex)
    quarter = 0.5 * SQRT_HALF
    expected[[0, 6, 9, 15]] = [quarter, -quarter, quarter, -quarter]
    expected[24] = 0.5           # A+ cI+ on the vacuum component
    expected[30] = -0.5          # A+ cI+ on the four-particle component
    np.testing.assert_allclose(psi, expected, atol=TOL)


def test_build_state_endpoint_generic_weights_support():
    psi = build_state(StateFamily.bell(), UnruhParams.from_qr(R_MAX, 0.8))
    assert len(np.flatnonzero(np.abs(psi) > TOL)) == 8


def test_build_state_norm_random_draws():
    rng = np.random.default_rng(5)
    for _ in range(50):
        psi = build_state(random_family(rng), random_params(rng))
        assert abs(np.linalg.norm(psi) - 1.0) <= TOL


def test_region_I_operator_requires_endpoint():
    with pytest.raises(ValueError):
        region_I_operator(StateFamily.bell(), UnruhParams.from_qr(0.3, 1.0))


def test_region_I_operator_reproduces_build_state():
    rng = np.random.default_rng(8)
    vac = unruh_vacuum(R_MAX)
    for _ in range(20):
        family = random_family(rng)
        p = random_params(rng, r=R_MAX)
        left = apply_operator(region_I_operator(family, p), vac)
        np.testing.assert_allclose(left, build_state(family, p), atol=TOL)


def test_region_I_operator_monomials_single_mode_bell():
    # For the bell family at q_R = 1 only the identity and A+ cI+ survive.
    op = region_I_operator(StateFamily.bell(), UnruhParams.from_qr(R_MAX, 1.0))
    coeffs = op.coefficients()
    assert set(coeffs) == {(), ((A, "+"), (C_I, "+"))}
    assert abs(coeffs[()] - SQRT_HALF) <= TOL
    assert abs(coeffs[((A, "+"), (C_I, "+"))] - 1.0) <= TOL


def test_region_I_operator_touches_only_retained_modes():
    rng = np.random.default_rng(9)
    for _ in range(10):
        op = region_I_operator(random_family(rng), random_params(rng, r=R_MAX))
        modes = {m for mono in op.coefficients() for m, _ in mono}
        assert modes <= {A, C_I, D_I}
