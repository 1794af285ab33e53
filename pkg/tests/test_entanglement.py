import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from unruhsim.entanglement import (LEGACY_INTERLEAVED, PHYSICAL,
                                   DensityMatrix, OperatorOrdering,
                                   classify_orderings,
                                   infinite_acceleration_reduced_state,
                                   negativity, partial_transpose,
                                   qubit_partial_trace, qubit_reduced_state,
                                   reduced_state, subalgebra_reduced_state,
                                   to_qubit_basis)
from unruhsim.fock import apply_creation, ket
from unruhsim.unruh import (QR_GRID, R_MAX, SQRT_HALF, StateFamily,
                            UnruhParams, build_state, random_family,
                            random_params, unruh_vacuum)

TOL = 1e-12
ROUTE_TOL = 1e-10


def ordered_product_state(permutation, register_bits):
    """Register basis ket built by applying the occupied slots' creation
    operators in slot order (slot 0 acts last)."""
    psi = ket("00000")
    for slot in reversed(range(5)):
        if register_bits[slot]:
            psi = apply_creation(permutation[slot], psi)
    return psi


# ------------------------------------------------------------ orderings

def test_ordering_parse_presets_and_digits():
    assert OperatorOrdering.parse("physical").permutation == PHYSICAL
    assert OperatorOrdering.parse("legacy-interleaved").permutation == LEGACY_INTERLEAVED
    assert OperatorOrdering.parse("01423").permutation == (0, 1, 4, 2, 3)
    assert OperatorOrdering.parse("01423").name == "legacy-interleaved"
    assert OperatorOrdering.parse((0, 1, 2, 3, 4)).name == "physical"
    with pytest.raises(ValueError):
        OperatorOrdering.parse("01223")
    with pytest.raises(ValueError):
        OperatorOrdering.parse("nonsense")


def test_to_qubit_basis_physical_is_identity():
    rng = np.random.default_rng(1)
    psi = rng.standard_normal(32) + 1j * rng.standard_normal(32)
    np.testing.assert_allclose(to_qubit_basis(psi, "physical"), psi, atol=0)


def test_to_qubit_basis_against_ladder_oracle():
    # For every register pattern the ordered creation product built with the
    # ladder oracle must land exactly on that register basis ket.
    orderings = [PHYSICAL, LEGACY_INTERLEAVED, (0, 3, 1, 4, 2), (2, 0, 4, 1, 3)]
    for perm in orderings:
        for pattern in range(32):
            bits = [(pattern >> (4 - i)) & 1 for i in range(5)]
            psi = ordered_product_state(perm, bits)
            register = to_qubit_basis(psi, perm)
            expected = np.zeros(32, dtype=complex)
            expected[pattern] = 1.0
            np.testing.assert_allclose(register, expected, atol=0)


def test_to_qubit_basis_interleaved_sign():
    # cII+ dI+ |00000> = -|00110> canonically; under the interleaved ordering
    # the same state is the register ket |00011> with amplitude -1.
    psi = apply_creation(3, apply_creation(2, ket("00000")))
    register = to_qubit_basis(psi, "legacy-interleaved")
    expected = np.zeros(32, dtype=complex)
    expected[0b00011] = -1.0
    np.testing.assert_allclose(register, expected, atol=0)


@given(st.permutations(list(range(5))), st.integers(min_value=0, max_value=2**16 - 1))
def test_to_qubit_basis_preserves_norm(perm, seed):
    rng = np.random.default_rng(seed)
    psi = rng.standard_normal(32) + 1j * rng.standard_normal(32)
    assert abs(np.linalg.norm(to_qubit_basis(psi, tuple(perm)))
               - np.linalg.norm(psi)) <= 1e-9


# ------------------------------------------------------- partial traces

def test_qubit_partial_trace_keeps_everything():
    psi = (ket("00") + ket("11")) / math.sqrt(2)
    rho = qubit_partial_trace(psi, ())
    np.testing.assert_allclose(rho.matrix, np.outer(psi, psi.conj()), atol=TOL)
    assert rho.dims == (2, 2)


def test_qubit_partial_trace_bell_marginal():
    psi = (ket("00") + ket("11")) / math.sqrt(2)
    rho = qubit_partial_trace(psi, (1,))
    np.testing.assert_allclose(rho.matrix, np.eye(2) / 2, atol=TOL)


def test_qubit_partial_trace_of_matrix_input():
    psi = (ket("00") + ket("11")) / math.sqrt(2)
    full = np.outer(psi, psi.conj())
    rho = qubit_partial_trace(full, (0,))
    np.testing.assert_allclose(rho.matrix, np.eye(2) / 2, atol=TOL)


def test_qubit_partial_trace_everything_leaves_scalar():
    psi = (ket("00") + ket("11")) / math.sqrt(2)
    rho = qubit_partial_trace(psi, (0, 1))
    assert rho.matrix.shape == (1, 1)
    assert abs(rho.matrix[0, 0] - 1.0) <= TOL


def test_qubit_partial_trace_position_out_of_range():
    with pytest.raises(ValueError):
        qubit_partial_trace(ket("00"), (2,))


def test_density_matrix_validation():
    with pytest.raises(ValueError):
        DensityMatrix(np.array([[0.5, 0.1], [0.3, 0.5]]), (2,))  # not hermitian
    with pytest.raises(ValueError):
        DensityMatrix(np.eye(2), (2,))  # trace 2
    with pytest.raises(ValueError):
        DensityMatrix(np.diag([1.5, -0.5]).astype(complex), (2,)).validate()
    dm = DensityMatrix(np.diag([0.5, 0.5]).astype(complex), (2,))
    assert dm.validate() is dm
    assert not dm.matrix.flags.writeable


def test_density_matrix_regrouped():
    dm = DensityMatrix(np.eye(8) / 8, (2, 2, 2))
    assert dm.regrouped((2, 4)).dims == (2, 4)
    with pytest.raises(ValueError):
        dm.regrouped((3, 3))


# ------------------------------------------------------- reduced states

def test_reduced_state_of_pure_vacuum_family():
    family = StateFamily(1.0, 0.0, 1.0, 0.0, 0.0, 1.0)
    rho = reduced_state(family, UnruhParams.from_qr(R_MAX, 1.0), "physical")
    assert rho.dims == (2, 2, 2)
    np.testing.assert_allclose(rho.matrix, np.diag([0.25] * 4 + [0.0] * 4), atol=TOL)


def test_reduced_state_bell_point():
    rho = reduced_state(StateFamily.bell(), UnruhParams.from_qr(0.0, 1.0), "physical")
    vec = np.zeros(8, dtype=complex)
    vec[0] = SQRT_HALF           # |000> on (A, cI, dI)
    vec[6] = SQRT_HALF           # |110>
    np.testing.assert_allclose(rho.matrix, np.outer(vec, vec.conj()), atol=TOL)


def test_reduced_state_orderings_disagree_at_endpoint():
    p = UnruhParams.from_qr(R_MAX, 0.8)
    physical = reduced_state(StateFamily.bell(), p, "physical")
    legacy = reduced_state(StateFamily.bell(), p, "legacy-interleaved")
    assert np.max(np.abs(physical.matrix - legacy.matrix)) > 1e-3
    assert abs(negativity(physical) - negativity(legacy)) > 1e-3


def test_reduced_state_alice_axis_is_first():
    # Whatever slot Alice occupied in the register, her qubit is moved to the
    # front axis of the result.  With P = 1 Alice stays in vacuum, so the
    # excited-Alice blocks must vanish for every ordering; with Q = 1 the
    # vacuum blocks vanish instead.
    rng = np.random.default_rng(2)
    for perm in [(1, 0, 2, 3, 4), (2, 1, 0, 3, 4), (3, 4, 0, 1, 2)]:
        p = random_params(rng)
        rho = reduced_state(StateFamily(1.0, 0.0, 0.8, 0.6j, 0.0, 1.0), p, perm)
        assert rho.dims == (2, 2, 2)
        assert np.max(np.abs(rho.matrix[:, 4:])) <= TOL
        rho.validate()
        rho = reduced_state(StateFamily(0.0, 1.0, 0.8, 0.6j, 0.0, 1.0), p, perm)
        assert np.max(np.abs(rho.matrix[:, :4])) <= TOL
        rho.validate()


def test_subalgebra_of_basis_ket():
    rho = subalgebra_reduced_state(ket("00000"))
    expected = np.zeros((8, 8), dtype=complex)
    expected[0, 0] = 1.0
    np.testing.assert_allclose(rho.matrix, expected, atol=TOL)
    assert rho.dims == (2, 4)


def test_subalgebra_of_endpoint_vacuum_is_thermal():
    rho = subalgebra_reduced_state(unruh_vacuum(R_MAX))
    np.testing.assert_allclose(rho.matrix, np.diag([0.25] * 4 + [0.0] * 4), atol=TOL)


def test_subalgebra_matches_qubit_route():
    rng = np.random.default_rng(4)
    for _ in range(100):
        psi = build_state(random_family(rng), random_params(rng))
        gap = abs(negativity(qubit_reduced_state(psi, "physical"))
                  - negativity(subalgebra_reduced_state(psi)))
        assert gap <= ROUTE_TOL


def test_subalgebra_matrix_matches_qubit_matrix():
    # The physical-ordering trace and the moment solve agree entrywise, not
    # just on negativity.
    rng = np.random.default_rng(6)
    for _ in range(20):
        psi = build_state(random_family(rng), random_params(rng))
        qubit = qubit_reduced_state(psi, "physical").matrix
        oracle = subalgebra_reduced_state(psi).matrix
        assert np.max(np.abs(qubit - oracle)) <= TOL


def test_infinite_acceleration_route_matches():
    family = StateFamily.bell()
    for q in (0.0, 0.5, SQRT_HALF, 1.0):
        p = UnruhParams.from_qr(R_MAX, q)
        end = negativity(infinite_acceleration_reduced_state(family, p))
        qubit = negativity(reduced_state(family, p, "physical"))
        assert abs(end - qubit) <= ROUTE_TOL


def test_infinite_acceleration_requires_endpoint():
    with pytest.raises(ValueError):
        infinite_acceleration_reduced_state(StateFamily.bell(),
                                            UnruhParams.from_qr(0.2, 1.0))


# ---------------------------------------------------------- negativity

def test_partial_transpose_involutions():
    rng = np.random.default_rng(7)
    z = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    rho = z @ z.conj().T
    rho = rho / rho.trace()
    once = partial_transpose(rho, 0, (2, 4))
    np.testing.assert_allclose(partial_transpose(once, 0, (2, 4)), rho, atol=TOL)
    both = partial_transpose(partial_transpose(rho, 0, (2, 4)), 1, (2, 4))
    np.testing.assert_allclose(both, rho.T, atol=TOL)


def test_partial_transpose_bell_spectrum():
    psi = (ket("00") + ket("11")) / math.sqrt(2)
    rho = np.outer(psi, psi.conj())
    eigs = np.linalg.eigvalsh(partial_transpose(rho, 0, (2, 2)))
    np.testing.assert_allclose(eigs, [-0.5, 0.5, 0.5, 0.5], atol=TOL)


def test_negativity_bell_pair():
    psi = (ket("00") + ket("11")) / math.sqrt(2)
    rho = DensityMatrix(np.outer(psi, psi.conj()), (2, 2))
    assert abs(negativity(rho) - 0.5) <= TOL


def test_negativity_product_state_is_exact_zero():
    rho = DensityMatrix(np.diag([0.25] * 4).astype(complex), (2, 2))
    assert negativity(rho) == 0.0


def test_negativity_rejects_non_hermitian():
    mat = np.diag([1.0, 0.0]).astype(complex)
    mat[0, 1] = 0.5
    with pytest.raises(ValueError):
        negativity(mat, cut=(1, 2))


def test_negativity_needs_consistent_cut():
    with pytest.raises(ValueError):
        negativity(np.eye(8) / 8, cut=(2, 3))


def test_negativity_default_cut_from_dims():
    rho = reduced_state(StateFamily.bell(), UnruhParams.from_qr(0.0, 1.0), "physical")
    assert abs(negativity(rho) - negativity(rho.matrix, cut=(2, 4))) == 0.0


# ------------------------------------------------------ classification

def test_classify_orderings_census():
    results = classify_orderings(StateFamily.bell())
    assert len(results) == 24
    assert all(item.ordering.permutation[0] == 0 for item in results)
    spreads = [item.spread for item in results]
    assert spreads == sorted(spreads)

    by_perm = {item.ordering.permutation: item for item in results}
    assert by_perm[PHYSICAL].convergent
    legacy = by_perm[LEGACY_INTERLEAVED]
    assert not legacy.convergent
    assert legacy.spread > 0.01

    # Verified numerically: every ordering keeping both wedge-II modes in the
    # last two register slots is convergent (the bell-family census finds 12
    # convergent orderings in total, these four among them).
    for tail in ((3, 4), (4, 3)):
        for head in ((1, 2), (2, 1)):
            assert by_perm[(0,) + head + tail].convergent
    assert sum(item.convergent for item in results) == 12


def test_classify_all_permutations_flag():
    results = classify_orderings(StateFamily.bell(), q_r_values=(0.5, 1.0),
                                 all_permutations=True)
    assert len(results) == 120
