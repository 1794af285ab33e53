"""Fermion-qubit mappings, partial traces and negativity.

The reduced Alice+wedge-I state is produced three independent ways, which
must agree whenever the chosen operator ordering is physical:

  qubit route      expand the state over an ordered creation-operator
                   basis, read the register as qubits, trace the wedge-II
                   positions (reduced_state);
  subalgebra route solve for the unique 8x8 matrix reproducing every
                   expectation value of operators on the retained modes,
                   with no ordering choice at all (subalgebra_reduced_state);
  endpoint route   at r = pi/4 only, conjugate the maximally mixed wedge-I
                   vacuum marginal by the Alice+wedge-I operator
                   (infinite_acceleration_reduced_state).

Negativity convention: N(rho) = (||rho^T_A||_1 - 1) / 2, the absolute sum of
the negative partial-transpose eigenvalues.  A two-qubit Bell pair scores
0.5.  The transpose always acts on Alice's side of the cut.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fock import (A, ANNIHILATE, C_I, C_II, CREATE, D_I, D_II, DIM,
                   MODE_LABELS, N_MODES, OperatorExpr, operator_matrix)
from .unruh import QR_GRID, R_MAX, StateFamily, UnruhParams, build_state, \
    region_I_operator

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
EIG_ZERO_TOL = 1e-12
CONVERGENCE_TOL = 1e-10

PHYSICAL = (A, C_I, D_I, C_II, D_II)
LEGACY_INTERLEAVED = (A, C_I, D_II, D_I, C_II)
ORDERING_PRESETS = {
    "physical": PHYSICAL,
    "legacy-interleaved": LEGACY_INTERLEAVED,
}
_PRESET_NAMES = {perm: name for name, perm in ORDERING_PRESETS.items()}


@dataclass(frozen=True)
class OperatorOrdering:
    """A register ordering: permutation[i] is the mode filling register slot i.

    The qubit register reads left to right, slot 0 most significant, and the
    creation-operator product defining a register basis ket is taken in slot
    order (slot 0 leftmost, hence acting last)."""

    permutation: tuple
    name: str | None = None

    def __post_init__(self):
        perm = tuple(int(m) for m in self.permutation)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"not a permutation of 0..{len(perm) - 1}: {self.permutation!r}")
        object.__setattr__(self, "permutation", perm)

    @classmethod
    def parse(cls, spec) -> "OperatorOrdering":
        """Accept an OperatorOrdering, a preset name, a digit string or a mode sequence."""
        if isinstance(spec, OperatorOrdering):
            return spec
        if isinstance(spec, str):
            key = spec.strip()
            if key in ORDERING_PRESETS:
                return cls(ORDERING_PRESETS[key], key)
            if key.isdigit():
                perm = tuple(int(ch) for ch in key)
                return cls(perm, _PRESET_NAMES.get(perm))
            raise ValueError(
                f"unknown ordering {spec!r}; use a preset "
                f"({', '.join(sorted(ORDERING_PRESETS))}) or a digit permutation like 01234")
        perm = tuple(int(m) for m in spec)
        return cls(perm, _PRESET_NAMES.get(perm))

    @property
    def label(self) -> str:
        return self.name or "".join(str(m) for m in self.permutation)

    def mode_names(self) -> str:
        return ",".join(MODE_LABELS[m] for m in self.permutation)


@lru_cache(maxsize=None)
def _conversion_table(perm: tuple):
    # For register pattern b: src[b] is the canonical basis index carrying the
    # amplitude and sign[b] the reordering sign, the parity of the inversions
    # among occupied slots needed to sort their modes into canonical order.
    n = len(perm)
    src = np.empty(1 << n, dtype=np.intp)
    sign = np.empty(1 << n)
    for b in range(1 << n):
        modes = [perm[i] for i in range(n) if (b >> (n - 1 - i)) & 1]
        src[b] = sum(1 << (n - 1 - m) for m in modes)
        inversions = sum(1 for x in range(len(modes)) for y in range(x + 1, len(modes))
                         if modes[x] > modes[y])
        sign[b] = -1.0 if inversions & 1 else 1.0
    return src, sign


def to_qubit_basis(psi, ordering) -> np.ndarray:
    """Rewrite amplitudes from the canonical basis to an ordered register basis.

    Register ket b (bits left to right, slot order) represents the state
    built by applying the creation operators of the occupied slots' modes in
    slot order to the vacuum.  The amplitude map is a signed permutation, so
    norms are preserved for every ordering."""
    ordering = OperatorOrdering.parse(ordering)
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (1 << len(ordering.permutation),):
        raise ValueError(
            f"state of shape {psi.shape} does not match a {len(ordering.permutation)}-mode register")
    src, sign = _conversion_table(ordering.permutation)
    return sign * psi[src]


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian unit-trace matrix with explicit subsystem dimensions.

    Hermiticity and trace are enforced at construction; validate() adds the
    positivity check.  The stored array is marked read-only."""

    matrix: np.ndarray
    dims: tuple

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=complex)
        dims = tuple(int(d) for d in self.dims)
        d = 1
        for x in dims:
            d *= x
        if mat.shape != (d, d):
            raise ValueError(f"matrix shape {mat.shape} does not match dims {dims}")
        if float(np.max(np.abs(mat - mat.conj().T))) > HERMITICITY_TOL:
            raise ValueError("matrix is not hermitian within 1e-12")
        if abs(complex(mat.trace()) - 1.0) > TRACE_TOL:
            raise ValueError(f"trace must equal 1 within 1e-12, got {complex(mat.trace())!r}")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "dims", dims)

    def validate(self) -> "DensityMatrix":
        """Check positivity (eigenvalues >= -1e-10) on top of the constructor checks."""
        low = float(np.linalg.eigvalsh(self.matrix)[0])
        if low < -PSD_TOL:
            raise ValueError(f"matrix has a negative eigenvalue {low!r}")
        return self

    def regrouped(self, dims) -> "DensityMatrix":
        """Same matrix, subsystems regrouped (total dimension must match)."""
        return DensityMatrix(self.matrix, tuple(dims))


def _matrix_and_dims(rho, dims=None):
    if isinstance(rho, DensityMatrix):
        return rho.matrix, rho.dims
    mat = np.asarray(rho, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    if dims is None:
        raise ValueError("subsystem dims are required for a bare matrix")
    return mat, tuple(int(d) for d in dims)


def qubit_partial_trace(state, positions) -> DensityMatrix:
    """Trace out register positions (0-based, leftmost slot is position 0).

    Accepts a register state vector, a bare density matrix over qubits, or a
    DensityMatrix with all-2 dims.  Kept positions stay in register order."""
    if isinstance(state, DensityMatrix):
        if any(d != 2 for d in state.dims):
            raise ValueError(f"qubit trace needs all-2 dims, got {state.dims}")
        arr = state.matrix
    else:
        arr = np.asarray(state, dtype=complex)
    if arr.ndim == 1:
        n = arr.shape[0].bit_length() - 1
        if (1 << n) != arr.shape[0]:
            raise ValueError(f"state length {arr.shape[0]} is not a power of two")
    elif arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
        n = arr.shape[0].bit_length() - 1
        if (1 << n) != arr.shape[0]:
            raise ValueError(f"matrix side {arr.shape[0]} is not a power of two")
    else:
        raise ValueError(f"expected a vector or square matrix, got shape {arr.shape}")

    traced = sorted(set(int(p) for p in positions))
    if traced and not (0 <= traced[0] and traced[-1] < n):
        raise ValueError(f"trace positions {traced} out of range for {n} qubits")
    kept = [i for i in range(n) if i not in traced]

    if arr.ndim == 1:
        tensor = arr.reshape((2,) * n).transpose(kept + traced)
        flat = tensor.reshape(1 << len(kept), 1 << len(traced))
        rho = flat @ flat.conj().T
    else:
        tensor = arr.reshape((2,) * (2 * n))
        letters = [chr(ord("a") + i) for i in range(n)]
        cols = [chr(ord("a") + n + i) if i in kept else letters[i] for i in range(n)]
        out = [letters[i] for i in kept] + [cols[i] for i in kept]
        rho = np.einsum("".join(letters + cols) + "->" + "".join(out), tensor)
        rho = rho.reshape(1 << len(kept), 1 << len(kept))
    return DensityMatrix(rho, (2,) * len(kept))


def _permute_qubit_factors(dm: DensityMatrix, order) -> DensityMatrix:
    n = len(dm.dims)
    order = list(order)
    tensor = dm.matrix.reshape((2,) * (2 * n))
    rho = tensor.transpose(order + [n + i for i in order]).reshape(dm.matrix.shape)
    return DensityMatrix(rho, dm.dims)


def qubit_reduced_state(psi, ordering) -> DensityMatrix:
    """Alice+wedge-I qubit marginal of a 5-mode state under an ordering.

    Converts to the ordered register, traces the slots holding cII and dII,
    then moves Alice's qubit to the front (the two wedge-I qubits keep their
    register order).  Returns dims (2, 2, 2)."""
    ordering = OperatorOrdering.parse(ordering)
    if len(ordering.permutation) != N_MODES:
        raise ValueError("reduced states are defined for the 5-mode register")
    register = to_qubit_basis(psi, ordering)
    traced = (ordering.permutation.index(C_II), ordering.permutation.index(D_II))
    rho = qubit_partial_trace(register, traced)
    kept_modes = [m for m in ordering.permutation if m not in (C_II, D_II)]
    alice = kept_modes.index(A)
    if alice != 0:
        rho = _permute_qubit_factors(rho, [alice] + [i for i in range(3) if i != alice])
    return rho


def reduced_state(f: StateFamily, p: UnruhParams, ordering) -> DensityMatrix:
    """Qubit-route reduced state of the built family state; dims (2, 2, 2)."""
    return qubit_reduced_state(build_state(f, p), ordering)


def _retained_monomials():
    monos = []
    retained = (A, C_I, D_I)
    for bits in itertools.product((0, 1), repeat=6):
        mono = [(m, CREATE) for m, b in zip(retained, bits[:3]) if b]
        mono += [(m, ANNIHILATE) for m, b in zip(retained, bits[3:]) if b]
        monos.append(tuple(mono))
    return monos


@lru_cache(maxsize=1)
def _subalgebra_tables():
    ops = [OperatorExpr(((1.0 + 0j, mono),)) for mono in _retained_monomials()]
    reps = np.stack([operator_matrix(op, 3) for op in ops])
    full = np.stack([operator_matrix(op, N_MODES) for op in ops])
    # Row k of the moment matrix is vec(rep_k^T), so that
    # moment @ vec(rho) = [Tr(rho rep_k)]_k.
    moment = reps.transpose(0, 2, 1).reshape(64, 64)
    try:
        inverse = np.linalg.inv(moment)
    except np.linalg.LinAlgError as exc:
        raise RuntimeError("internal error: retained-monomial moment matrix is singular") from exc
    return full, inverse


def subalgebra_reduced_state(psi) -> DensityMatrix:
    """Ordering-free reduced state on the retained modes (A, cI, dI).

    The 64 normally ordered ladder monomials on the retained modes span the
    full 8x8 matrix algebra, so the linear system

        Tr(rho rep(O_k)) = <psi| O_k |psi>,   k = 1..64

    has exactly one solution; it is returned with dims (2, 4).  Expectation
    values are taken in the 5-mode space, so wedge-II Jordan-Wigner strings
    never enter and no operator ordering is ever chosen."""
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (DIM,):
        raise ValueError(f"expected a 5-mode state of shape ({DIM},), got {psi.shape}")
    full, inverse = _subalgebra_tables()
    expectations = np.einsum("i,kij,j->k", psi.conj(), full, psi, optimize=True)
    rho = (inverse @ expectations).reshape(8, 8)
    return DensityMatrix(rho, (2, 4))


def infinite_acceleration_reduced_state(f: StateFamily, p: UnruhParams) -> DensityMatrix:
    """Endpoint route: rep(A_I) (|0><0|_A x I_4/4) rep(A_I)^dag at r = pi/4.

    The wedge-II trace of the endpoint Unruh vacuum is Alice-empty times the
    maximally mixed wedge-I state, so conjugating it by the region-I
    operator reproduces the reduced family state.  Normalised to unit trace;
    dims (2, 4)."""
    rep = operator_matrix(region_I_operator(f, p), 3)
    vac_marginal = np.diag([0.25] * 4 + [0.0] * 4).astype(complex)
    rho = rep @ vac_marginal @ rep.conj().T
    rho = rho / complex(rho.trace()).real
    return DensityMatrix(rho, (2, 4))


def partial_transpose(rho, subsystem: int, dims=None) -> np.ndarray:
    """Transpose one subsystem; returns a bare matrix (it may not be a state)."""
    mat, dims = _matrix_and_dims(rho, dims)
    k = len(dims)
    if not 0 <= int(subsystem) < k:
        raise ValueError(f"subsystem {subsystem} out of range for dims {dims}")
    sub = int(subsystem)
    tensor = mat.reshape(dims + dims)
    axes = list(range(2 * k))
    axes[sub], axes[sub + k] = axes[sub + k], axes[sub]
    return tensor.transpose(axes).reshape(mat.shape)


def negativity(rho, cut=None) -> float:
    """N(rho) = (||rho^T_A||_1 - 1)/2 across an Alice | rest cut.

    cut gives (left dim, right dim); for a DensityMatrix it defaults to
    dims[0] against the rest.  The transpose acts on the left (Alice) side.
    Eigenvalues within 1e-12 of zero count as zero, and any total below
    1e-12 is clamped to exactly 0."""
    if isinstance(rho, DensityMatrix):
        mat, dims = rho.matrix, rho.dims
    else:
        mat = np.asarray(rho, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {mat.shape}")
        if float(np.max(np.abs(mat - mat.conj().T))) > 1e-10:
            raise ValueError("negativity input is not hermitian within tolerance")
        dims = None
    if cut is None:
        if dims is None or len(dims) < 2:
            raise ValueError("cut=(left, right) is required when dims are unknown")
        left = dims[0]
        right = 1
        for d in dims[1:]:
            right *= d
    else:
        left, right = (int(cut[0]), int(cut[1]))
    if left * right != mat.shape[0]:
        raise ValueError(f"cut {left}x{right} does not match matrix side {mat.shape[0]}")
    transposed = partial_transpose(mat, 0, (left, right))
    eigs = np.linalg.eigvalsh(transposed)
    total = float(-np.sum(eigs[eigs < -EIG_ZERO_TOL]))
    return 0.0 if total < 1e-12 else total


@dataclass(frozen=True)
class OrderingSpread:
    """Negativity spread of one ordering over a q_R sample at r = pi/4."""

    ordering: OperatorOrdering
    spread: float
    convergent: bool


def classify_orderings(f: StateFamily, q_r_values=QR_GRID,
                       all_permutations: bool = False,
                       tol: float = CONVERGENCE_TOL) -> list:
    """Score operator orderings by q_R sensitivity at infinite acceleration.

    For each ordering (Alice fixed in slot 0 by default; all 120
    permutations with all_permutations=True) the negativity is computed over
    the q_R sample at r = pi/4; spread = max - min, and an ordering counts
    as convergent when the spread stays within tol.  Sorted by spread, then
    permutation, so the output order is deterministic."""
    if all_permutations:
        perms = itertools.permutations(range(N_MODES))
    else:
        perms = ((A,) + rest for rest in itertools.permutations((C_I, D_I, C_II, D_II)))
    results = []
    for perm in perms:
        ordering = OperatorOrdering(perm, _PRESET_NAMES.get(perm))
        values = [negativity(reduced_state(f, UnruhParams.from_qr(R_MAX, q), ordering))
                  for q in q_r_values]
        spread = max(values) - min(values)
        results.append(OrderingSpread(ordering, float(spread), spread <= tol))
    results.sort(key=lambda item: (item.spread, item.ordering.permutation))
    return results
