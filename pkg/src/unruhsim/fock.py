"""Exact ladder-operator algebra for small fermionic Fock spaces.

The five modes of the Alice + two-wedge setting are fixed in the canonical
order

    index 0: A      Alice's mode
    index 1: cI     wedge-I particle
    index 2: dI     wedge-I antiparticle
    index 3: cII    wedge-II particle
    index 4: dII    wedge-II antiparticle

Basis kets are labelled by occupation tuples (n0, ..., n4) through the
canonical operator product

    |n0 n1 n2 n3 n4> = (f0^dag)^n0 (f1^dag)^n1 ... (f4^dag)^n4 |00000>

and stored big-endian: mode 0 is the most significant bit, so the amplitude
index of a ket is sum_k n_k * 2**(n_modes - 1 - k).

Sign convention: a ladder operator on mode m applied to a basis ket picks up
(-1)**(number of occupied modes with index < m), a Jordan-Wigner string over
the canonical order.  Monomials inside an OperatorExpr are read right to
left, i.e. the rightmost factor acts first, as in ordinary operator
composition.

State vectors are plain complex numpy arrays of length 2**n_modes (the mode
count is inferred from the length); nothing in this module renormalises
them.  All values are immutable once built and every function is pure, so
everything here is safe to share across concurrent workers.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MODE_LABELS = ("A", "cI", "dI", "cII", "dII")
A, C_I, D_I, C_II, D_II = range(5)
N_MODES = 5
DIM = 1 << N_MODES

CREATE = "+"
ANNIHILATE = "-"


def _mode_count(dim: int) -> int:
    n = dim.bit_length() - 1
    if dim <= 0 or (1 << n) != dim:
        raise ValueError(f"state dimension {dim} is not a power of two")
    return n


def _check_mode(mode, n_modes: int) -> int:
    mode = int(mode)
    if not 0 <= mode < n_modes:
        raise ValueError(f"mode index {mode} out of range for {n_modes} modes")
    return mode


def basis_index(occupations) -> int:
    """Big-endian basis index of an occupation pattern (mode 0 most significant)."""
    index = 0
    for b in occupations:
        b = int(b)
        if b not in (0, 1):
            raise ValueError(f"occupations must be 0/1 bits, got {occupations!r}")
        index = (index << 1) | b
    return index


def occupations(index: int, n_modes: int = N_MODES) -> tuple[int, ...]:
    """Occupation pattern of a basis index; inverse of basis_index."""
    if not 0 <= index < (1 << n_modes):
        raise ValueError(f"basis index {index} out of range for {n_modes} modes")
    return tuple((index >> (n_modes - 1 - k)) & 1 for k in range(n_modes))


def ket(occupations_spec) -> np.ndarray:
    """Basis ket from a "01000"-style bit string or an occupation tuple."""
    bits = [int(b) for b in occupations_spec]
    vec = np.zeros(1 << len(bits), dtype=complex)
    vec[basis_index(bits)] = 1.0
    return vec


@lru_cache(maxsize=None)
def _ladder_table(n_modes: int, mode: int, kind: str):
    # Signed index map of one ladder operator; kets it kills are simply absent.
    shift = n_modes - 1 - mode
    src, dst, sign = [], [], []
    for i in range(1 << n_modes):
        occupied = (i >> shift) & 1
        if kind == CREATE and occupied:
            continue
        if kind == ANNIHILATE and not occupied:
            continue
        parity = bin(i >> (shift + 1)).count("1") & 1
        src.append(i)
        dst.append(i ^ (1 << shift))
        sign.append(-1.0 if parity else 1.0)
    return (np.array(src, dtype=np.intp), np.array(dst, dtype=np.intp),
            np.array(sign))


def _apply_ladder(mode, psi, kind: str) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    n_modes = _mode_count(psi.shape[0])
    mode = _check_mode(mode, n_modes)
    src, dst, sign = _ladder_table(n_modes, mode, kind)
    out = np.zeros_like(psi)
    out[dst] = sign.reshape((-1,) + (1,) * (psi.ndim - 1)) * psi[src]
    return out


def apply_creation(mode, psi) -> np.ndarray:
    """f_mode^dag applied to psi; occupied kets map to zero (Pauli exclusion)."""
    return _apply_ladder(mode, psi, CREATE)


def apply_annihilation(mode, psi) -> np.ndarray:
    """f_mode applied to psi; the adjoint of apply_creation."""
    return _apply_ladder(mode, psi, ANNIHILATE)


@dataclass(frozen=True)
class OperatorExpr:
    """Complex-weighted sum of ladder monomials.

    ``terms`` is a tuple of (coefficient, monomial) pairs; a monomial is a
    tuple of (mode, kind) factors with kind CREATE/ANNIHILATE, read right to
    left (rightmost factor acts first).  The empty monomial is the identity.
    Expressions combine with +, -, scalar * and operator * (composition,
    left factor acts last); adjoint() reverses each monomial, swaps kinds
    and conjugates coefficients.
    """

    terms: tuple

    def __post_init__(self):
        cleaned = []
        for coeff, monomial in self.terms:
            factors = []
            for mode, kind in monomial:
                if kind not in (CREATE, ANNIHILATE):
                    raise ValueError(f"factor kind must be CREATE or ANNIHILATE, got {kind!r}")
                factors.append((int(mode), kind))
            cleaned.append((complex(coeff), tuple(factors)))
        object.__setattr__(self, "terms", tuple(cleaned))

    def __add__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return OperatorExpr(self.terms + other.terms)

    def __sub__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self._scaled(-1.0)

    def _scaled(self, scalar):
        scalar = complex(scalar)
        return OperatorExpr(tuple((scalar * c, m) for c, m in self.terms))

    def __mul__(self, other):
        if isinstance(other, OperatorExpr):
            return OperatorExpr(tuple(
                (c1 * c2, m1 + m2)
                for c1, m1 in self.terms for c2, m2 in other.terms))
        if isinstance(other, numbers.Number):
            return self._scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return self._scaled(other)
        return NotImplemented

    def adjoint(self) -> "OperatorExpr":
        """Hermitian adjoint: reversed factors, swapped kinds, conjugated weights."""
        flip = {CREATE: ANNIHILATE, ANNIHILATE: CREATE}
        return OperatorExpr(tuple(
            (c.conjugate(), tuple((m, flip[k]) for m, k in reversed(mono)))
            for c, mono in self.terms))

    def coefficients(self) -> dict:
        """Monomial -> summed coefficient, with exact zeros dropped."""
        merged: dict = {}
        for coeff, mono in self.terms:
            merged[mono] = merged.get(mono, 0j) + coeff
        return {m: c for m, c in merged.items() if c != 0}


def creation(mode) -> OperatorExpr:
    return OperatorExpr(((1.0 + 0j, ((int(mode), CREATE),)),))


def annihilation(mode) -> OperatorExpr:
    return OperatorExpr(((1.0 + 0j, ((int(mode), ANNIHILATE),)),))


def identity() -> OperatorExpr:
    return OperatorExpr(((1.0 + 0j, ()),))


def coefficient_distance(left: OperatorExpr, right: OperatorExpr) -> float:
    """Largest coefficient gap between two expressions, monomial by monomial."""
    a, b = left.coefficients(), right.coefficients()
    keys = set(a) | set(b)
    if not keys:
        return 0.0
    return max(abs(a.get(k, 0j) - b.get(k, 0j)) for k in keys)


def apply_operator(op: OperatorExpr, psi) -> np.ndarray:
    """Linear action of op on psi; within a monomial the rightmost factor acts first."""
    psi = np.asarray(psi, dtype=complex)
    _mode_count(psi.shape[0])
    out = np.zeros_like(psi)
    for coeff, monomial in op.terms:
        vec = psi
        for mode, kind in reversed(monomial):
            vec = _apply_ladder(mode, vec, kind)
        out += coeff * vec
    return out


def operator_matrix(op: OperatorExpr, n_modes: int = N_MODES) -> np.ndarray:
    """Dense matrix of op on the 2**n_modes space; column j is op|ket j>."""
    return apply_operator(op, np.eye(1 << n_modes, dtype=complex))


def inner_product(phi, psi) -> complex:
    """<phi|psi>, conjugate-linear in the first argument."""
    phi = np.asarray(phi, dtype=complex)
    psi = np.asarray(psi, dtype=complex)
    if phi.ndim != 1 or phi.shape != psi.shape:
        raise ValueError(f"dimension mismatch: {phi.shape} vs {psi.shape}")
    return complex(np.vdot(phi, psi))
