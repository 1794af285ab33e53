"""Unruh-mode operators, the two-wedge vacuum and the Alice+field state family.

Acceleration enters through a mixing angle r in [0, pi/4]; r = 0 is the
inertial limit and r = pi/4 the infinite-acceleration endpoint.  An Unruh
mode is fixed by complex weights (q_r, q_l) with |q_r|^2 + |q_l|^2 = 1;
q_r = 1 is the single-mode special case.

Conventions carried over from fock: canonical mode order (A, cI, dI, cII,
dII), big-endian indexing, Jordan-Wigner signs over that order.  The wedge
vacuum |00000> is the reference state everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fock import (A, C_I, C_II, D_I, D_II, OperatorExpr, annihilation,
                   apply_operator, creation, identity, ket)

R_MAX = math.pi / 4
SQRT_HALF = math.sqrt(0.5)
NORM_TOL = 1e-12

# Default sweep grids.  np.linspace hits the pi/4 endpoint exactly (as a
# double), which the endpoint identities rely on.
R_GRID = tuple(float(r) for r in np.linspace(0.0, R_MAX, 50))
QR_GRID = (0.0, 0.3, 0.5, SQRT_HALF, 0.8, 0.9, 0.95, 1.0)


@dataclass(frozen=True)
class UnruhParams:
    """Acceleration angle r plus Unruh-mode weights (q_r, q_l)."""

    r: float
    q_r: complex
    q_l: complex

    def __post_init__(self):
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "q_r", complex(self.q_r))
        object.__setattr__(self, "q_l", complex(self.q_l))
        if not 0.0 <= self.r <= R_MAX:
            raise ValueError(f"r must lie in [0, pi/4], got {self.r!r}")
        weight = abs(self.q_r) ** 2 + abs(self.q_l) ** 2
        if abs(weight - 1.0) > NORM_TOL:
            raise ValueError(f"|q_r|^2 + |q_l|^2 must equal 1, got {weight!r}")

    @classmethod
    def from_qr(cls, r, q_r) -> "UnruhParams":
        """Real-weight convention: q_r in [0, 1] and q_l = sqrt(1 - q_r^2)."""
        q_r = float(q_r)
        if not 0.0 <= q_r <= 1.0:
            raise ValueError(f"q_R must lie in [0, 1], got {q_r!r}")
        return cls(r, q_r, math.sqrt(1.0 - q_r * q_r))


@dataclass(frozen=True)
class StateFamily:
    """Weights of the Alice+field superposition

        P |0>_A (a1 + a2 C_U^dag) |vac_U> + Q |1>_A (b1 + b2 C_U^dag) |vac_U>

    with |P|^2+|Q|^2 = |a1|^2+|a2|^2 = |b1|^2+|b2|^2 = 1.  Those three
    constraints make the built state unit-norm automatically.
    """

    P: complex
    Q: complex
    a1: complex
    a2: complex
    b1: complex
    b2: complex

    def __post_init__(self):
        for name in ("P", "Q", "a1", "a2", "b1", "b2"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        for label, x, y in (("(P, Q)", self.P, self.Q),
                            ("(a1, a2)", self.a1, self.a2),
                            ("(b1, b2)", self.b1, self.b2)):
            weight = abs(x) ** 2 + abs(y) ** 2
            if abs(weight - 1.0) > NORM_TOL:
                raise ValueError(f"{label} must be unit norm, got |.|^2 = {weight!r}")

    @classmethod
    def bell(cls) -> "StateFamily":
        """Equal-weight family pairing Alice's vacuum with the field vacuum and
        Alice's excitation with one field excitation; at (r=0, q_R=1) the
        built state is a Bell pair on (A, cI)."""
        return cls(SQRT_HALF, SQRT_HALF, 1.0, 0.0, 0.0, 1.0)


def unruh_creation(p: UnruhParams) -> OperatorExpr:
    """Creation operator of the (q_r, q_l) Unruh mode,

        q_r (cos r cI+ - sin r dII-) + q_l (cos r cII+ - sin r dI-),

    where +/- mark creation/annihilation: the Bogoliubov transform mixes
    particle creation in one wedge with antiparticle annihilation in the
    other."""
    cr, sr = math.cos(p.r), math.sin(p.r)
    right = cr * creation(C_I) - sr * annihilation(D_II)
    left = cr * creation(C_II) - sr * annihilation(D_I)
    return p.q_r * right + p.q_l * left


def region_modes(p: UnruhParams) -> tuple[OperatorExpr, OperatorExpr]:
    """Wedge-local creation operators (a_I^dag, a_II^dag) of the Unruh mode:

        a_I^dag  = q_r cI+  - q_l dI-
        a_II^dag = q_l cII+ - q_r dII-

    Each touches one wedge only, so conjugating a state by either is a local
    operation with respect to the wedge split."""
    a_one = p.q_r * creation(C_I) - p.q_l * annihilation(D_I)
    a_two = p.q_l * creation(C_II) - p.q_r * annihilation(D_II)
    return a_one, a_two


def unruh_vacuum(r) -> np.ndarray:
    """Normalized state annihilated by every Unruh mode at angle r.

    Expansion over the wedge vacuum (Alice's mode left empty, so the result
    lives in the full 32-dimensional space):

        (cos^2 r
         + cos r sin r  cII+ dI+
         - cos r sin r  dII+ cI+
         + sin^2 r      dII+ cII+ cI+ dI+) |00000>.

    The trigonometric weights sum in quadrature to 1, so no normalisation
    factor is needed."""
    r = float(r)
    if not 0.0 <= r <= R_MAX:
        raise ValueError(f"r must lie in [0, pi/4], got {r!r}")
    c, s = math.cos(r), math.sin(r)
    expr = ((c * c) * identity()
            + (c * s) * (creation(C_II) * creation(D_I))
            - (c * s) * (creation(D_II) * creation(C_I))
            + (s * s) * (creation(D_II) * creation(C_II) * creation(C_I) * creation(D_I)))
    return apply_operator(expr, ket("00000"))


def build_state(f: StateFamily, p: UnruhParams) -> np.ndarray:
    """Alice+field superposition of the family f on top of the Unruh vacuum.

    Returns P a1 |vac> + P a2 C_U^dag |vac> + Q b1 A+ |vac> + Q b2 A+ C_U^dag |vac>
    with |vac> = unruh_vacuum(p.r).  The family constraints force unit norm;
    a deviation beyond 1e-9 signals a bug and raises rather than being
    silently renormalised."""
    c_u = unruh_creation(p)
    alice = creation(A)
    expr = ((f.P * f.a1) * identity()
            + (f.P * f.a2) * c_u
            + (f.Q * f.b1) * alice
            + (f.Q * f.b2) * (alice * c_u))
    psi = apply_operator(expr, unruh_vacuum(p.r))
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > 1e-9:
        raise RuntimeError(f"internal error: built state has norm {norm!r}, expected 1")
    return psi


def region_I_operator(f: StateFamily, p: UnruhParams) -> OperatorExpr:
    """Alice+wedge-I operator reproducing build_state at the endpoint.

    At r = pi/4 the wedge-local pieces act identically on the vacuum, so a
    Unruh excitation there equals sqrt(2) a_I^dag |vac>.  Hence

        A_I = P a1 + sqrt(2) P a2 a_I^dag + Q b1 A+ + sqrt(2) Q b2 A+ a_I^dag

    touches only modes (A, cI, dI) and satisfies
    apply_operator(A_I, unruh_vacuum(pi/4)) == build_state(f, p) exactly."""
    if abs(p.r - R_MAX) > 1e-12:
        raise ValueError(f"region-I construction is only defined at r = pi/4, got r = {p.r!r}")
    a_one, _ = region_modes(p)
    alice = creation(A)
    root2 = math.sqrt(2.0)
    return ((f.P * f.a1) * identity()
            + (root2 * f.P * f.a2) * a_one
            + (f.Q * f.b1) * alice
            + (root2 * f.Q * f.b2) * (alice * a_one))


def _unit_pair(rng) -> tuple[complex, complex]:
    while True:
        z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        norm = np.linalg.norm(z)
        if norm > 1e-6:
            z = z / norm
            return complex(z[0]), complex(z[1])


def random_family(rng) -> StateFamily:
    """Random valid family: three independent unit-norm complex pairs."""
    return StateFamily(*_unit_pair(rng), *_unit_pair(rng), *_unit_pair(rng))


def random_params(rng, r=None) -> UnruhParams:
    """Random Unruh parameters with complex weights; r uniform unless given."""
    q_r, q_l = _unit_pair(rng)
    if r is None:
        r = rng.uniform(0.0, R_MAX)
    return UnruhParams(float(r), q_r, q_l)
