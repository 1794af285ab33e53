"""Negativity sweeps over (r, q_R, ordering) grids and their CSV form."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .entanglement import OperatorOrdering, negativity, reduced_state
from .unruh import QR_GRID, R_MAX, StateFamily, UnruhParams

NEGATIVITY_CEILING = 0.5 + 1e-9


@dataclass(frozen=True)
class SweepConfig:
    """Grid description; the defaults reproduce the standard benchmark sweep
    (50 r points, the 8-value q_R sample, both ordering presets, the bell
    family) giving 800 rows."""

    r_points: int = 50
    q_r_values: tuple = QR_GRID
    orderings: tuple = ("physical", "legacy-interleaved")
    family: StateFamily = field(default_factory=StateFamily.bell)
    out: str | None = None

    def __post_init__(self):
        if int(self.r_points) < 1:
            raise ValueError(f"r_points must be a positive integer, got {self.r_points!r}")
        object.__setattr__(self, "r_points", int(self.r_points))
        object.__setattr__(self, "q_r_values", tuple(float(q) for q in self.q_r_values))
        object.__setattr__(self, "orderings", tuple(self.orderings))


@dataclass(frozen=True)
class SweepRecord:
    r: float
    q_r: float
    ordering: str
    negativity: float


def r_grid(n_points: int) -> np.ndarray:
    """Uniform r grid on [0, pi/4]; the endpoint is hit exactly.  A single
    point degenerates to the endpoint alone."""
    if n_points < 1:
        raise ValueError(f"need at least one r point, got {n_points}")
    if n_points == 1:
        return np.array([R_MAX])
    return np.linspace(0.0, R_MAX, n_points)


def sweep_records(config: SweepConfig) -> list:
    """Evaluate the grid; rows ordered by (ordering as listed, q_R ascending,
    r ascending).  Evaluation is sequential and pure, so repeated runs give
    bit-identical numbers."""
    grid = r_grid(config.r_points)
    records = []
    for spec in config.orderings:
        ordering = OperatorOrdering.parse(spec)
        for q in sorted(config.q_r_values):
            for r in grid:
                value = negativity(reduced_state(
                    config.family, UnruhParams.from_qr(float(r), q), ordering))
                if not 0.0 <= value <= NEGATIVITY_CEILING:
                    raise RuntimeError(
                        f"internal error: negativity {value!r} outside [0, 1/2] "
                        f"at r={float(r)!r}, q_R={q!r}, ordering={ordering.label}")
                records.append(SweepRecord(float(r), q, ordering.label, value))
    return records


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def render_csv(records) -> str:
    """CSV text: header r,q_R,ordering,negativity; 12 significant digits."""
    lines = ["r,q_R,ordering,negativity"]
    lines += [f"{_fmt(rec.r)},{_fmt(rec.q_r)},{rec.ordering},{_fmt(rec.negativity)}"
              for rec in records]
    return "\n".join(lines) + "\n"


def gnuplot_script(csv_path: str, config: SweepConfig) -> str:
    """A gnuplot script plotting negativity against r, one curve per
    (ordering, q_R) block of the CSV written for this config."""
    n = config.r_points
    plots = []
    block = 0
    for spec in config.orderings:
        label = OperatorOrdering.parse(spec).label
        for q in sorted(config.q_r_values):
            first = 1 + block * n  # data line numbers, header excluded by skip
            plots.append(f'"{csv_path}" skip 1 using 1:4 every ::{first - 1}::{first + n - 2} '
                         f'with lines title "{label} q_R={q:g}"')
            block += 1
    body = ", \\\n     ".join(plots)
    return ("set datafile separator comma\n"
            "set xlabel 'r'\n"
            "set ylabel 'negativity'\n"
            "set key outside\n"
            f"plot {body}\n")
