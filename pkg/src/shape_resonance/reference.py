"""Published reference values used by the ``table1`` command and the tests.

Energies are printed to two decimals (four for the delta wall), so the
comparison tolerances below are set by that rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .models import ModelSpec

__all__ = [
    "ReferenceSystem",
    "REFERENCE_SYSTEMS",
    "DELTA_WALL",
    "DELTA_WALL_K0",
    "DELTA_WALL_E0",
    "DELTA_WALL_PEAK",
    "POLE_TOL",
    "PEAK_TOL",
]


@dataclass(frozen=True)
class ReferenceSystem:
    label: str
    spec: ModelSpec
    energies: tuple[complex, ...]
    peaks: tuple[float, ...]


REFERENCE_SYSTEMS = (
    ReferenceSystem(
        "c=0.5,d=5",
        ModelSpec.exp_two_piece(5.0, 0.5, 5.0),
        (8.88 - 1.50j, 13.14 - 1.87j, 17.30 - 2.17j, 21.51 - 2.45j, 25.80 - 2.70j),
        (8.89, 13.21, 17.34, 21.65, 26.05),
    ),
    ReferenceSystem(
        "c=0,d=5",
        ModelSpec.exp_two_piece(5.0, 0.0, 5.0),
        (9.42 - 1.23j, 13.77 - 1.49j, 18.01 - 1.69j, 22.28 - 1.89j, 26.62 - 2.07j),
        (9.36, 13.46, 18.04, 22.14, 26.43),
    ),
)

DELTA_WALL = ModelSpec.delta_wall(5.0, 1.0)
DELTA_WALL_K0 = 2.7103 - 0.1779j
DELTA_WALL_E0 = 7.3144 - 0.9648j
DELTA_WALL_PEAK = 7.32

# |E_n - ref| and |Gamma_n/2 - ref| for poles, |epsilon_n - ref| for peaks
POLE_TOL = 0.02
PEAK_TOL = 0.05
