"""Fixed latitude/longitude grid that bins coordinates into microcells.

Cells are half-open squares ``[k*precision, (k+1)*precision)`` on both axes,
so every coordinate belongs to exactly one cell per precision and cell ids
are invertible to their bounding boxes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_PRECISION = 0.01  # degrees, roughly 1 km at mid latitudes


@dataclass(frozen=True)
class CellBounds:
    south: float
    west: float
    north: float
    east: float


def _check_coordinates(latitude: float, longitude: float) -> None:
    if not -90.0 <= latitude <= 90.0:
        raise ValueError(f"latitude {latitude} outside [-90, 90]")
    if not -180.0 <= longitude <= 180.0:
        raise ValueError(f"longitude {longitude} outside [-180, 180]")


def _cell_index(value: float, precision: float) -> int:
    # Coordinates are snapped to 1e-5 degrees (about a meter, below GPS
    # noise) so near-identical points bin together, and the floor gets a
    # relative epsilon so exact multiples of the precision do not wobble
    # across the boundary in floating point.
    return math.floor(round(value, 5) / precision + 1e-9)


def assign_cell(latitude: float, longitude: float, precision: float = DEFAULT_PRECISION) -> str:
    """Return the id of the grid cell containing ``(latitude, longitude)``.

    Ids look like ``"0.01_4071_-7401"``: precision, then the row index along
    latitude, then the column index along longitude.
    """
    _check_coordinates(latitude, longitude)
    if precision <= 0:
        raise ValueError(f"precision must be positive, got {precision}")
    row = _cell_index(latitude, precision)
    col = _cell_index(longitude, precision)
    return f"{precision:g}_{row}_{col}"


def cell_bounds(cell_id: str) -> CellBounds:
    """Recover the bounding box of a cell from its id."""
    precision, row, col = parse_cell_id(cell_id)
    return CellBounds(
        south=row * precision,
        west=col * precision,
        north=(row + 1) * precision,
        east=(col + 1) * precision,
    )


def parse_cell_id(cell_id: str) -> tuple[float, int, int]:
    """Split a cell id into (precision, row, col)."""
    try:
        precision_s, row_s, col_s = cell_id.split("_")
        return float(precision_s), int(row_s), int(col_s)
    except ValueError as exc:
        raise ValueError(f"malformed cell id {cell_id!r}") from exc
