"""Ground-truth occupancy maps and the ASCII map file format.

Map files are a single JSON header line followed by the grid, one row per
line: '#' wall (obstacle that occludes sight), 'X' non-wall obstacle,
'.' free. Row 0 of the text is the y=0 row of the grid.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .geometry import cell_center, world_to_cell

MAP_SCHEMA = "navlab-map/1"

WALL = "#"
OBSTACLE = "X"
FREE = "."


@dataclass
class GroundTruthMap:
    """Static occupancy grid plus the wall mask used for visibility.

    obstacles and walls are (height, width) boolean arrays indexed [iy, ix].
    Every wall cell is an obstacle cell; the border is entirely wall.
    """

    obstacles: np.ndarray
    walls: np.ndarray
    cell_size: float
    mode: str = "continuous"

    def __post_init__(self):
        self.obstacles = np.asarray(self.obstacles, dtype=bool)
        self.walls = np.asarray(self.walls, dtype=bool)
        self.validate()

    @property
    def height(self) -> int:
        return self.obstacles.shape[0]

    @property
    def width(self) -> int:
        return self.obstacles.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.obstacles.shape

    def validate(self) -> None:
        if self.obstacles.shape != self.walls.shape:
            raise ValueError("obstacle and wall grids must share dimensions")
        if self.cell_size <= 0:
            raise ValueError("cell_size must be positive")
        if np.any(self.walls & ~self.obstacles):
            raise ValueError("every wall cell must also be an obstacle cell")
        border = np.zeros(self.obstacles.shape, dtype=bool)
        border[0, :] = border[-1, :] = border[:, 0] = border[:, -1] = True
        if not np.all(self.walls[border]):
            raise ValueError("map border must be entirely wall")
        if not np.any(~self.obstacles):
            raise ValueError("map must contain at least one free cell")

    def in_bounds(self, ix: int, iy: int) -> bool:
        return 0 <= ix < self.width and 0 <= iy < self.height

    def is_free(self, ix: int, iy: int) -> bool:
        return self.in_bounds(ix, iy) and not self.obstacles[iy, ix]

    def cell_of(self, x: float, y: float) -> tuple[int, int]:
        return world_to_cell(x, y, self.cell_size)

    def center_of(self, ix: int, iy: int) -> tuple[float, float]:
        return cell_center(ix, iy, self.cell_size)

    def free_at(self, x: float, y: float) -> bool:
        ix, iy = self.cell_of(x, y)
        return self.is_free(ix, iy)

    # --- ASCII format ---

    def to_lines(self) -> list[str]:
        rows = []
        for iy in range(self.height):
            chars = []
            for ix in range(self.width):
                if self.walls[iy, ix]:
                    chars.append(WALL)
                elif self.obstacles[iy, ix]:
                    chars.append(OBSTACLE)
                else:
                    chars.append(FREE)
            rows.append("".join(chars))
        return rows

    @classmethod
    def from_lines(cls, lines: list[str], cell_size: float,
                   mode: str = "continuous") -> "GroundTruthMap":
        if not lines:
            raise ValueError("empty map grid")
        width = len(lines[0])
        height = len(lines)
        obstacles = np.zeros((height, width), dtype=bool)
        walls = np.zeros((height, width), dtype=bool)
        for iy, row in enumerate(lines):
            if len(row) != width:
                raise ValueError(f"ragged map row {iy}")
            for ix, ch in enumerate(row):
                if ch == WALL:
                    walls[iy, ix] = True
                    obstacles[iy, ix] = True
                elif ch == OBSTACLE:
                    obstacles[iy, ix] = True
                elif ch != FREE:
                    raise ValueError(f"unknown map character {ch!r}")
        return cls(obstacles, walls, cell_size, mode)

    def dumps(self) -> str:
        header = {"schema": MAP_SCHEMA, "cell_size": self.cell_size,
                  "mode": self.mode}
        return json.dumps(header, sort_keys=True) + "\n" + "\n".join(self.to_lines()) + "\n"

    @classmethod
    def loads(cls, text: str) -> "GroundTruthMap":
        header_line, _, grid = text.partition("\n")
        header = json.loads(header_line)
        if header.get("schema") != MAP_SCHEMA:
            raise ValueError(f"unsupported map schema {header.get('schema')!r}")
        lines = [ln for ln in grid.splitlines() if ln]
        return cls.from_lines(lines, float(header["cell_size"]),
                              header.get("mode", "continuous"))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def load(cls, path: str | Path) -> "GroundTruthMap":
        return cls.loads(Path(path).read_text())


def empty_room(width: int, height: int, cell_size: float,
               mode: str = "continuous") -> GroundTruthMap:
    """Rectangular room: free interior surrounded by a single wall ring."""
    obstacles = np.zeros((height, width), dtype=bool)
    obstacles[0, :] = obstacles[-1, :] = True
    obstacles[:, 0] = obstacles[:, -1] = True
    return GroundTruthMap(obstacles, obstacles.copy(), cell_size, mode)
