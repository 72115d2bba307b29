"""2D poses, rigid transforms, and exact grid traversal primitives.

Conventions used everywhere in the package:
  * world frame: x right, y up, angles in radians, counter-clockwise positive
  * headings normalized to [0, 2*pi), relative angles to (-pi, pi]
  * a grid cell is the integer pair (ix, iy); arrays are indexed arr[iy, ix]
  * cell (ix, iy) covers [ix*cs, (ix+1)*cs) x [iy*cs, (iy+1)*cs)
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


def wrap_angle(theta: float) -> float:
    """Normalize an angle to [0, 2*pi)."""
    theta = math.fmod(theta, TWO_PI)
    if theta < 0.0:
        theta += TWO_PI
    return theta


def wrap_signed(theta: float) -> float:
    """Normalize an angle to (-pi, pi]."""
    theta = math.fmod(theta, TWO_PI)
    if theta > math.pi:
        theta -= TWO_PI
    elif theta <= -math.pi:
        theta += TWO_PI
    return theta


@dataclass(frozen=True)
class Pose2D:
    """Agent position (meters) and heading (radians, normalized to [0, 2*pi))."""

    x: float
    y: float
    heading: float

    def __post_init__(self):
        object.__setattr__(self, "heading", wrap_angle(self.heading))

    @property
    def xy(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class RigidTransform2D:
    """Body-frame rigid motion: translation (tx, ty) and rotation dtheta in (-pi, pi]."""

    tx: float
    ty: float
    dtheta: float

    def __post_init__(self):
        object.__setattr__(self, "dtheta", wrap_signed(self.dtheta))

    @staticmethod
    def identity() -> "RigidTransform2D":
        return RigidTransform2D(0.0, 0.0, 0.0)

    @property
    def translation_norm(self) -> float:
        return math.hypot(self.tx, self.ty)

    def apply(self, points: np.ndarray) -> np.ndarray:
        """Apply to an (N, 2) point array: p -> R(dtheta) p + t."""
        c, s = math.cos(self.dtheta), math.sin(self.dtheta)
        rot = np.array([[c, -s], [s, c]])
        return points @ rot.T + np.array([self.tx, self.ty])

    def compose(self, other: "RigidTransform2D") -> "RigidTransform2D":
        """Transform equivalent to applying `other` first, then `self`."""
        c, s = math.cos(self.dtheta), math.sin(self.dtheta)
        tx = self.tx + c * other.tx - s * other.ty
        ty = self.ty + s * other.tx + c * other.ty
        return RigidTransform2D(tx, ty, self.dtheta + other.dtheta)


def advance_pose(pose: Pose2D, step: RigidTransform2D) -> Pose2D:
    """Compose a body-frame step transform onto a world pose."""
    c, s = math.cos(pose.heading), math.sin(pose.heading)
    return Pose2D(
        pose.x + c * step.tx - s * step.ty,
        pose.y + s * step.tx + c * step.ty,
        pose.heading + step.dtheta,
    )


def pose_delta(before: Pose2D, after: Pose2D) -> RigidTransform2D:
    """Body-frame transform carrying `before` to `after` (inverse of advance_pose)."""
    dx = after.x - before.x
    dy = after.y - before.y
    c, s = math.cos(before.heading), math.sin(before.heading)
    return RigidTransform2D(c * dx + s * dy, -s * dx + c * dy,
                            wrap_signed(after.heading - before.heading))


def world_to_cell(x: float, y: float, cell_size: float) -> tuple[int, int]:
    return (int(math.floor(x / cell_size)), int(math.floor(y / cell_size)))


def cell_center(ix: int, iy: int, cell_size: float) -> tuple[float, float]:
    return ((ix + 0.5) * cell_size, (iy + 0.5) * cell_size)


def traverse_ray(x: float, y: float, dx: float, dy: float, cell_size: float,
                 max_dist: float):
    """Walk the grid along a ray, yielding (ix, iy, t_entry) in visit order.

    The starting cell is yielded with t_entry = 0. Traversal is exact
    (Amanatides-Woo); when the ray passes through a cell corner the two
    edge-adjacent cells are yielded at the corner distance before the diagonal
    cell, so corner contacts are never skipped. Stops once the entry distance
    exceeds max_dist.
    """
    ix, iy = world_to_cell(x, y, cell_size)
    yield ix, iy, 0.0

    step_x = 1 if dx > 0 else (-1 if dx < 0 else 0)
    step_y = 1 if dy > 0 else (-1 if dy < 0 else 0)
    if step_x == 0 and step_y == 0:
        return

    inf = math.inf
    if step_x != 0:
        next_bx = (ix + (step_x > 0)) * cell_size
        t_max_x = (next_bx - x) / dx
        t_delta_x = cell_size / abs(dx)
    else:
        t_max_x, t_delta_x = inf, inf
    if step_y != 0:
        next_by = (iy + (step_y > 0)) * cell_size
        t_max_y = (next_by - y) / dy
        t_delta_y = cell_size / abs(dy)
    else:
        t_max_y, t_delta_y = inf, inf

    corner_eps = 1e-12 * max(cell_size, 1.0)
    while True:
        if abs(t_max_x - t_max_y) <= corner_eps:
            t = t_max_x
            if t > max_dist:
                return
            # corner contact: both edge-adjacent cells are touched
            yield ix + step_x, iy, t
            yield ix, iy + step_y, t
            ix += step_x
            iy += step_y
            t_max_x += t_delta_x
            t_max_y += t_delta_y
        elif t_max_x < t_max_y:
            t = t_max_x
            if t > max_dist:
                return
            ix += step_x
            t_max_x += t_delta_x
        else:
            t = t_max_y
            if t > max_dist:
                return
            iy += step_y
            t_max_y += t_delta_y
        yield ix, iy, t


def segment_cells(x0: float, y0: float, x1: float, y1: float, cell_size: float):
    """Yield (ix, iy, t_entry) for every cell a segment passes through."""
    dx, dy = x1 - x0, y1 - y0
    length = math.hypot(dx, dy)
    if length == 0.0:
        yield world_to_cell(x0, y0, cell_size) + (0.0,)
        return
    yield from traverse_ray(x0, y0, dx / length, dy / length, cell_size, length)


def cells_between(c0: tuple[int, int], c1: tuple[int, int]):
    """Cells strictly between two cell centers, by exact integer traversal.

    Walks the segment joining the centers of c0 and c1 using doubled integer
    coordinates, so boundary and corner crossings are decided exactly. Corner
    crossings report both edge-adjacent cells (a corner contact counts as
    touching both). c0 and c1 themselves are not yielded.
    """
    ax, ay = c0
    bx, by = c1
    dx2 = 2 * (bx - ax)  # doubled-coordinate direction
    dy2 = 2 * (by - ay)
    if dx2 == 0 and dy2 == 0:
        return
    sx = 1 if dx2 > 0 else (-1 if dx2 < 0 else 0)
    sy = 1 if dy2 > 0 else (-1 if dy2 < 0 else 0)
    adx, ady = abs(dx2), abs(dy2)

    ix, iy = ax, ay
    # numerators of the crossing parameters t = n / (2*|d|), compared exactly
    nx = 1 if sx != 0 else 0  # first x-boundary is half a cell away
    ny = 1 if sy != 0 else 0
    while (ix, iy) != (bx, by):
        if sx == 0:
            cross_x, cross_y = False, True
        elif sy == 0:
            cross_x, cross_y = True, False
        else:
            lhs = nx * ady
            rhs = ny * adx
            cross_x = lhs <= rhs
            cross_y = rhs <= lhs
        if cross_x and cross_y:
            # exact corner: both edge-adjacent cells are touched
            side_a = (ix + sx, iy)
            side_b = (ix, iy + sy)
            if side_a != (bx, by):
                yield side_a
            if side_b != (bx, by):
                yield side_b
            ix += sx
            iy += sy
            nx += 2
            ny += 2
        elif cross_x:
            ix += sx
            nx += 2
        else:
            iy += sy
            ny += 2
        if (ix, iy) != (bx, by):
            yield ix, iy
