"""Unrotated (planar) surface code on a (2d-1) x (2d-1) grid.

Data qubits sit at (r, c) with r + c even; Z checks at (even, odd) and X checks
at (odd, even) act on their lattice neighbours. X strings run left to right.
"""

from syndrome_resampler.codes.base import BaseCodeBuilder
from syndrome_resampler.models import BoundaryTag, CodeSpec, Layout

Coord = tuple[int, int]


class UnrotatedCodeBuilder(BaseCodeBuilder):
    """Builder for the unrotated layout (n = d^2 + (d-1)^2)."""

    layout = Layout.UNROTATED

    @property
    def size(self) -> int:
        return 2 * self.distance - 1

    def qubit_coordinates(self) -> list[Coord]:
        s = self.size
        return [(r, c) for r in range(s) for c in range(s) if (r + c) % 2 == 0]

    def _neighbours(self, r: int, c: int) -> list[Coord]:
        s = self.size
        return [
            (rr, cc)
            for rr, cc in ((r - 1, c), (r, c - 1), (r, c + 1), (r + 1, c))
            if 0 <= rr < s and 0 <= cc < s
        ]

    def z_check_supports(self) -> list[list[Coord]]:
        s = self.size
        return [self._neighbours(r, c) for r in range(0, s, 2) for c in range(1, s, 2)]

    def x_check_supports(self) -> list[list[Coord]]:
        s = self.size
        return [self._neighbours(r, c) for r in range(1, s, 2) for c in range(0, s, 2)]

    def x_logical_support(self) -> list[Coord]:
        return [(0, c) for c in range(0, self.size, 2)]

    def z_logical_support(self) -> list[Coord]:
        return [(r, 0) for r in range(0, self.size, 2)]

    def boundaries(self, row: int, col: int) -> tuple[BoundaryTag, ...]:
        last = self.size - 1
        tags = []
        if row == 0:
            tags.append(BoundaryTag.TOP)
        if row == last:
            tags.append(BoundaryTag.BOTTOM)
        if col == 0:
            tags.append(BoundaryTag.LEFT)
        if col == last:
            tags.append(BoundaryTag.RIGHT)
        return tuple(tags)


def build_unrotated(d: int) -> CodeSpec:
    """Unrotated surface code of distance ``d`` (d >= 2)."""
    return UnrotatedCodeBuilder(d).build()
