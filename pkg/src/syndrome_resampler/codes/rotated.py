"""Rotated surface code on a d x d grid of data qubits.

Plaquette (i, j), 0 <= i, j <= d, touches qubits (i-1, j-1), (i-1, j), (i, j-1),
(i, j) that lie on the grid. Bulk plaquettes alternate Z ((i + j) even) and X.
Weight-2 boundary plaquettes are Z on the left/right edges and X on the top/bottom
edges, keeping the checkerboard parity; for even d this gives the asymmetric
Z/X split with d^2 - 1 stabilizers in total.
"""

from syndrome_resampler.codes.base import BaseCodeBuilder
from syndrome_resampler.models import BoundaryTag, CodeSpec, Layout

Coord = tuple[int, int]


class RotatedCodeBuilder(BaseCodeBuilder):
    """Builder for the rotated layout (n = d^2)."""

    layout = Layout.ROTATED

    def qubit_coordinates(self) -> list[Coord]:
        d = self.distance
        return [(r, c) for r in range(d) for c in range(d)]

    def _plaquette(self, i: int, j: int) -> list[Coord]:
        d = self.distance
        return [
            (r, c)
            for r, c in ((i - 1, j - 1), (i - 1, j), (i, j - 1), (i, j))
            if 0 <= r < d and 0 <= c < d
        ]

    def _plaquettes(self, z_type: bool) -> list[list[Coord]]:
        d = self.distance
        out = []
        for i in range(d + 1):
            for j in range(d + 1):
                if ((i + j) % 2 == 0) != z_type:
                    continue
                on_row_edge = i in (0, d)
                on_col_edge = j in (0, d)
                if on_row_edge and on_col_edge:
                    continue
                if on_col_edge and not z_type:
                    continue
                if on_row_edge and z_type:
                    continue
                out.append(self._plaquette(i, j))
        return out

    def z_check_supports(self) -> list[list[Coord]]:
        return self._plaquettes(z_type=True)

    def x_check_supports(self) -> list[list[Coord]]:
        return self._plaquettes(z_type=False)

    def x_logical_support(self) -> list[Coord]:
        # Left column, top to bottom.
        return [(r, 0) for r in range(self.distance)]

    def z_logical_support(self) -> list[Coord]:
        return [(0, c) for c in range(self.distance)]

    def boundaries(self, row: int, col: int) -> tuple[BoundaryTag, ...]:
        d = self.distance
        tags = []
        if row == 0:
            tags.append(BoundaryTag.TOP)
        if row == d - 1:
            tags.append(BoundaryTag.BOTTOM)
        if col == 0:
            tags.append(BoundaryTag.LEFT)
        if col == d - 1:
            tags.append(BoundaryTag.RIGHT)
        return tuple(tags)


def build_rotated(d: int) -> CodeSpec:
    """Rotated surface code of distance ``d`` (d >= 2)."""
    return RotatedCodeBuilder(d).build()
