"""Base builder interface for surface-code layouts."""

from abc import ABC, abstractmethod

from syndrome_resampler.errors import ResamplerError
from syndrome_resampler.models import BoundaryTag, CodeSpec, Layout, QubitSite


class CodeError(ResamplerError):
    """Base exception for code construction errors."""

    pass


class InvalidDistanceError(CodeError):
    """Raised when a code distance is below the supported minimum."""

    pass


class BaseCodeBuilder(ABC):
    """Abstract base class for code builders.

    Subclasses lay out data qubits and Z/X checks on a lattice; this class turns
    the lattice description into an indexed :class:`CodeSpec`.
    """

    layout: Layout

    def __init__(self, distance: int):
        """Initialize builder with a code distance.

        Args:
            distance: Code distance, at least 2

        Raises:
            InvalidDistanceError: If distance < 2
        """
        if not isinstance(distance, int) or distance < 2:
            raise InvalidDistanceError(f"distance must be an integer >= 2, got {distance!r}")
        self.distance = distance

    @abstractmethod
    def qubit_coordinates(self) -> list[tuple[int, int]]:
        """Data-qubit lattice coordinates (row, col)."""
        pass

    @abstractmethod
    def z_check_supports(self) -> list[list[tuple[int, int]]]:
        """Qubit coordinates of every Z check, in check-index order."""
        pass

    @abstractmethod
    def x_check_supports(self) -> list[list[tuple[int, int]]]:
        pass

    @abstractmethod
    def x_logical_support(self) -> list[tuple[int, int]]:
        pass

    @abstractmethod
    def z_logical_support(self) -> list[tuple[int, int]]:
        pass

    @abstractmethod
    def boundaries(self, row: int, col: int) -> tuple[BoundaryTag, ...]:
        pass

    def build(self) -> CodeSpec:
        """Index the lattice row-major and assemble the CodeSpec."""
        coords = sorted(self.qubit_coordinates())
        index = {rc: i for i, rc in enumerate(coords)}

        def _indices(support: list[tuple[int, int]]) -> tuple[int, ...]:
            return tuple(sorted(index[rc] for rc in support))

        sites = tuple(
            QubitSite(row=r, col=c, boundaries=self.boundaries(r, c)) for r, c in coords
        )
        column_order = tuple(
            sorted(range(len(coords)), key=lambda q: (coords[q][1], coords[q][0]))
        )
        return CodeSpec(
            distance=self.distance,
            layout=self.layout,
            n=len(coords),
            z_checks=tuple(_indices(s) for s in self.z_check_supports()),
            x_checks=tuple(_indices(s) for s in self.x_check_supports()),
            x_logical=_indices(self.x_logical_support()),
            z_logical=_indices(self.z_logical_support()),
            sites=sites,
            column_order=column_order,
        )
