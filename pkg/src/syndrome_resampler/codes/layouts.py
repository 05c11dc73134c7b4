"""Layout dispatch for code construction."""

from syndrome_resampler.codes.base import BaseCodeBuilder
from syndrome_resampler.codes.rotated import RotatedCodeBuilder
from syndrome_resampler.codes.unrotated import UnrotatedCodeBuilder
from syndrome_resampler.models import CodeSpec, Layout

BUILDERS: dict[Layout, type[BaseCodeBuilder]] = {
    Layout.ROTATED: RotatedCodeBuilder,
    Layout.UNROTATED: UnrotatedCodeBuilder,
}


def build_code(layout: Layout | str, distance: int) -> CodeSpec:
    """Build a surface code of the given layout and distance."""
    return BUILDERS[Layout(layout)](distance).build()
