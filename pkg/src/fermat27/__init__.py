"""Power-series formulas for the 27 lines on cubic surfaces near the Fermat cubic."""

from .formula import (
    ALL_PARAMETERS,
    LineLabel,
    LinePencil,
    all_labels,
    fermat_lines,
    line_pencil,
    period_matrix,
    period_series,
)
from .ring import Eisenstein, RootOfMinusOne, embed_complex, omega_power
from .series import DEFORMATION_INDEX, Series
from .verify import check_fermat_limit, check_on_surface, check_rank_two

__version__ = "0.1.0"
