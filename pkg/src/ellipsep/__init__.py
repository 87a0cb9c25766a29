"""Minimal contractor and separator for ellipses, SIVIA paving, and
guaranteed sonar localization."""

from .interval import Box, Interval
from .symmetry import SignedPerm
from .quadric import Foci, QuadraticForm, from_foci, is_ellipse
from .ellipse import (CardinalPoints, SepResult, cardinal_points, contract_boundary,
                      contract_positive, separate)
from .separators import (EllipseSeparator, FwdBwdSeparator, Separator, fwd_bwd_contract,
                         sep_complement, sep_from_inequality, sep_intersect)
from .paver import Paving, pave, paving_areas

__all__ = [
    "Box", "Interval", "SignedPerm", "Foci", "QuadraticForm", "from_foci", "is_ellipse",
    "CardinalPoints", "SepResult", "cardinal_points", "contract_boundary",
    "contract_positive", "separate", "EllipseSeparator", "FwdBwdSeparator", "Separator",
    "fwd_bwd_contract", "sep_complement", "sep_from_inequality", "sep_intersect",
    "Paving", "pave", "paving_areas",
]
