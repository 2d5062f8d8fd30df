"""Smooth members of pencils and linear systems of hypersurfaces over finite fields."""

__version__ = "0.1.0"

from .gf import Fe, FieldCtx, embed, field_from_spec, make_field
from .mpoly import BiForm, HomForm, det_linear_matrix, lincomb, parse_form, restrict_to_line
from .projspace import ProjLine, ProjPoint, enum_lines, enum_points, line_through, points_on_line
from .smoothness import (
    SmoothnessVerdict,
    brute_is_smooth,
    is_smooth,
    macaulay_is_smooth,
    quadric_is_smooth,
)
from .linsys import LinearSystem, enumerate_smooth_forms, members, search_all_smooth, verify_all_smooth
from .incidence import IncidenceProfile, find_avoiding_line, hasse_weil_interval, profile, t0_lower_bound
from .constructions import build_even_pencil, build_odd_pencil, example_f2_conic_net
from .bounds import curve_prop_threshold, discriminant_degree, theorem_threshold
