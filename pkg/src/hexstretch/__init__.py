"""Right-angled hyperbolic hexagons, their canonical deformations and extremal Lipschitz maps."""

from .config import DEFAULT_TOL, Tolerances
from .deform import (DeformationFamily, StretchReport, deform, L_of_K, leaf_stretch, map_point,
                     transverse_contraction, verify_lipschitz)
from .errors import (ConvergenceError, DegenerateError, DomainError, HexError, IdealLimit, OutOfChart,
                     OutsideHexagon, TraceError)
from .hexagon import (EmbeddedHexagon, FoliationCoord, HexagonShape, HexType, classify_short, coord_to_point,
                      embed, hexagon_from_alphas_d, hexagon_from_half_longs, point_to_coord)
from .hyperbolic import (DiscPoint, Geodesic, Hypercycle, dist, geodesic_through, hypercycle_arclength,
                         point_polar, project_to_geodesic)
from .quad import QuadShape, L_from_s, quad_degenerate, quad_from_alpha_d, quad_residuals
from .surface import (Gluing, MetricCertificate, TriangulatedSurface, arc_certificate, boundary_cycles,
                      cycle_sum, deform_surface, luo_radius, surface_k, validate)

__all__ = [name for name in dir() if not name.startswith("_")]
