from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances used across the package.

    Every field can be overridden from the command line with the matching
    ``--tol-*`` flag (underscores become dashes).
    """

    residual: float = 1e-10        # construction residuals of the quadrilateral relations
    identity: float = 1e-12        # purely algebraic identities
    type_ii: float = 1e-10         # |L_i| below this classifies as Type II
    containment: float = 1e-10     # point-in-hexagon slack, toward inclusion
    glue: float = 1e-10            # glued half-length mismatch
    fd: float = 1e-4               # finite-difference Lipschitz verification
    fd_step: float = 1e-5          # FD step in hyperbolic length units
    quadrature: float = 1e-10      # adaptive Simpson tolerance (oracles only)


DEFAULT_TOL = Tolerances()
