"""Miraculous pentagrams: frieze solutions, Fibonacci pentagrams, Gauss's cubic."""

from .frieze import (
    GOLDEN,
    Pentagram,
    complete_frieze,
    complete_frieze_gamma_epsilon,
    convergent,
    fibonacci,
    fibonacci_omega,
    fibonacci_pentagram,
    frieze_residuals,
    lyness_orbit,
    omega,
    regular_pentagram,
)
from .gauss import (
    FibonacciRoot,
    GaussRoots,
    fib_rational_root,
    gauss_cubic,
    gauss_roots,
    legendre_k2,
    remaining_quadratic,
    remaining_roots_closed_form,
)
from .sphere import (
    ProjectionReport,
    SphericalPentagram,
    default_center,
    inner_pentagon,
    orthocentric_projection,
    spherical_realization,
)

__all__ = [
    "GOLDEN",
    "FibonacciRoot",
    "GaussRoots",
    "Pentagram",
    "ProjectionReport",
    "SphericalPentagram",
    "complete_frieze",
    "complete_frieze_gamma_epsilon",
    "convergent",
    "default_center",
    "fib_rational_root",
    "fibonacci",
    "fibonacci_omega",
    "fibonacci_pentagram",
    "frieze_residuals",
    "gauss_cubic",
    "gauss_roots",
    "inner_pentagon",
    "legendre_k2",
    "lyness_orbit",
    "omega",
    "orthocentric_projection",
    "regular_pentagram",
    "remaining_quadratic",
    "remaining_roots_closed_form",
    "spherical_realization",
]
