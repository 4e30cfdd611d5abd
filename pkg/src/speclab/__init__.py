"""speclab: numerical laboratory for radial Toeplitz spectra.

Radial symbols act diagonally on the standard monomial bases of the Fock
space over C^d and the weighted Bergman space over the unit ball, so their
spectral data reduces to explicit one-dimensional integrals. This package
computes those eigenvalue sequences and the corresponding Berezin transforms
to controlled accuracy, and certifies parameter windows where the Berezin
transform stays positive at infinity while the eigenvalue sequence keeps
dipping below zero — the gap that separates the two notions of essential
positivity.
"""

__version__ = "0.1.0"

from .quadrature import IntegrandError, QuadResult  # noqa: F401
from .fock import FockSymbol, SpectralSamples  # noqa: F401
from .bergman import BergmanSymbol  # noqa: F401
from .certify import (  # noqa: F401
    CounterexampleCertificate,
    LiminfEstimate,
    ParamRegion,
)
