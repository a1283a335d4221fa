"""sgscert: rigorous existence certification for interface ground states
of the 1D nonlinear Schroedinger equation with periodic potentials.

The package certifies, with mathematical guarantees, the sign of the two
criterion integrals whose negativity implies existence of a surface gap
soliton ground state at the interface of two periodic media.  Piecewise
constant potentials are handled in closed form; piecewise linear ones via
a validated Taylor-series ODE integrator.  All arithmetic runs on a
self-validated interval kernel (compiled core with a pure-Python twin).
"""

from .interval import BACKEND, Interval, Verdict, make, sign_verdict

__version__ = "0.1.0"

__all__ = ["BACKEND", "Interval", "Verdict", "make", "sign_verdict", "__version__"]
