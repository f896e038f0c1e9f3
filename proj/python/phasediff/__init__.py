"""Phase estimation under phase diffusion: homodyne simulation, Bayesian
inference, and quantum Cramér-Rao benchmarks."""

from ._core import *  # noqa: F401,F403
from ._core import __all__  # noqa: F401
