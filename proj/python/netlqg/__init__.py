"""Scalar LQG control over constrained channels.

Thin wrapper over the compiled core: Riccati steady states, rate/cost lower
bounds, quantizer design, and seeded Monte Carlo sweeps. Configs are JSON
text with the same strict schema the CLI uses; see ``preset_config`` for
ready-made examples.
"""

from netlqg._core import *  # noqa: F401,F403
from netlqg._core import __version__  # noqa: F401
