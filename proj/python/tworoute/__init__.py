"""Two-vehicle routing toolkit.

Exact dynamic programs for the balanced two-period TSP and the rich
two-vehicle VRP, a seeded generator of disguised solvable instances with
known optima, the recognition-based KS heuristic, and the sliding-subset
local search framework. The heavy lifting lives in the C++ extension.
"""

from tworoute._core import *  # noqa: F401,F403
from tworoute._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = (__doc__ or "") + "\n\n" + (_core_doc or "")
