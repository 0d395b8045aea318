"""Exact h-deformed structure constants of projective spaces, toric surfaces,
and small Grassmannians.

Thin re-export of the compiled _hdlr module; all values are canonical
polynomial strings or JSON documents with string-encoded coefficients.
"""

try:
    from ._hdlr import *  # noqa: F401,F403  (installed wheel layout)
    from ._hdlr import __version__  # noqa: F401
except ImportError:  # development layout: module on PYTHONPATH next to build dir
    from _hdlr import *  # noqa: F401,F403
    from _hdlr import __version__  # noqa: F401

__all__ = [
    "C_projective",
    "binomial",
    "c_pieri_gr2",
    "c_projective",
    "check_conjectures",
    "gr_constant",
    "gr_table",
    "restriction",
    "run_suite",
    "sc_term",
    "subset_to_partition",
    "toric_table",
    "__version__",
]
