"""Disk-packing radius bounds on hyperbolic surfaces, and the triangulated
surfaces that attain them.

The library has three layers:

* scalar hyperbolic trigonometry and the bound solver (``hyptrig``,
  ``bounds``, ``strip``),
* combinatorial surface complexes built from triangles with edge pairings
  (``complexes``, ``blocks``, ``assembler``),
* geometric certification tying the two together (``geometry``), plus a CLI
  (``cli``) with JSON/CSV output and optional figures.
"""

from hypack.bounds import BoundReport, SurfaceSignature, boroczky_bound, naive_bound, solve_vor
from hypack.complexes import TriangulatedComplex

__all__ = [
    "BoundReport",
    "SurfaceSignature",
    "TriangulatedComplex",
    "boroczky_bound",
    "naive_bound",
    "solve_vor",
]
