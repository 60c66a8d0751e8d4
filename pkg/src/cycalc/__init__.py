"""Exact calculus for Calabi-Yau threefolds carrying non-Gorenstein involutions.

Submodules:

* :mod:`cycalc.intersection` -- divisor classes, triple products and the
  blow-up / double-cover square.
* :mod:`cycalc.riemann_roch` -- Chern restrictions and the isolated-point count.
* :mod:`cycalc.invariants` -- H^3, H.c2 and e of a double cover from quotient data.
* :mod:`cycalc.weighted` -- weighted projective spaces and diagonal involutions.
* :mod:`cycalc.fermat` -- certified fixed-point counts on Fermat complete intersections.
* :mod:`cycalc.tables` -- the classification dataset and its validators.
* :mod:`cycalc.cli` -- the ``cycalc`` command line.
"""

__version__ = "0.1.0"

SCHEMA = "cycalc/1"
