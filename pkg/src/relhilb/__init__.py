"""Relative Hilbert schemes of hypersurface projections, computed exactly.

Subpackages and modules:

* :mod:`relhilb.exactpoly` -- exact polynomial kernel
* :mod:`relhilb.projection` -- fibres of a projection from a point
* :mod:`relhilb.hilbfiber` -- fibres of the relative Hilbert scheme
* :mod:`relhilb.genuslab` -- genus formulas and VMRT numerics
* :mod:`relhilb.moricone` -- intersection table and cone of curves
* :mod:`relhilb.monodromy` -- Frobenius cycle-type sampling
* :mod:`relhilb.cli` -- command-line interface
"""

__version__ = "0.1.0"
