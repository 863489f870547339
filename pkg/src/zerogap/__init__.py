"""zerogap: zeros of classical L-functions and explicit gap bounds.

Subpackages:

* ``specfun``     complex special functions (log-gamma, zeta, elliptic)
* ``characters``  Dirichlet characters on CRT generators
* ``lfunc``       the L-function data model and its three built-in families
* ``zeroscan``    critical-line zero location and contour counting
* ``gapbounds``   explicit zero-gap bound formulas on iterated-log inputs
* ``hypgeo``      hyperbolic distance, conformal rectangle maps, lemma checks
* ``paperchecks`` strip bounds, log-derivative and fractional-part inequalities
* ``harness``     sweeps, verification suites, CSV/JSON reports
"""

__version__ = "0.1.0"
