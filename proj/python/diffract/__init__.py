"""Diffraction-theoretic numerics for point measures: van Hove averaging,
Besicovitch/Weyl seminorms, Fourier-Bohr coefficients, autocorrelation,
consistent-phase-property checks, cut-and-project spectra, and
almost-periodicity classifiers."""

try:
    # installed wheel: the extension lives inside the package
    from ._diffract import *  # noqa: F401,F403
except ImportError:
    # build tree: the extension sits on PYTHONPATH
    from _diffract import *  # noqa: F401,F403
