"""
This package contains the computations behind the command-line front-end.

Modules
-------
sweep :
    Rows of periods, bounds and sandwich verdicts over a one-parameter grid, and their
    CSV / JSON serialization.

convergence :
    Relative error of Rayleigh's period over a geometric amplitude grid and the fitted
    log-log slope.

verify :
    The seeded randomized invariant suite.
"""
