"""
This file contains the default numerical settings of the period engines and the bound checks,
and the names of the environment variables that can override some of them.

Constants
---------
QUADRATURE_REL_TOL, QUADRATURE_MAX_REFINEMENTS :
    Defaults of QuadratureConfig

CARLSON_REL_TOL, CARLSON_MAX_ITERATIONS :
    Defaults of the Carlson duplication iteration

SIM_REL_TOL, SIM_ABS_TOL_SCALE, SIM_MAX_STEPS, SIM_N_PERIODS, SIM_SAMPLE_STRIDE :
    Defaults of SimConfig. The absolute tolerance is SIM_ABS_TOL_SCALE * y0.

DEGENERACY_THRESHOLD :
    Amplitudes below DEGENERACY_THRESHOLD * L are treated as zero amplitude

BOUND_REL_SLACK :
    Relative slack of every bound check

VERIFY_SAMPLES, VERIFY_SEED, REFERENCE_PARAMS :
    Defaults of the randomized invariant suite

CONVERGENCE_Y0_FRACTIONS, CONVERGENCE_SLOPE, CONVERGENCE_SLOPE_TOL :
    Default amplitude grid of the convergence study and the expected log-log slope

ENV_REL_TOL_KEY, ENV_SEED_KEY :
    Environment variables read by utils.config_helpers
"""

QUADRATURE_REL_TOL = 1e-12
QUADRATURE_MAX_REFINEMENTS = 30

CARLSON_REL_TOL = 1e-13
CARLSON_MAX_ITERATIONS = 100

SIM_REL_TOL = 1e-10
SIM_ABS_TOL_SCALE = 1e-12
SIM_MAX_STEPS = 10_000_000
SIM_N_PERIODS = 10
SIM_SAMPLE_STRIDE = 1

DEGENERACY_THRESHOLD = 1e-9

BOUND_REL_SLACK = 1e-9

# Cross-method agreement contracts
ELLIPTIC_AGREEMENT = 1e-9
ODE_AGREEMENT = 1e-7

VERIFY_SAMPLES = 1000
VERIFY_SEED = 20240601

ENV_REL_TOL_KEY = 'SSP_REL_TOL'
ENV_SEED_KEY = 'SSP_SEED'

# Configuration used by the limit and slope checks of the invariant suite
REFERENCE_PARAMS = {'L0': 1.0, 'L': 1.25, 'sigma': 1.0, 'm': 1.0}

# Convergence study grid, as multiples of L
CONVERGENCE_Y0_FRACTIONS = (0.01, 0.02, 0.05, 0.1, 0.2)
CONVERGENCE_SLOPE = 2.0
CONVERGENCE_SLOPE_TOL = 0.1
