"""
This module integrates the full nonlinear equation of motion in time and measures the period
from the turning points of the simulated motion. It is an independent check on the quadrature
and elliptic engines.

The first-order system y' = v, v' = acceleration(y) is advanced with scipy's DOP853 (an embedded
explicit Runge-Kutta pair of order 8(5,3) with dense output), stepped one accepted step at a
time so that the step budget, step-size underflow and turning-point detection stay under our
control. A turning point is a sign change of v inside a step; its time is polished with brentq
on the step's dense-output interpolant.

Classes
-------
SimConfig :
    Tolerances, step budget, number of periods and output decimation

Trajectory :
    Time-stamped (t, y, v, E) samples and the detected turning times

Functions
---------
simulate :
    Integrate from (y0, 0) until n_periods full periods have been observed

measure_period :
    Period estimate from the gaps between consecutive turning times

period_ode :
    simulate followed by measure_period

propagate :
    Integrate from an arbitrary state for a signed duration
"""
import logging
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np
import pandas as pd
from scipy.integrate import DOP853
from scipy.optimize import brentq

from ..constants.defaults import (
    DEGENERACY_THRESHOLD,
    SIM_ABS_TOL_SCALE,
    SIM_MAX_STEPS,
    SIM_N_PERIODS,
    SIM_REL_TOL,
    SIM_SAMPLE_STRIDE,
)
from ..constants.methods import PeriodMethod
from ..model.physics import acceleration, energy, rayleigh_period
from ..model.string_params import Oscillation, StringParams
from ..utils.errors import (
    DegenerateAmplitude,
    InsufficientEvents,
    InvalidParameters,
    MaxStepsExceeded,
    StepFailure,
)
from .quadrature import PeriodEstimate

logger = logging.getLogger(__name__)

TRAJECTORY_COLUMNS = ['t', 'y', 'v', 'E']

# Turning times are polished to this relative accuracy
EVENT_REL_TOL = 1e-12


@dataclass(frozen=True)
class SimConfig:
    """
    Settings of the ODE simulation

    Attributes
    ----------
    rel_tol : float
        Relative tolerance of the step-size controller
    abs_tol : float, optional
        Absolute tolerance of the step-size controller. When None, 1e-12 * y0 is used.
    max_steps : int
        Cap on the number of accepted steps
    n_periods : int
        Number of full periods to simulate
    sample_stride : int
        Keep every sample_stride-th accepted step in the trajectory samples
    """
    rel_tol: float = SIM_REL_TOL
    abs_tol: float | None = None
    max_steps: int = SIM_MAX_STEPS
    n_periods: int = SIM_N_PERIODS
    sample_stride: int = SIM_SAMPLE_STRIDE

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise InvalidParameters(f'rel_tol must be positive, got {self.rel_tol}')
        if self.abs_tol is not None and not self.abs_tol > 0:
            raise InvalidParameters(f'abs_tol must be positive, got {self.abs_tol}')
        if self.max_steps < 1:
            raise InvalidParameters(f'max_steps must be at least 1, got {self.max_steps}')
        if self.n_periods < 1:
            raise InvalidParameters(f'n_periods must be at least 1, got {self.n_periods}')
        if self.sample_stride < 1:
            raise InvalidParameters(f'sample_stride must be at least 1, got {self.sample_stride}')

    def abs_tol_for(self, y0: float) -> float:
        return self.abs_tol if self.abs_tol is not None else SIM_ABS_TOL_SCALE * y0


@dataclass(frozen=True)
class Trajectory:
    """
    Output of simulate. Arrays are read-only.

    Attributes
    ----------
    t, y, v, E : np.ndarray
        Sample times (strictly increasing), displacement, velocity and specific energy
    events : np.ndarray
        Turning times (v = 0), starting with the release at t = 0
    """
    t: np.ndarray
    y: np.ndarray
    v: np.ndarray
    E: np.ndarray
    events: np.ndarray = field(default_factory=lambda: np.empty(0))

    def __post_init__(self):
        for name in ('t', 'y', 'v', 'E', 'events'):
            array = np.array(getattr(self, name), dtype=float)
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    def to_frame(self) -> pd.DataFrame:
        """
        The samples as a DataFrame with columns t, y, v, E
        """
        return pd.DataFrame({'t': self.t, 'y': self.y, 'v': self.v, 'E': self.E}, columns=TRAJECTORY_COLUMNS)

    def max_energy_drift(self) -> float:
        """
        max |E(t) - E(0)| / |E(0)| over the samples
        """
        return float(np.max(np.abs(self.E - self.E[0])) / abs(self.E[0]))


def _rhs(accel: Callable):
    def fun(_t, state):
        return np.array([state[1], accel(state[0])])
    return fun


def _default_accel(params: StringParams) -> Callable:
    return lambda y: acceleration(params, y)


def _step(solver) -> None:
    message = solver.step()
    if solver.status == 'failed':
        raise StepFailure(f'ODE step failed at t={solver.t}: {message}')


def _polish_turning_time(solver) -> float:
    """
    Time of v = 0 inside the last accepted step, from the dense-output interpolant
    """
    dense = solver.dense_output()
    t_old, t_new = solver.t_old, solver.t
    xtol = EVENT_REL_TOL * max(1.0, abs(t_new))
    return brentq(lambda t: dense(t)[1], t_old, t_new, xtol=xtol, rtol=4 * np.finfo(float).eps)


def simulate(osc: Oscillation, cfg: SimConfig | None = None, accel: Callable | None = None) -> Trajectory:
    """
    Integrate the equation of motion from y(0) = y0, v(0) = 0 until n_periods full periods
    (2 * n_periods turning points after the release) have been detected.

    Parameters
    ----------
    osc : Oscillation
        The problem instance, with y0 above the degeneracy threshold
    cfg : SimConfig, optional
        Simulation settings. Defaults to SimConfig().
    accel : callable, optional
        Replacement for the acceleration y -> a(y); for example model.rayleigh_acceleration bound
        to the parameters, to simulate the linearized system. The E column always uses the full
        model's energy.

    Returns
    -------
    Trajectory
        Samples and turning times. The first sample is exactly (0, y0, 0, E0).

    Raises
    ------
    DegenerateAmplitude
        If y0 is below the degeneracy threshold
    StepFailure
        If the step size underflows
    MaxStepsExceeded
        If max_steps accepted steps do not cover n_periods periods
    """
    cfg = cfg or SimConfig()
    params = osc.params
    if osc.is_degenerate(DEGENERACY_THRESHOLD):
        raise DegenerateAmplitude(f'y0 = {osc.y0} is below {DEGENERACY_THRESHOLD} * L; nothing to simulate')

    accel = accel or _default_accel(params)
    # Rayleigh's period bounds the true one from above, so this horizon always suffices
    t_bound = 2.0 * (cfg.n_periods + 1) * rayleigh_period(params)
    solver = DOP853(_rhs(accel), 0.0, np.array([osc.y0, 0.0]), t_bound,
                    rtol=cfg.rel_tol, atol=cfg.abs_tol_for(osc.y0))

    samples = [(0.0, osc.y0, 0.0)]
    events = [0.0]
    needed = 2 * cfg.n_periods + 1
    steps = 0
    while len(events) < needed:
        if steps >= cfg.max_steps:
            raise MaxStepsExceeded(f'{cfg.max_steps} steps covered only {len(events) - 1} half periods')
        if solver.status == 'finished':
            raise MaxStepsExceeded(f'reached t={solver.t} with only {len(events) - 1} half periods')
        v_old = solver.y[1]
        _step(solver)
        steps += 1
        v_new = solver.y[1]
        if v_new == 0.0:
            events.append(solver.t)
        elif v_old != 0.0 and v_old * v_new < 0.0:
            events.append(_polish_turning_time(solver))
        if steps % cfg.sample_stride == 0 or len(events) == needed:
            samples.append((solver.t, solver.y[0], solver.y[1]))

    logger.debug('simulated %d periods in %d steps, %d samples', cfg.n_periods, steps, len(samples))
    t, y, v = (np.array(column) for column in zip(*samples))
    return Trajectory(t=t, y=y, v=v, E=energy(params, y, v), events=np.array(events))


def measure_period(traj: Trajectory) -> PeriodEstimate:
    """
    Period from the turning times: twice the mean gap between consecutive turning points, each gap
    being a half period. err_estimate is the standard deviation of the gap sequence.

    Raises
    ------
    InsufficientEvents
        If the trajectory has fewer than 3 turning points
    """
    if len(traj.events) < 3:
        raise InsufficientEvents(f'need at least 3 turning points, got {len(traj.events)}')
    gaps = np.diff(traj.events)
    return PeriodEstimate(2.0 * float(np.mean(gaps)), PeriodMethod.ODE_SIM, float(np.std(gaps)))


def period_ode(osc: Oscillation, cfg: SimConfig | None = None) -> PeriodEstimate:
    """
    Simulated period. Amplitudes below the degeneracy threshold return Rayleigh's period.
    """
    if osc.is_degenerate(DEGENERACY_THRESHOLD):
        return PeriodEstimate(rayleigh_period(osc.params), PeriodMethod.ODE_SIM, 0.0)
    return measure_period(simulate(osc, cfg))


def propagate(params: StringParams, y: float, v: float, duration: float,
              cfg: SimConfig | None = None) -> tuple[float, float]:
    """
    Integrate the equation of motion from (y, v) for a signed duration (negative runs backwards)

    Returns
    -------
    tuple of float
        The state (y, v) at the end
    """
    cfg = cfg or SimConfig()
    if duration == 0:
        return y, v
    scale = abs(y) or params.L
    solver = DOP853(_rhs(_default_accel(params)), 0.0, np.array([y, v]), duration,
                    rtol=cfg.rel_tol, atol=cfg.abs_tol_for(scale))
    steps = 0
    while solver.status == 'running':
        if steps >= cfg.max_steps:
            raise MaxStepsExceeded(f'{cfg.max_steps} steps did not cover duration {duration}')
        _step(solver)
        steps += 1
    return float(solver.y[0]), float(solver.y[1])
