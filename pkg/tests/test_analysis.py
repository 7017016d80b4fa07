import io
import json

import numpy as np
import pandas as pd
import pytest

from stretched_string.analysis.convergence import (
    ConvergenceRow,
    convergence_study,
    default_amplitudes,
    fit_log_log_slope,
)
from stretched_string.analysis.sweep import (
    SweepRow,
    build_grid,
    build_oscillations,
    evaluate_row,
    rows_to_frame,
    rows_to_records,
    run_sweep,
    summarize_sweep,
    write_csv,
    write_json,
)
from stretched_string.analysis.verify import CheckResult, _check_quartic, run_verification, sample_oscillations
from stretched_string.constants.defaults import VERIFY_SAMPLES, VERIFY_SEED
from stretched_string.constants.methods import PeriodMethod
from stretched_string.model import Oscillation, StringParams
from stretched_string.period.quadrature import exact_period
from stretched_string.utils.errors import InvalidParameters, MaxStepsExceeded

BASE = {'l0': 1.0, 'l': 1.25, 'sigma': 1.0, 'mass': 1.0, 'y0': 0.5}


def test_linear_grid():
    np.testing.assert_allclose(build_grid(0.1, 0.5, 5), [0.1, 0.2, 0.3, 0.4, 0.5])
    assert list(build_grid(0.3, 0.9, 1)) == [0.3]


def test_log_grid():
    np.testing.assert_allclose(build_grid(0.01, 1.0, 3, log=True), [0.01, 0.1, 1.0])


@pytest.mark.parametrize('start, stop, points, log', [
    (0.1, 0.5, 0, False),
    (0.1, float('nan'), 3, False),
    (0.0, 1.0, 3, True),
])
def test_invalid_grid(start, stop, points, log):
    with pytest.raises(InvalidParameters):
        build_grid(start, stop, points, log)


def test_build_oscillations_varies_one_axis():
    oscillations = build_oscillations(BASE, 'sigma', [1.0, 2.0])
    assert [osc.params.sigma for osc in oscillations] == [1.0, 2.0]
    assert all(osc.y0 == 0.5 and osc.params.L == 1.25 for osc in oscillations)


def test_build_oscillations_rejects_bad_values():
    with pytest.raises(InvalidParameters, match='sweep axis'):
        build_oscillations(BASE, 'tension', [1.0])
    with pytest.raises(InvalidParameters):
        build_oscillations(BASE, 'l', [1.1, 0.9])


def test_evaluate_row(reference_osc):
    row = evaluate_row(reference_osc, (PeriodMethod.QUADRATURE, PeriodMethod.ELLIPTIC))
    assert isinstance(row, SweepRow)
    assert row.passed
    assert row.error is None
    assert row.periods['period_quadrature'] == pytest.approx(row.periods['period_elliptic'], rel=1e-9)
    assert row.methods == {'period_quadrature': 'quadrature', 'period_elliptic': 'elliptic'}
    assert row.R_bound_corrected == pytest.approx(-0.2)
    assert row.R_bound_corrected <= row.R <= 0


def test_record_column_order(reference_osc):
    record = evaluate_row(reference_osc, (PeriodMethod.ELLIPTIC,)).as_record()
    assert list(record) == ['l0', 'l', 'sigma', 'mass', 'y0', 'period_elliptic', 'upper',
                            'lower_corrected', 'lower_printed', 'R', 'R_bound_corrected', 'pass']


def test_engine_failure_is_recorded(reference_osc, monkeypatch):
    def fake_compute_period(osc, method, tol):
        if method is PeriodMethod.ODE_SIM:
            raise MaxStepsExceeded('out of steps')
        return exact_period(osc)

    monkeypatch.setattr('stretched_string.analysis.sweep.compute_period', fake_compute_period)
    row = evaluate_row(reference_osc, (PeriodMethod.QUADRATURE, PeriodMethod.ODE_SIM))
    assert row.periods['period_ode'] is None
    assert row.passed
    assert 'out of steps' in row.error
    assert row.as_record()['error'] == row.error
    assert summarize_sweep([row])[-1] == 'Rows with engine failures: 1'


@pytest.fixture(scope='module')
def sweep_rows():
    oscillations = build_oscillations(BASE, 'y0', build_grid(0.05, 1.0, 10))
    return run_sweep(oscillations, (PeriodMethod.QUADRATURE, PeriodMethod.ELLIPTIC))


def test_sweep_passes(sweep_rows):
    assert len(sweep_rows) == 10
    assert all(row.passed for row in sweep_rows)
    assert summarize_sweep(sweep_rows) == ['Rows: 10, sandwich pass: 10/10']


def test_thread_pool_gives_same_rows(sweep_rows):
    oscillations = build_oscillations(BASE, 'y0', build_grid(0.05, 1.0, 10))
    pooled = run_sweep(oscillations, (PeriodMethod.QUADRATURE, PeriodMethod.ELLIPTIC), workers=4)
    assert rows_to_records(pooled) == rows_to_records(sweep_rows)


def test_run_sweep_rejects_zero_workers(reference_osc):
    with pytest.raises(InvalidParameters):
        run_sweep([reference_osc], workers=0)


def test_csv_and_json_carry_the_same_numbers(sweep_rows):
    csv_stream, json_stream = io.StringIO(), io.StringIO()
    write_csv(rows_to_frame(sweep_rows), csv_stream)
    write_json(rows_to_records(sweep_rows), json_stream)

    assert '\r' not in csv_stream.getvalue()
    from_csv = pd.read_csv(io.StringIO(csv_stream.getvalue()), float_precision='round_trip')
    from_json = pd.DataFrame.from_records(json.loads(json_stream.getvalue()))
    pd.testing.assert_frame_equal(from_csv, from_json, check_dtype=False, check_exact=True)


def test_default_amplitudes(reference_params):
    np.testing.assert_allclose(default_amplitudes(reference_params), [0.0125, 0.025, 0.0625, 0.125, 0.25])


def test_fit_log_log_slope():
    assert fit_log_log_slope([1.0, 10.0, 100.0], [-2.0, -200.0, -20000.0]) == pytest.approx(2.0)
    with pytest.raises(InvalidParameters):
        fit_log_log_slope([1.0], [1.0])
    with pytest.raises(InvalidParameters):
        fit_log_log_slope([1.0, 2.0], [0.0, 1.0])


def test_convergence_is_quadratic(reference_params):
    rows, slope = convergence_study(reference_params)
    assert len(rows) == 5
    assert all(isinstance(row, ConvergenceRow) for row in rows)
    assert all(row.R_bound_corrected <= row.R < 0 for row in rows)
    assert 1.9 <= slope <= 2.1
    assert list(rows[0].as_record()) == ['y0', 'P', 'R', 'R_bound_corrected']


def test_convergence_skips_zero_error_rows(reference_params):
    amplitudes = [1e-12, *default_amplitudes(reference_params)]
    rows, slope = convergence_study(reference_params, amplitudes)
    assert len(rows) == 6
    assert rows[0].R == 0.0
    assert 1.9 <= slope <= 2.1


def test_convergence_needs_two_non_zero_errors(reference_params):
    with pytest.raises(InvalidParameters, match='at least 2'):
        convergence_study(reference_params, [1e-12, 1e-11, 0.1])


def test_sampling_is_deterministic():
    first = sample_oscillations(20, 11)
    assert first == sample_oscillations(20, 11)
    assert first != sample_oscillations(20, 12)
    assert all(osc.params.L0 == 1.0 and osc.params.m == 1.0 for osc in first)


def test_sampling_rejects_zero_samples():
    with pytest.raises(InvalidParameters):
        sample_oscillations(0, 1)


def test_check_result_reporting():
    check = CheckResult('example')
    for i in range(8):
        check.record(i < 1, f'case {i}')
    lines = check.describe()
    assert lines[0] == 'example: FAILED (1/8)'
    assert lines[-1] == '    ... 2 more'


def test_small_verification_run_passes():
    report = run_verification(50, 7)
    assert report.passed, '\n'.join(report.describe())
    assert report.describe()[-1] == 'All invariants hold'


def test_default_verification_run_passes():
    report = run_verification(VERIFY_SAMPLES, VERIFY_SEED)
    assert report.passed, '\n'.join(report.describe())


@pytest.mark.parametrize('ratio, fraction', [(1.25, 3.5e-4), (1.01, 1e-3), (2.0, 5e-4)])
def test_quartic_check_accepts_nearly_coalescing_roots(ratio, fraction):
    params = StringParams(L0=1.0, L=ratio, sigma=1.0, m=1.0)
    result = _check_quartic([Oscillation(params, fraction * ratio)])
    assert result.passed, result.failures
