from fractions import Fraction

import pytest

import cli_harness.verification as verification
from cli_harness import (
    EXIT_INPUT,
    EXIT_REGION,
    EXIT_VERIFICATION,
    INSTANCE_SUITES,
    MATRIX_SUITES,
    CorpusSettings,
    SuiteResult,
    VerifyOptions,
    exit_code_for,
    generate_corpus,
    hyperbola_points,
    run_benchmark,
    run_verification,
)
from config_manager import ConfigManager
from graph_core import components, dense_block_split
from split_engine import OnSingularHyperbolaError, RegionPreconditionError, SingularInverseError
from tutte_engine import TooLargeError


@pytest.fixture
def settings(config_dir, monkeypatch):
    for var in ('TUTTE_MAX_N', 'TUTTE_MAX_ORACLE_EDGES', 'TUTTE_CORPUS_SEED', 'TUTTE_WORKERS'):
        monkeypatch.delenv(var, raising=False)
    return ConfigManager(str(config_dir)).get_settings()


def _summary(report):
    return [(s['name'], s['passed'], s['checks'], s['skipped'], s['failures']) for s in report['suites']]


def test_unknown_suite_is_rejected(settings):
    with pytest.raises(ValueError, match='Unknown suite'):
        VerifyOptions.from_settings(settings, suites=['rank', 'magic'])


def test_options_from_settings(settings):
    options = VerifyOptions.from_settings(settings, seed=7, max_n=5)
    assert options.suites == MATRIX_SUITES + INSTANCE_SUITES
    assert (Fraction(1, 2), Fraction(3)) in options.generic_points
    assert all(x == 1 for x, _ in options.x_one_points)
    assert all(y == 1 for _, y in options.y_one_points)
    assert options.seed == 7


@pytest.mark.slow
def test_matrix_suites_pass():
    options = VerifyOptions(suites=MATRIX_SUITES, random_matrices=5, determinant_samples=2, max_n=4)
    report = run_verification([], options, source='matrices')
    assert report['kind'] == 'verify'
    assert [s['name'] for s in report['suites']] == list(MATRIX_SUITES)
    assert report['passed'], _summary(report)
    assert all(s['checks'] > 0 for s in report['suites'])


@pytest.mark.slow
def test_instance_suites_pass(settings, c4_split, four_terminal_split):
    options = VerifyOptions.from_settings(settings, suites=INSTANCE_SUITES)
    report = run_verification([c4_split, four_terminal_split], options, source='fixtures')
    assert report['instances'] == 2
    assert report['passed'], _summary(report)
    by_name = {s['name']: s for s in report['suites']}
    assert by_name['spanning_trees']['checks'] == 2
    assert by_name['non_uniqueness']['checks'] == 4


def test_disconnected_instance_skips_line_points(settings, disconnected_split):
    options = VerifyOptions.from_settings(settings, suites=['region_sweep', 'spanning_trees'])
    report = run_verification([disconnected_split], options)
    assert report['passed'], _summary(report)
    assert all(s['skipped'] > 0 for s in report['suites'])


def test_worker_pool_matches_in_process(settings, c4_split, disconnected_split):
    options = VerifyOptions.from_settings(settings, suites=['round_trip', 'spanning_trees'])
    instances = [c4_split, disconnected_split, c4_split]
    serial = run_verification(instances, options, workers=1)
    pooled = run_verification(instances, options, workers=2)
    assert _summary(serial) == _summary(pooled)


def test_attempt_counts_limits_as_skips():
    result = SuiteResult('negami')

    def too_large():
        raise TooLargeError(30, 20)

    result.attempt('big graph', too_large)
    result.attempt('holds', lambda: True)
    result.attempt('fails', lambda: False)
    result.attempt('breaks', lambda: 1 / 0)
    assert result.skipped == 1
    assert result.checks == 3
    assert result.failures[0] == 'fails does not hold'
    assert 'ZeroDivisionError' in result.failures[1]
    assert not result.passed


def test_hyperbola_points():
    points = hyperbola_points(3)
    assert len(points) == 4
    assert sorted({(x - 1) * (y - 1) for x, y in points}) == [1, 2]


def test_corpus_is_deterministic():
    bounds = CorpusSettings(terminal_counts=(2, 3), max_vertices=5, max_edges=7)
    first = generate_corpus(11, 6, bounds)
    assert first == generate_corpus(11, 6, bounds)
    for split in first:
        assert split.n in (2, 3)
        assert components(split.K) == 1 and components(split.H) == 1
        assert split.K.num_edges <= 7 and split.H.num_edges <= 7


def test_corpus_bounds_too_tight():
    with pytest.raises(ValueError, match='connected part'):
        generate_corpus(1, 1, CorpusSettings(terminal_counts=(4,), max_vertices=6, max_edges=2))


def test_corpus_settings_from_configuration(settings):
    bounds = CorpusSettings.from_settings(settings)
    assert bounds.terminal_counts == (2, 3, 4)
    assert bounds.max_edges == 12
    assert CorpusSettings.from_settings({}) == CorpusSettings()


def test_benchmark(c4_split):
    report = run_benchmark(c4_split, [(Fraction(2), Fraction(3)), (Fraction(1), Fraction(1))], source='c4')
    assert report['kind'] == 'bench'
    assert report['passed']
    assert [row['region'] for row in report['rows']] == ['generic', 'point_one_one']
    assert [row['direct'] for row in report['rows']] == ['17', '4']
    assert report['vertices'] == 4 and report['edges'] == 4


@pytest.mark.slow
def test_dense_block_benchmark():
    split = dense_block_split(9, n=3)
    report = run_benchmark(split, [(Fraction(2), Fraction(3)), (Fraction(2), Fraction(1))], source='dense')
    assert report['passed']
    assert report['n'] == 3 and report['edges'] == 32
    assert all(row['direct'] == row['split'] for row in report['rows'])


@pytest.mark.slow
def test_default_corpus_passes_instance_suites(settings):
    options = VerifyOptions.from_settings(settings, suites=INSTANCE_SUITES)
    instances = generate_corpus(2024, 25, CorpusSettings.from_settings(settings))
    report = run_verification(instances, options)
    assert report['instances'] == 25
    assert report['passed'], _summary(report)


def test_negami_suite_covers_both_parts(settings, c4_split, mocker):
    contraction = mocker.spy(verification, 'contraction_negami_identity_check')
    contraction_y_one = mocker.spy(verification, 'contraction_tutte_identity_check')
    aux_limit = mocker.spy(verification, 'aux_limit_lemma_check')
    join = mocker.spy(verification, 'one_point_join_check')

    report = run_verification([c4_split], VerifyOptions.from_settings(settings, suites=['negami']))
    assert report['passed'], _summary(report)

    parts = [c4_split.K, c4_split.H]
    assert [c.args[0] for c in contraction.call_args_list] == parts
    assert [c.args[0] for c in contraction_y_one.call_args_list] == parts
    assert [c.args[0] for c in aux_limit.call_args_list] == [c4_split.K] * 2 + [c4_split.H] * 2

    join.assert_called_once()
    K, H = join.call_args.args
    assert K.terminals == H.terminals == ('u1',)
    assert set(K.vertices) & set(H.vertices) == {'u1'}
    assert join.spy_return is True

    suite = report['suites'][0]
    assert suite['checks'] + suite['skipped'] == 16


@pytest.mark.parametrize('exc, code', [
    (RegionPreconditionError('x'), EXIT_REGION),
    (OnSingularHyperbolaError('x'), EXIT_REGION),
    (SingularInverseError('x'), EXIT_VERIFICATION),
    (ValueError('x'), EXIT_INPUT),
    (FileNotFoundError('x'), EXIT_INPUT),
    (RuntimeError('x'), EXIT_VERIFICATION),
])
def test_exit_codes(exc, code):
    assert exit_code_for(exc) == code
