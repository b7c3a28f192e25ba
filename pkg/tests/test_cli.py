import json

import pytest
import yaml

from cli_harness import EXIT_INPUT, EXIT_OK, EXIT_REGION, main


@pytest.fixture(autouse=True)
def _clean_environment(monkeypatch):
    for var in ('TUTTE_MAX_N', 'TUTTE_MAX_ORACLE_EDGES', 'TUTTE_CORPUS_SEED', 'TUTTE_WORKERS', 'LOG_LEVEL', 'LOG_FORMAT'):
        monkeypatch.delenv(var, raising=False)


@pytest.fixture
def run(config_dir, capsys):
    """Run the CLI against the test configuration; returns (exit code, stdout)"""

    def _run(*argv):
        argv = list(argv)
        code = main(argv[:1] + ['--config-dir', str(config_dir)] + argv[1:])
        return code, capsys.readouterr().out.strip()

    return _run


def _override(tmp_path, data):
    path = tmp_path / 'override.yaml'
    path.write_text(yaml.safe_dump(data), encoding='utf-8')
    return str(path)


# ----------------------------------------------------------------------
# poly


def test_poly_text(run, triangle_file):
    assert run('poly', str(triangle_file)) == (EXIT_OK, 'x^2 + x + y')


def test_poly_negami(run, triangle_file):
    code, out = run('poly', str(triangle_file), '--method', 'negami')
    assert code == EXIT_OK
    assert out == 't*x^3 + 3*t*x^2*y + 3*t^2*x*y^2 + t^3*y^3'


def test_poly_oracle_json(run, triangle_file):
    code, out = run('poly', str(triangle_file), '--method', 'oracle', '--format', 'json')
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['command'] == 'poly'
    assert data['method'] == 'oracle'
    assert data['polynomial'] == 'x^2 + x + y'
    assert data['edges'] == 3
    assert data['format'] == 'TUTTE-SPLIT-JSON-REPORT'


@pytest.mark.parametrize('method, variables', [
    ('dc', ['x', 'y']),
    ('oracle', ['x', 'y']),
    ('negami', ['t', 'x', 'y']),
])
@pytest.mark.parametrize('graph', [
    {'vertices': ['a', 'b', 'c'], 'edges': [['a', 'b'], ['b', 'c']]},
    {'vertices': ['a'], 'edges': []},
])
def test_poly_terms_list_every_variable(run, tmp_path, method, variables, graph):
    path = tmp_path / 'graph.json'
    path.write_text(json.dumps(graph), encoding='utf-8')
    code, out = run('poly', str(path), '--method', method, '--format', 'json')
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['variables'] == variables
    assert data['terms']
    assert all(len(term) == len(variables) + 1 for term in data['terms'])


def test_poly_terms_of_path_and_point(run, tmp_path):
    path = tmp_path / 'path.json'
    path.write_text(json.dumps({'vertices': ['a', 'b', 'c'], 'edges': [['a', 'b'], ['b', 'c']]}), encoding='utf-8')
    point = tmp_path / 'point.json'
    point.write_text(json.dumps({'vertices': ['a'], 'edges': []}), encoding='utf-8')
    assert json.loads(run('poly', str(path), '--format', 'json')[1])['terms'] == [[2, 0, '1']]
    assert json.loads(run('poly', str(point), '--format', 'json')[1])['terms'] == [[0, 0, '1']]


# ----------------------------------------------------------------------
# split


def test_split_value(run, split_file):
    assert run('split', str(split_file), '--x', '2', '--y', '3') == (EXIT_OK, 'region: generic, value: 17')


def test_split_check_and_coefficients(run, split_file):
    code, out = run('split', str(split_file), '--x', '2', '--y', '3', '--coeffs', '--check')
    assert code == EXIT_OK
    assert out.splitlines() == [
        'region: generic, value: 17',
        'coefficients (order: 12 1|2):',
        '  1 -1',
        '  -1 2',
        'check: ok (direct 17)',
    ]


@pytest.mark.parametrize('argv, expected', [
    (['--x', '2', '--y', '2'], 'region: hyperbola_singular(1), value: 16'),
    (['--x=1', '--y=3'], 'region: x_one_line, value: 6'),
    (['--x', '3', '--y', '1'], 'region: y_one_line, value: 40'),
    (['--preset', 'spanning-trees'], 'region: point_one_one, value: 4'),
    (['--preset', 'potts:2', '--x', '3'], 'region: generic, value: 41'),
])
def test_split_regions_and_presets(run, split_file, argv, expected):
    assert run('split', str(split_file), *argv) == (EXIT_OK, expected)


def test_split_json(run, split_file):
    code, out = run('split', str(split_file), '--x', '2', '--y', '3', '--format', 'json', '--check')
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['value'] == '17'
    assert data['region'] == 'generic'
    assert data['check'] == {'direct': '17', 'passed': True}


def test_split_output_file(run, split_file, tmp_path):
    target = tmp_path / 'results' / 'split.txt'
    code, out = run('split', str(split_file), '--x', '2', '--y', '3', '--output', str(target))
    assert code == EXIT_OK
    assert target.read_text(encoding='utf-8').strip() == out


def test_disconnected_part_on_a_line(run, disconnected_split_file):
    code, out = run('split', str(disconnected_split_file), '--x', '1', '--y', '2')
    assert code == EXIT_REGION
    assert out == ''


def test_errors_are_reported_as_json(run, disconnected_split_file):
    code, out = run('split', str(disconnected_split_file), '--x', '1', '--y', '2', '--format', 'json')
    assert code == EXIT_REGION
    data = json.loads(out)
    assert data['error'] == 'RegionPreconditionError'
    assert data['exit_code'] == EXIT_REGION


@pytest.mark.parametrize('argv', [
    ['split', 'missing.json', '--x', '2', '--y', '3'],
    ['split', '{split}'],
    ['split', '{split}', '--x', '2/0', '--y', '3'],
    ['split', '{split}', '--x', 'two', '--y', '3'],
    ['split', '{split}', '--preset', 'tutte'],
])
def test_input_errors(run, split_file, tmp_path, monkeypatch, argv):
    monkeypatch.chdir(tmp_path)
    argv = [a.format(split=split_file) for a in argv]
    code, _ = run(*argv)
    assert code == EXIT_INPUT


def test_usage_errors_exit_with_the_input_code(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(['split'])
    assert excinfo.value.code == EXIT_INPUT
    with pytest.raises(SystemExit) as excinfo:
        main(['poly', 'g.json', '--method', 'magic'])
    assert excinfo.value.code == EXIT_INPUT


def test_terminal_cap_from_override(run, split_file, tmp_path):
    override = _override(tmp_path, {'limits': {'max_n': 1}})
    code, _ = run('split', str(split_file), '--x', '2', '--y', '3', '--config', override)
    assert code == EXIT_INPUT


def test_invalid_override(run, split_file, tmp_path):
    override = _override(tmp_path, {'limits': {'max_oracle_edges': 99}})
    code, _ = run('split', str(split_file), '--x', '2', '--y', '3', '--config', override)
    assert code == EXIT_INPUT


# ----------------------------------------------------------------------
# verify


def test_verify_split_file(run, split_file):
    code, out = run(
        'verify', str(split_file),
        '--suite', 'round_trip', '--suite', 'region_sweep', '--suite', 'spanning_trees'
    )
    assert code == EXIT_OK
    assert '[PASS] region_sweep' in out
    assert out.endswith('Result: PASS')


def test_verify_corpus_json(run, tmp_path):
    override = _override(tmp_path, {'corpus': {'count': 2, 'max_vertices': 5, 'max_edges': 7}})
    code, out = run(
        'verify', '--corpus', '--seed', '5', '--config', override, '--format', 'json',
        '--suite', 'round_trip', '--suite', 'spanning_trees'
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['instances'] == 2
    assert data['source'] == 'corpus seed=5 count=2'
    assert data['statistics']['suites'] == 2
    assert data['passed']


def test_verify_file_and_corpus_conflict(run, split_file):
    code, _ = run('verify', str(split_file), '--corpus', '--suite', 'round_trip')
    assert code == EXIT_INPUT


# ----------------------------------------------------------------------
# bench


def test_bench_command_line_point(run, split_file):
    code, out = run('bench', str(split_file), '--x', '2', '--y', '3')
    assert code == EXIT_OK
    assert 'TUTTE SPLIT BENCHMARK' in out
    assert out.endswith('Values: PASS')


def test_bench_configured_points_to_file(run, split_file, tmp_path):
    target = tmp_path / 'bench.json'
    code, out = run('bench', str(split_file), '--format', 'json', '--output', str(target), '--repeat', '2')
    assert code == EXIT_OK
    data = json.loads(out)
    assert [row['region'] for row in data['rows']] == ['generic', 'point_one_one', 'y_one_line']
    assert json.loads(target.read_text(encoding='utf-8'))['passed']
