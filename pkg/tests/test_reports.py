import json

import pytest

from report_generator import ReportManager, TextReportGenerator

VERIFY_REPORT = {
    'kind': 'verify',
    'source': 'corpus seed=1 count=2',
    'instances': 2,
    'passed': False,
    'duration': 0.25,
    'suites': [
        {'name': 'rank', 'passed': True, 'checks': 12, 'skipped': 0, 'failures': [], 'duration': 0.01},
        {
            'name': 'region_sweep',
            'passed': False,
            'checks': 30,
            'skipped': 2,
            'failures': ['instance 1 at (2, 3): split 5 != direct 6'],
            'duration': 1.5,
        },
    ],
}

BENCH_REPORT = {
    'kind': 'bench',
    'source': 'c4.json',
    'n': 2,
    'vertices': 4,
    'edges': 4,
    'passed': True,
    'rows': [
        {
            'x': '2', 'y': '3', 'region': 'generic', 'direct': '17', 'split': '17',
            'equal': True, 'direct_seconds': 0.001, 'split_seconds': 0.002,
        },
    ],
}


@pytest.fixture
def manager():
    return ReportManager()


def test_json_report_envelope(manager):
    data = json.loads(manager.render(VERIFY_REPORT, 'json'))
    assert data['version'] == '1.0'
    assert data['format'] == 'TUTTE-SPLIT-JSON-REPORT'
    assert 'generated_at' in data['metadata']
    assert data['statistics'] == {'suites': 2, 'passed': 1, 'failed': 1, 'checks': 42}
    assert data['suites'][1]['failures'] == ['instance 1 at (2, 3): split 5 != direct 6']


def test_json_report_without_suites_has_no_statistics(manager):
    data = json.loads(manager.render(BENCH_REPORT, 'json'))
    assert 'statistics' not in data
    assert data['rows'][0]['split'] == '17'


def test_verify_text_report(manager):
    text = manager.render(VERIFY_REPORT, 'text')
    assert '[PASS] rank (12 checks' in text
    assert '[FAIL] region_sweep (30 checks, 1.50s)' in text
    assert '    - instance 1 at (2, 3): split 5 != direct 6' in text
    assert 'Passed: 1' in text
    assert 'Failed: 1' in text
    assert text.rstrip().endswith('Result: FAIL')


def test_bench_text_report(manager):
    text = manager.render(BENCH_REPORT, 'text')
    assert 'Terminals: 2' in text
    assert 'direct_seconds' in text
    assert 'generic' in text
    assert text.rstrip().endswith('Values: PASS')


def test_unknown_kind_and_format(manager):
    with pytest.raises(ValueError, match='No text template'):
        TextReportGenerator().render({'kind': 'poly'})
    with pytest.raises(ValueError, match='Unknown report format'):
        manager.render(BENCH_REPORT, 'html')


@pytest.mark.parametrize('seconds, expected', [
    (None, 'N/A'),
    (0.0125, '12.5ms'),
    (2.5, '2.50s'),
    (125, '2m 5s'),
])
def test_duration_filter(seconds, expected):
    assert TextReportGenerator._format_duration(seconds) == expected


def test_emit_writes_the_file(manager, tmp_path):
    text_path = tmp_path / 'out' / 'bench.txt'
    rendered = manager.emit(BENCH_REPORT, 'text', str(text_path))
    assert text_path.read_text(encoding='utf-8') == rendered

    json_path = tmp_path / 'out' / 'verify.json'
    manager.emit(VERIFY_REPORT, 'json', str(json_path))
    assert json.loads(json_path.read_text(encoding='utf-8'))['passed'] is False
