import os

import orjson
import pytest

from spatialgen.cli import cli, main


def _last_json(text):
    return orjson.loads(text.strip().splitlines()[-1])


def _lines(path):
    with open(path, 'rb') as handle:
        return handle.read().splitlines()


@pytest.fixture
def invoke(app, runner):
    def _invoke(*args):
        result = runner.invoke(main, list(args), obj=app, catch_exceptions=False)
        assert result.exit_code == 0, result.output
        return result
    return _invoke


# ---------------------------------------------------------------------------
# Generación
# ---------------------------------------------------------------------------

def test_gen_train(invoke, tmp_path):
    """Test 2 scenes give 34 records and 2 images"""
    out = tmp_path / 'train'
    result = invoke('gen-train', '--scenes', '2', '--seed', '1', '--out', str(out))
    summary = _last_json(result.output)
    assert summary['items'] == 34
    assert len(_lines(out / 'manifest.jsonl')) == 34
    assert os.path.exists(out / 'images' / 'scene-1-000000.png')
    assert os.path.exists(out / 'images' / 'scene-1-000001.png')


def test_gen_train_items_truncates(invoke, tmp_path):
    invoke('gen-train', '--items', '20', '--seed', '1', '--out', str(tmp_path / 'a'))
    assert len(_lines(tmp_path / 'a' / 'manifest.jsonl')) == 20

    result = invoke('gen-train', '--items', '5', '--seed', '1', '--variant', 'direction', '--out', str(tmp_path / 'b'))
    assert len(_lines(tmp_path / 'b' / 'manifest.jsonl')) == 5
    assert _last_json(result.output)['scenes'] == 2


def test_gen_train_default_directory(invoke, app):
    invoke('gen-train', '--scenes', '1', '--seed', '3')
    assert len(_lines(app.output_path('train', 'manifest.jsonl'))) == 17


@pytest.mark.parametrize('args, directory', [
    (('--task', 'spp', '--grid-n', '4'), 'eval-spp4'),
    (('--task', 'spp', '--grid-n', '5', '--obstacles', '3'), 'eval-spp5'),
    (('--task', 'tsp', '--objects', '5'), 'eval-tsp5'),
    (('--task', 'basic',), 'eval-basic'),
])
def test_gen_eval(invoke, app, args, directory):
    """Test each evaluation task writes its manifest under the default directory"""
    invoke('gen-eval', *args, '--count', '6', '--seed', '2')
    records = [orjson.loads(line) for line in _lines(app.output_path(directory, 'manifest.jsonl'))]
    assert len(records) == 6
    for record in records:
        assert os.path.exists(app.output_path(directory, record['image']))


def test_gen_eval_basic_capability(invoke, tmp_path):
    invoke('gen-eval', '--task', 'basic', '--capability', 'distance', '--count', '4', '--seed', '2',
           '--out', str(tmp_path))
    records = [orjson.loads(line) for line in _lines(tmp_path / 'manifest.jsonl')]
    assert {record['capability'] for record in records} == {'distance-compare'}


# ---------------------------------------------------------------------------
# Solución, agentes y calificación
# ---------------------------------------------------------------------------

def test_solve_from_manifest(invoke, tmp_path):
    invoke('gen-eval', '--task', 'tsp', '--objects', '4', '--count', '3', '--seed', '5', '--out', str(tmp_path))
    result = invoke('solve', '--task', 'tsp', '--in', str(tmp_path / 'manifest.jsonl'))
    expected = [orjson.loads(line) for line in _lines(tmp_path / 'manifest.jsonl')]
    solved = [orjson.loads(line) for line in result.output.splitlines()]
    assert [entry['instance_id'] for entry in solved] == [record['instance_id'] for record in expected]
    assert [entry['order'] for entry in solved] == [record['solution']['order'] for record in expected]


def test_solve_single_instance(invoke, tmp_path):
    path = tmp_path / 'instance.json'
    path.write_bytes(orjson.dumps({
        'instance_id': 'spp4-0-000000', 'grid_n': 4, 'start': [0, 0], 'end': [3, 3], 'obstacles': [], 'seed': 0,
    }))
    result = invoke('solve', '--task', 'spp', '--in', str(path))
    solution = _last_json(result.output)
    assert solution['optimal_length'] == 6
    assert solution['optimal_path_count'] == 20


def test_oracle_run_scores_perfectly(invoke, tmp_path):
    """Test generate, run the oracle agent and score end to end"""
    invoke('gen-eval', '--task', 'spp', '--count', '5', '--seed', '4', '--out', str(tmp_path / 'spp'))
    manifest = str(tmp_path / 'spp' / 'manifest.jsonl')
    responses = tmp_path / 'runs' / 'responses.jsonl'
    invoke('run-agent', '--agent', 'oracle', '--manifest', manifest, '--out', str(responses), '--style', '2')
    assert len(_lines(responses)) == 5

    result = invoke('score', '--manifest', manifest, '--responses', str(responses))
    assert 'grid_n=4' in result.output
    report = orjson.loads((tmp_path / 'runs' / 'report.json').read_bytes())
    assert report['rows'][0]['accuracy'] == 1.0
    assert report['total'] == 5
    assert (tmp_path / 'runs' / 'report.txt').exists()


def test_adversarial_run_scores_zero(invoke, tmp_path):
    invoke('gen-eval', '--task', 'tsp', '--count', '4', '--seed', '4', '--out', str(tmp_path))
    manifest = str(tmp_path / 'manifest.jsonl')
    responses = str(tmp_path / 'adversarial.jsonl')
    invoke('run-agent', '--agent', 'adversarial', '--manifest', manifest, '--out', responses)
    report_path = tmp_path / 'scores' / 'adv.json'
    invoke('score', '--manifest', manifest, '--responses', responses, '--mode', 'length-optimal',
           '--report', str(report_path))
    report = orjson.loads(report_path.read_bytes())
    assert report['scoring_mode'] == 'length-optimal'
    assert report['rows'][0]['correct'] == 0


def test_stats_json(invoke, tmp_path):
    invoke('gen-train', '--scenes', '2', '--seed', '1', '--out', str(tmp_path))
    result = invoke('stats', '--manifest', str(tmp_path / 'manifest.jsonl'), '--json', '--validate')
    stats = _last_json(result.output)
    assert stats['total'] == 34
    assert stats['capability']['direction'] == pytest.approx(3 / 17)

    table = invoke('stats', '--manifest', str(tmp_path / 'manifest.jsonl'))
    assert table.output.startswith('items: 34')


# ---------------------------------------------------------------------------
# Renderizado
# ---------------------------------------------------------------------------

def test_render_from_lineage(invoke, tmp_path):
    """Test a scene is regenerated from its id"""
    result = invoke('render', '--scene-id', 'scene-1-000000', '--out', str(tmp_path))
    paths = _last_json(result.output)
    assert paths['png'].endswith('scene-1-000000.png')
    assert os.path.exists(paths['png'])


def test_render_matches_generated_image(invoke, tmp_path):
    invoke('gen-eval', '--task', 'spp', '--count', '2', '--seed', '6', '--out', str(tmp_path / 'eval'))
    invoke('render', '--scene-id', 'spp4-6-000001', '--out', str(tmp_path / 'lineage'))
    invoke('render', '--scene-id', 'spp4-6-000001', '--manifest', str(tmp_path / 'eval' / 'manifest.jsonl'),
           '--out', str(tmp_path / 'manifest'))
    generated = (tmp_path / 'eval' / 'images' / 'spp4-6-000001.png').read_bytes()
    assert (tmp_path / 'lineage' / 'spp4-6-000001.png').read_bytes() == generated
    assert (tmp_path / 'manifest' / 'spp4-6-000001.png').read_bytes() == generated


def test_render_from_lineage_keeps_obstacles(invoke, tmp_path):
    """Test an instance with obstacles renders the same from its id alone"""
    invoke('gen-eval', '--task', 'spp', '--grid-n', '4', '--obstacles', '2', '--count', '2', '--seed', '6',
           '--out', str(tmp_path / 'eval'))
    records = [orjson.loads(line) for line in _lines(tmp_path / 'eval' / 'manifest.jsonl')]
    assert records[1]['instance_id'] == 'spp4o2-6-000001'
    assert len(records[1]['instance']['obstacles']) == 2

    invoke('render', '--scene-id', 'spp4o2-6-000001', '--out', str(tmp_path / 'lineage'))
    generated = (tmp_path / 'eval' / 'images' / 'spp4o2-6-000001.png').read_bytes()
    assert (tmp_path / 'lineage' / 'spp4o2-6-000001.png').read_bytes() == generated


# ---------------------------------------------------------------------------
# Códigos de salida
# ---------------------------------------------------------------------------

def test_missing_size_is_usage_error(capsys):
    """Test gen-train without --scenes or --items exits 2 with valid flags"""
    assert cli(['--env', 'testing', 'gen-train', '--seed', '1']) == 2
    error = _last_json(capsys.readouterr().err)
    assert error['error'] == 'UsageError'
    assert '--scenes' in error['valid_flags']
    assert '--items' in error['valid_flags']


def test_unknown_flag_is_usage_error(capsys):
    assert cli(['--env', 'testing', 'gen-train', '--bogus']) == 2
    error = _last_json(capsys.readouterr().err)
    assert '--seed' in error['valid_flags']


def test_unknown_command_lists_commands(capsys):
    assert cli(['--env', 'testing', 'explode']) == 2
    error = _last_json(capsys.readouterr().err)
    assert 'gen-train' in error['valid_flags']


def test_domain_error_exit_code(tmp_path, capsys):
    """Test a corrupt manifest exits 1 with a JSON error line"""
    path = tmp_path / 'manifest.jsonl'
    path.write_bytes(b'not json\n')
    assert cli(['--env', 'testing', 'stats', '--manifest', str(path)]) == 1
    error = _last_json(capsys.readouterr().err)
    assert error['error'] == 'ManifestError'
    assert error['line'] == 1


def test_invalid_identifier_exit_code(capsys):
    assert cli(['--env', 'testing', 'render', '--scene-id', 'picture-1']) == 1
    assert _last_json(capsys.readouterr().err)['error'] == 'InvalidInput'


def test_verify_quick():
    """Test the verification suite passes at reduced sizes"""
    assert cli(['--env', 'testing', 'verify', '--quick']) == 0
