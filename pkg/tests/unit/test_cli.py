import json

import pytest

import kquasi as kq
from kquasi import cli


def _json(capsys, argv, code=0):
    assert cli.run(['--json'] + argv) == code
    return json.loads(capsys.readouterr().out)


def test00_classify(capsys):
    out = _json(capsys, ['classify', '--n', '13', '--a', '3'])
    assert out['classes'] == ['quadratical', 'c3']
    assert out['dual_classes'] == ['quadratical']
    assert (out['b'], out['k']) == (11, 8)


def test01_plain_output(capsys):
    assert cli.run(['classify', '--n', '5', '--a', '2']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert 'k: 2' in lines
    assert 'classes: ["quadratical", "right_modular"]' in lines


def test02_input_errors(capsys):
    assert cli.run(['classify', '--n', '8', '--a', '3']) == 1
    assert 'error' in capsys.readouterr().err
    assert cli.run(['frobnicate']) == 1
    assert cli.run([]) == 1
    assert cli.run(['classify', '--n', 'x', '--a', '3']) == 1
    assert cli.run(['construct', '--row0', '0,1,2']) == 1
    assert cli.run(['enumerate', '--n', '5']) == 1


def test03_version(capsys):
    with pytest.raises(SystemExit) as e:
        cli.run(['--version'])
    assert e.value.code == 0
    assert kq.__version__ in capsys.readouterr().out


def test04_construct(capsys):
    out = _json(capsys, ['construct', '--n', '13', '--k', '8'])
    assert (out['a'], out['b']) == (3, 11)
    assert out['table'] == kq.build(13, 3, 11).tolist()
    assert out['translatability'] == [8]

    out = _json(capsys, ['construct', '--n', '9', '--k', '4'])
    assert out['table'] is None

    out = _json(capsys, ['--one-based', 'construct', '--row0', '1,4,3,2,8,7,6,5', '--k', '3'])
    assert out['table'][0] == [1, 4, 3, 2, 8, 7, 6, 5]
    assert out['translatability'] == [3]


def test05_parastrophe(capsys):
    out = _json(capsys, ['parastrophe', '--n', '5', '--a', '2', '--b', '4'])
    assert out['equality_case'] == 'Q1Chain'
    assert [p['kind'] for p in out['parastrophes']] == ['Q1', 'Q2', 'Q3', 'Q4', 'Q5']
    assert out['parastrophes'][0]['kstar'] == 2

    out = _json(capsys, ['parastrophe', '--n', '5', '--a', '2', '--b', '4', '--which', '5'])
    assert out['parastrophes'][0]['table'] == kq.build(5, 4, 2).tolist()


def test06_enumerate(capsys):
    out = _json(capsys, ['enumerate', '--n', '5', '--k', '2'])
    assert out['results'][0]['count'] == 1
    out = _json(capsys, ['enumerate', '--n', '5', '--all-k'])
    assert [r['count'] for r in out['results']] == [0, 1, 1, 1]


def test07_verify_tables(capsys):
    out = _json(capsys, ['verify-tables', '--max-n', '31', '--table', 'kstar-a'])
    assert out['ok']
    assert [r['name'] for r in out['reports']] == ['kstar_by_a']

    out = _json(capsys, ['verify-tables', '--max-n', '15', '--table', 'classification'])
    assert out['ok']
    assert out['reports'][0]['name'] == 'classification'
    assert out['reports'][0]['checked'] > 0


def test08_survey(capsys):
    out = _json(capsys, ['survey', '--max-n', '40', '--commutative'])
    assert out['anomalies'] == ['quadratical & stein']
    assert out['commutative']['gs'] == [[5, 3]]


def test09_orders(capsys, monkeypatch):
    out = _json(capsys, ['orders', '--limit', '50'])
    assert out['orders'] == [5, 13, 17, 25, 29, 37, 41]
    assert out['agrees_with_sweep']

    monkeypatch.setattr(cli, 'quadratical_orders', lambda limit: [])
    out = _json(capsys, ['orders', '--limit', '50'], code=2)
    assert not out['agrees_with_sweep']


def test10_qq(capsys, tmp_path):
    out = _json(capsys, ['qq', '--n', '13'])
    assert [e['astructure'] for e in out['astructures']] == [
        {'n': 13, 'l': 3, 'r': 11}, {'n': 13, 'l': 11, 'r': 3}]
    for entry in out['astructures']:
        assert all(entry['checks'].values())
        assert 'exchange_laws' in entry['checks']

    assert cli.run(['qq', '--n', '5', '--l', '3', '--r', '3']) == 1
    assert cli.run(['qq', '--n', '5', '--l', '3']) == 1

    table = kq.build(13, 3, 11)
    for name, text in (('t.json', table.to_json()), ('t.csv', table.to_csv())):
        path = tmp_path / name
        path.write_text(text)
        out = _json(capsys, ['qq', '--from-table', str(path), '--s', '2'])
        assert out['astructure'] == {'n': 13, 'l': 11, 'r': 3}
        assert out['companion_translations']


def test11_property_violation(capsys, monkeypatch):
    def failing(*args, **kwargs):
        raise kq.DiscrepancyFound('enumeration disagrees with the closed form', {'n': 3})

    monkeypatch.setattr(cli, 'oracle_vs_closed_form', failing)
    out = _json(capsys, ['oracle', '--max-n', '3'], code=2)
    assert out['counterexample'] == {'n': 3}


def test12_check(capsys):
    out = _json(capsys, ['check'])
    assert out['ok']
    assert len(out['examples']) == len(kq.NAMED_EXAMPLES)


def test13_classify_checks_b(capsys):
    out = _json(capsys, ['classify', '--n', '13', '--a', '3', '--b', '11'])
    assert out['classes'] == ['quadratical', 'c3']
    assert cli.run(['classify', '--n', '13', '--a', '3', '--b', '5']) == 1
    assert 'b must be 1 - a' in capsys.readouterr().err


def test14_plots(capsys, tmp_path):
    matplotlib = pytest.importorskip('matplotlib')
    matplotlib.use('Agg')

    table_png = tmp_path / 'table.png'
    _json(capsys, ['construct', '--n', '13', '--k', '8', '--plot', str(table_png)])
    assert table_png.stat().st_size > 0

    parastrophes_png = tmp_path / 'parastrophes.png'
    out = _json(capsys, ['--one-based', 'parastrophe', '--n', '5', '--a', '2', '--b', '4',
                         '--plot', str(parastrophes_png)])
    assert out['equality_case'] == 'Q1Chain'
    assert parastrophes_png.stat().st_size > 0

    fig = kq.vis.plot_parastrophes(kq.build(7, 5, 3))
    assert [ax.get_title() for ax in fig.axes] == ['Q', 'Q1', 'Q2', 'Q3', 'Q4', 'Q5']
    from matplotlib import pyplot as plt
    plt.close(fig)
