import json

import pytest

from src.core.paths import paths
from src.create_result import stringify_numbers
from src.main import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_pd(capsys):
    code, document = run_json(capsys, 'pd', '--d', '2', '--order', '5')
    assert code == 0
    assert [c[0] for c in document["series"]["coeffs"]] == ["0", "0", "0", "2", "4", "10"]
    assert document["series"]["trunc"] == "5"
    assert document["closed_form"]["num"] == ["0", "0", "0", "2"]
    assert document["agree"] is True


def test_pnd_both(capsys):
    code, document = run_json(capsys, 'pnd', '--n', '2', '--d', '1', '--method', 'both')
    assert code == 0
    assert document == {"n": "2", "d": "1", "enumeration": "4", "generating_function": "4", "equal": True}


def test_pnd_single_method(capsys):
    code, document = run_json(capsys, 'pnd', '--n', '3', '--d', '1', '--method', 'gf')
    assert code == 0
    assert document == {"n": "3", "d": "1", "generating_function": "14"}


def test_partitions(capsys):
    code, document = run_json(capsys, 'partitions', '--d', '3')
    assert code == 0
    assert document["count"] == "3"
    assert [p["shape"] for p in document["partitions"]] == ["3", "2,1", "1,1,1"]

    code, document = run_json(capsys, 'partitions', '--shape', '3,1')
    assert document["transpose"] == "2,1,1"
    assert document["hooks"] == ["4", "2", "1", "1"]
    assert document["leg_weight"] == "8"


def test_mcmahon(capsys):
    code, document = run_json(capsys, 'mcmahon', '--order', '6')
    assert [c[0] for c in document["series"]["coeffs"]] == ["1", "1", "3", "6", "13", "24", "48"]
    code, document = run_json(capsys, 'mcmahon', '--order', '2', '--chi', '-200')
    assert code == 0
    assert document["series"]["coeffs"][1] == ["200", "1"]


def test_vertex_check(capsys):
    code, document = run_json(capsys, 'vertex-check', '--shape', '2,1', '--order', '6')
    assert code == 0
    assert document["passed"] is True


def test_zdt_multiplicities(capsys):
    code, document = run_json(capsys, 'zdt', '--chi', '0', '--dvec', '1', '--order', '5')
    assert code == 0
    assert [c[0] for c in document["series"]["coeffs"]] == ["0", "1", "-2", "3", "-4", "5"]
    assert document["reduced"] == {"num": ["0", "1"], "den": ["1", "2", "1"]}


def test_zdt_class(capsys):
    code, document = run_json(capsys, 'zdt', '--degree', '1', '--genus-cutoff', '3')
    assert code == 0
    assert document["reduced"] == {"num": ["0", "2875"], "den": ["1", "2", "1"]}
    assert document["q_inv_symmetric"] is True
    assert document["u_expansion"]["lead"] == "-2"


def test_zgw(capsys):
    code, document = run_json(capsys, 'zgw', '--species', '1:1', '--degree', '2', '--genus-cutoff', '3')
    assert code == 0
    assert document["series"]["lead"] == "-4"
    assert document["series"]["coeffs"][0] == ["1", "2"]


def test_verify_quintic(capsys):
    code, document = run_json(capsys, 'verify', '--suite', 'quintic', '--degree', '1', '--genus-cutoff', '6')
    assert code == 0
    assert document["verdict"] == "pass"


def test_quintic_command(capsys):
    code, document = run_json(capsys, 'quintic', '--degree', '2', '--genus-cutoff', '4')
    assert code == 0
    assert document["reports"][0]["verdict"] == "pass"
    assert document["reports"][0]["printed_forms"][0]["degree"] == "2"


def test_output_is_deterministic(capsys):
    first = run(capsys, 'verify', '--suite', 'toy', '--degree', '2', '--genus-cutoff', '4')
    second = run(capsys, 'verify', '--suite', 'toy', '--degree', '2', '--genus-cutoff', '4')
    assert first == second


@pytest.mark.parametrize("argv", [
    ['pd', '--unknown', '1'],
    ['pd', '--d', '1', '--ord', '3'],
    ['zdt', '--deg', '1'],
    [],
    ['partitions', '--shape', '1,2'],
    ['zdt', '--dvec', '1,0'],
    ['zgw', '--species', 'lines'],
    ['pnd', '--n', '2'],
    ['verify', '--suite', 'everything'],
])
def test_usage_errors(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 2
    assert out == ''


def test_plain_format(capsys):
    code, out = run(capsys, 'pnd', '--n', '2', '--d', '1', '--format', 'plain')
    assert code == 0
    lines = out.splitlines()
    assert any(line.split() == ['enumeration', '4'] for line in lines)
    assert any(line.split() == ['equal', 'true'] for line in lines)


def test_save(capsys, tmp_path, monkeypatch):
    monkeypatch.setattr(paths, 'RESULTS_DIR', tmp_path / 'results')
    code, out = run(capsys, 'pnd', '--n', '2', '--d', '1', '--save')
    assert code == 0
    saved = (tmp_path / 'results' / 'pnd.json').read_text(encoding='utf-8')
    assert saved == out


def test_stringify_numbers():
    assert stringify_numbers({"a": 1, "b": [True, 2, "x"], "c": None}) == {"a": "1", "b": [True, "2", "x"], "c": None}
