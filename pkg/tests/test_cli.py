"""Command-line interface: output shape, determinism, and exit codes."""

import json

import pytest

from commhier.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, main
from commhier.specparse import parse_spec

ROUND_TRIP_SPECS = [
    "cyclic(6)",
    "abelian([2,4])",
    "dihedral(5)",
    "symmetric(4)",
    "quaternion8",
    "heisenberg(3)",
    "product(symmetric(3), cyclic(2))",
    "semidirect(cyclic(7); cyclic(3); [[2]])",
    "semidirect(abelian([3,3]); cyclic(2); [[-1,0],[0,-1]])",
]


@pytest.mark.parametrize("text", ROUND_TRIP_SPECS)
def test_spec_round_trip(text):
    assert str(parse_spec(str(parse_spec(text)))) == str(parse_spec(text))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "symmetric(3)", "-r", "2")
    assert code == EXIT_OK
    assert json.loads(out) == {"group": "symmetric(3)", "order": 6,
                               "r": 2, "hom_count": 18}


def test_prob_rational_encoding(capsys):
    code, out, _ = run(capsys, "prob", "quaternion8", "-r", "3")
    assert code == EXIT_OK
    assert json.loads(out)["p_r"] == "11/32"


def test_kappa(capsys):
    code, out, _ = run(capsys, "kappa", "quaternion8", "-r", "2")
    assert code == EXIT_OK
    assert json.loads(out)["kappa_r"] == 22


def test_spectrum_sorted_and_deterministic(capsys):
    code, first, _ = run(capsys, "spectrum", "symmetric(4)")
    assert code == EXIT_OK
    code, second, _ = run(capsys, "spectrum", "symmetric(4)")
    assert first == second
    entries = json.loads(first)["spectrum"]
    assert [e["m"] for e in entries] == sorted(e["m"] for e in entries)
    assert list(entries[0]) == ["m", "c"]


def test_stats_csv(capsys):
    code, out, _ = run(capsys, "stats", "dihedral(4)", "--csv")
    assert code == EXIT_OK
    rows = dict(line.split(",", 1) for line in out.strip().splitlines())
    assert rows["m"] == "4" and rows["n_max"] == "3"


def test_series_special_values(capsys):
    code, out, _ = run(capsys, "series", "symmetric(3)")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["sigma_value"] == "9/10"
    assert payload["alt_value"] == "29/84"
    assert payload["dirichlet_value"] == -7


def test_series_abelian_symbolic(capsys):
    code, out, _ = run(capsys, "series", "abelian([2,2])", "--z", "1/3")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["series"] == "1/(1-z)"
    assert payload["value"] == "3/2"


def test_series_pole_is_input_error(capsys):
    code, _, err = run(capsys, "series", "symmetric(3)", "--z", "2")
    assert code == EXIT_INPUT
    assert json.loads(err)["error"] == "PoleHit"


def test_recurrence(capsys):
    code, out, _ = run(capsys, "recurrence", "symmetric(3)")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["recurrence_order"] == 3
    assert payload["sigma"] == ["1/1", "11/36", "1/36"]


def test_invert_round_trip(capsys):
    code, out, _ = run(capsys, "invert",
                       "1/2", "2/9", "7/72", "7/162", "17/864", "107/11664")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["spectrum"] == [{"m": 2, "c": 1}, {"m": 3, "c": 3},
                                   {"m": 6, "c": -3}]
    assert payload["reproduced"] == payload["values"]


def test_invert_rejects_nonspectral(capsys):
    code, _, err = run(capsys, "invert", "1/3", "1/3", "1/3", "1/3")
    assert code == EXIT_INPUT
    assert json.loads(err)["error"] == "NonSpectralSequence"


def test_parse_error_exit_and_position(capsys):
    code, _, err = run(capsys, "count", "dihedral(", "-r", "2")
    assert code == EXIT_INPUT
    payload = json.loads(err)
    assert payload["error"] == "ParseError"
    assert payload["position"] == 9


def test_unknown_constructor(capsys):
    code, _, err = run(capsys, "stats", "sporadic(1)")
    assert code == EXIT_INPUT
    assert json.loads(err)["code"] == "bad-input"


def test_lattice_cap_exit(capsys):
    code, _, err = run(capsys, "stats", "symmetric(5)", "--lattice-cap", "50")
    assert code == EXIT_CAP
    assert json.loads(err)["code"] == "cap-exceeded"


def test_emit_plot_files(tmp_path, capsys):
    prefix = str(tmp_path / "s3")
    code, _, _ = run(capsys, "spectrum", "symmetric(3)",
                     "--emit-plot", prefix, "--plot-max-r", "5")
    assert code == EXIT_OK
    hierarchy = (tmp_path / "s3-hierarchy.csv").read_text().splitlines()
    assert hierarchy[0] == "r,p_r"
    assert hierarchy[2] == "2,1/2"
    spectrum_rows = (tmp_path / "s3-spectrum.csv").read_text().splitlines()
    assert spectrum_rows == ["m,c", "2,1", "3,3", "6,-3"]


def test_verify_subset_ok(capsys):
    code, out, _ = run(capsys, "verify", "--check", "s3-closed-form",
                       "--check", "pgroup-congruence-stated")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["failures"] == []
    stated = [r for r in payload["expected_failures"] if not r["passed"]]
    assert stated and stated[0]["group"] == "quaternion8"


def test_verify_unknown_check(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "--check", "nonsense"])
