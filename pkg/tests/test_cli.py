import json

import pytest

from fibpart.cli import main

RECORD_KEYS = {"n", "zeckendorf", "word", "F", "chi", "essential"}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_record(capsys):
    code, out, _ = run(capsys, "info", "37")
    assert code == 0
    rec = json.loads(out)
    assert set(rec) == RECORD_KEYS
    assert rec == {"n": 37, "zeckendorf": [3, 8], "word": "1/2*1/3",
                   "F": 6, "chi": 0, "essential": True}


def test_info_record_consistency(capsys):
    for n in (0, 1, 24, 63, 100, 707):
        code, out, _ = run(capsys, "info", str(n), "--poly")
        rec = json.loads(out)
        assert code == 0
        assert set(rec) == RECORD_KEYS | {"poly"}
        assert rec["chi"] in (-1, 0, 1)
        assert sum(rec["poly"]) == rec["F"]
        word = rec["word"]
        dens = [int(tok.split("/")[1]) for tok in word.split("*")] if word != "1" else []
        prod = 1
        for d in dens:
            prod *= d
        assert prod == rec["F"]


def test_poly(capsys):
    code, out, _ = run(capsys, "poly", "100")
    assert code == 0 and json.loads(out) == [0, 0, 0, 1, 2, 3, 2, 1]


def test_chi(capsys):
    code, out, _ = run(capsys, "chi", "100")
    assert code == 0 and out.strip() == "-1"


def test_word_and_theta_round_trip(capsys):
    code, out, _ = run(capsys, "word", "63")
    assert code == 0 and out.strip() == "3/8"
    code, out, _ = run(capsys, "theta", "3/8")
    assert code == 0 and out.strip() == "63"
    code, out, _ = run(capsys, "theta", "1")
    assert code == 0 and out.strip() == "0"


def test_essential(capsys):
    code, out, _ = run(capsys, "essential", "24")
    assert code == 0 and json.loads(out) == {"n": 24, "essential": True, "m": 6}
    code, out, _ = run(capsys, "essential", "4")
    assert code == 0 and json.loads(out) == {"n": 4, "essential": False, "m": None}


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "3", "--apply", "tau")
    assert code == 0 and json.loads(out)["result"] == 6
    code, out, _ = run(capsys, "orbit", "24", "--apply", "omega,S,S")
    rec = json.loads(out)
    assert code == 0 and rec["n"] == 24 and rec["apply"] == "omega,S,S"


def test_orbit_domain_error_exits_1(capsys):
    code, out, err = run(capsys, "orbit", "0", "--apply", "tau")
    assert code == 1 and "tau" in err and not out


def test_orbit_unknown_generator_exits_2(capsys):
    code, _, err = run(capsys, "orbit", "3", "--apply", "rho")
    assert code == 2 and "rho" in err


def test_psi_and_enumerate(capsys):
    code, out, _ = run(capsys, "psi", "12")
    assert code == 0 and out.strip() == "22"
    code, out, _ = run(capsys, "psi-sigma", "4")
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "enumerate", "5")
    assert code == 0 and out.split() == ["24", "29", "55", "87"]


def test_minimal(capsys):
    code, out, _ = run(capsys, "minimal", "8")
    assert code == 0 and json.loads(out) == {"k": 8, "M": 63, "word": "3/8"}


def test_stability(capsys):
    code, out, _ = run(capsys, "stability", "12", "6")
    assert code == 0 and out.strip() == "12"


def test_zeros(capsys):
    code, out, _ = run(capsys, "zeros", "7")
    assert code == 0 and json.loads(out) == {"N": 7, "zeros": 3, "X": 4}


def test_runs(capsys):
    code, out, _ = run(capsys, "runs", "0", "30")
    assert code == 0
    reports = json.loads(out)
    assert reports[0] == {"start": 1, "length": 2, "kind": "nonzero", "values": [-1, -1]}
    starts = [r["start"] for r in reports]
    assert starts == sorted(starts)
    for rep in reports:
        assert ("values" in rep) == (rep["kind"] == "nonzero")


def test_hull(capsys):
    code, out, _ = run(capsys, "hull", "9")
    rec = json.loads(out)
    assert code == 0 and rec["match"] is True
    assert rec["predicted"] == rec["computed"]
    assert rec["predicted"][0] == [55, 5]


def test_plot_row_count(capsys):
    code, out, _ = run(capsys, "plot", "5", "25")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,F,chi"
    assert len(lines) == 1 + (25 - 5 + 1)
    assert lines[1] == "5,2,0"


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "oracle-check", "500")
    assert code == 0 and "501 values" in out


def test_word_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "theta", "2/4")
    assert code == 2 and "2/4" in err
    code, _, err = run(capsys, "theta", "5/3")
    assert code == 2 and "5/3" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["info", "-5"])
    assert exc.value.code == 2


def test_limit_bits_cap(capsys):
    big = str(1 << 200)
    code, _, err = run(capsys, "zeros", big)
    assert code == 2 and "limit-bits" in err
    code, _, err = run(capsys, "--limit-bits", "250", "plot", big, big)
    # allowed through the cap; the scan itself is a single row here
    assert code == 0


def test_closed_form_paths_ignore_the_cap(capsys):
    # a number far beyond 128 bits still works on non-scan paths
    n = (1 << 200) + 7
    code, out, _ = run(capsys, "info", str(n))
    assert code == 0
    rec = json.loads(out)
    assert rec["n"] == n and rec["F"] >= 1
    code, out, _ = run(capsys, "theta", "13/89")
    assert code == 0 and int(out) > 0
