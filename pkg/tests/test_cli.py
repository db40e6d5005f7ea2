import json

import pytest

from skeinrep import cli
from skeinrep.rep import FormulaMismatch


def _json(capsys, argv, code=0):
    assert cli.run(argv) == code
    return json.loads(capsys.readouterr().out)


def test_counts_json(capsys):
    d = _json(capsys, ["counts", "--n", "3", "--r", "5", "--format", "json"])
    assert d["schema_version"] == 1
    assert d["k"] == 2 and d["k_prime"] == 1


def test_counts_ascii(capsys):
    assert cli.run(["counts", "--n", "4", "--r", "7", "--format", "ascii"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("n=4 r=7")


def test_certify_power(capsys, tmp_path):
    d = _json(capsys, ["certify", "--punctures", "6", "--power", "5", "--rmax", "12"])
    pairs = {(c["r"], c["t"]) for c in d["certificates"]}
    assert (10, 3) in pairs
    f = tmp_path / "certs.json"
    f.write_text(json.dumps(d))
    v = _json(capsys, ["verify", "--file", str(f), "--format", "json"])
    assert v["ok"] and len(v["results"]) == len(d["certificates"])
    # a tampered file fails verification with exit 1
    d["certificates"][0]["dim"] += 2
    f.write_text(json.dumps(d))
    assert cli.run(["verify", "--file", str(f)]) == 1


def test_certify_single_root(capsys):
    d = _json(capsys, ["certify", "--n", "3", "--r", "6", "--t", "1"])
    assert d["certificates"][0]["kind"] == "FiniteOrder"
    d = _json(capsys, ["certify", "--n", "3", "--r", "10", "--t", "3"])
    c = d["certificates"][0]
    assert c["kind"] == "InfiniteOrder" and c["witness_a"] == 1


def test_matrix(capsys):
    d = _json(capsys, ["matrix", "--element", "Commutator2(2)", "--n", "3", "--r", "7", "--t", "3"])
    assert d["element"] == "Commutator2(s=2)" and d["t"] == 3
    assert cli.run(["matrix", "--element", "CommutatorM", "--n", "3", "--r", "5", "--format", "ascii"]) == 0
    assert "CommutatorM" in capsys.readouterr().out


def test_scan_f2(capsys):
    d = _json(capsys, ["scan-f2", "--rmin", "5", "--rmax", "12", "--format", "json"])
    neg = [x["r"] for x in d["results"] if not x["positive"]]
    assert neg == [6, 10]


def test_hyper(capsys):
    d = _json(capsys, ["hyper", "--g", "2", "--h", "1", "--m", "1", "--r", "4", "--format", "json"])
    assert all(s["trivial"] for s in d["scalar_sets"])
    d = _json(capsys, ["hyper", "--conditions", "--rmax", "8", "--gmax", "5", "--mmax", "6", "--format", "json"])
    assert d["contradictions"] == []
    d = _json(capsys, ["hyper", "--g", "2", "--k", "5", "--l", "5", "--rmax", "10", "--format", "json"])
    assert any(x["r"] == 10 and x["t"] == 3 for x in d["results"])


def test_table_small(capsys):
    assert cli.run(["table", "--gmax", "3", "--mmax", "6"]) == 0
    out = capsys.readouterr().out
    assert "legend" in out and "<- g" in out
    d = _json(capsys, ["table", "--gmax", "2", "--mmax", "2", "--format", "json"])
    assert len(d["cells"]) == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["counts", "--n", "3"],
        ["counts", "--n", "2", "--r", "5"],
        ["counts", "--n", "3", "--r", "5", "--bogus", "1"],
        ["matrix", "--element", "sigma1", "--n", "3", "--r", "5"],
        ["matrix", "--element", "CommutatorM", "--n", "3", "--r", "5", "--t", "2"],
        ["certify", "--punctures", "7", "--power", "5", "--rmax", "12"],
        ["certify", "--punctures", "6", "--n", "4", "--r", "5"],
        ["certify", "--punctures", "6", "--power", "5"],
        ["certify", "--n", "3", "--r", "5", "--max-power", "100"],
        ["hyper", "--g", "2"],
        ["table", "--jobs", "0"],
    ],
)
def test_usage_errors(argv, capsys):
    assert cli.run(argv) == 2


def test_internal_inconsistency(monkeypatch, capsys):
    def boom(*a, **k):
        raise FormulaMismatch("closed form and product differ")

    monkeypatch.setattr(cli, "represent", boom)
    assert cli.run(["matrix", "--element", "CommutatorM", "--n", "3", "--r", "5"]) == 1
    assert "internal inconsistency" in capsys.readouterr().err


def test_selfcheck(capsys):
    d = _json(capsys, ["selfcheck", "--format", "json"])
    assert d["ok"] and len(d["checks"]) == 10
