import json
import os

import pytest

from charvar.cli import main
from charvar.links import REDUCIBLE_SURFACE
from charvar.polynomials import from_json
from charvar.traces import GAMMA, X, Y, Z


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_trace_command(capsys):
    code, out, _ = run(capsys, "trace", "abAB")
    assert code == 0
    assert out.strip() == str(GAMMA)
    code, out, _ = run(capsys, "trace", "")
    assert code == 0 and out.strip() == "2"


def test_trace_parse_failure_exit_2(capsys):
    code, _, err = run(capsys, "trace", "ab?")
    assert code == 2
    assert "error" in err


def test_trace_json_round_trip(capsys):
    code, out, _ = run(capsys, "trace", "abAB", "--format", "json")
    assert code == 0
    assert from_json(json.loads(out)) == GAMMA


def test_charpoly_json_round_trip(capsys):
    code, out, _ = run(capsys, "charpoly", "twobridge:4,3", "--format", "json")
    assert code == 0
    poly = from_json(json.loads(out))
    q = X * Y - GAMMA * Z
    assert poly in (REDUCIBLE_SURFACE * q, -(REDUCIBLE_SURFACE * q))


def test_charpoly_invalid_link_exit_2(capsys):
    code, _, err = run(capsys, "charpoly", "twobridge:4,2")
    assert code == 2


def test_components_command(capsys):
    code, out, _ = run(capsys, "components", "pretzel:1,2")
    assert code == 0
    assert "3 components" in out
    code, out, _ = run(capsys, "components", "whitehead:2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["component_count"] == 3 and data["product_check"]


def test_verify_pretzel_small_range(capsys):
    code, out, _ = run(capsys, "verify", "1", "--m", "0..1", "--n=-1..2")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 8
    assert all("pass" in l for l in lines)


def test_verify_whitehead_range(capsys):
    code, out, _ = run(capsys, "verify", "3", "--k", "0..8")
    assert code == 0
    lines = [l for l in out.splitlines() if "whitehead" in l]
    assert len(lines) == 9
    assert all("pass" in l for l in lines)


def test_components_detects_whitehead_twobridge(capsys):
    code, out, _ = run(capsys, "components", "twobridge:6,5")
    assert code == 0
    assert "3 components" in out


def test_verify_twobridge_with_seed_and_json(capsys):
    code, out, _ = run(capsys, "verify", "2", "--p", "4..5", "--seed", "11", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [r["link"] for r in rows] == ["twobridge:4,3", "twobridge:5,3"]
    assert all(r["pass"] for r in rows)
    assert all(r["numeric_residual"] < 1e-6 for r in rows)


def test_cache_round_trip_and_corruption(tmp_path, capsys):
    cache = str(tmp_path / "cache")
    code, out1, _ = run(capsys, "charpoly", "twobridge:4,3", "--cache-dir", cache)
    assert code == 0
    entry = os.path.join(cache, "twobridge_4_3.json")
    assert os.path.exists(entry)
    # second run reads the cache and agrees
    code, out2, _ = run(capsys, "charpoly", "twobridge:4,3", "--cache-dir", cache)
    assert code == 0 and out1 == out2

    # corrupt one coefficient: verify must fail with exit 1, not pass silently
    with open(entry) as fh:
        data = json.load(fh)
    data["full"]["terms"][0]["coeff"] = str(int(data["full"]["terms"][0]["coeff"]) + 1)
    with open(entry, "w") as fh:
        json.dump(data, fh)
    code, out, _ = run(capsys, "verify", "2", "--p", "4..4", "--cache-dir", cache)
    assert code == 1
    assert "FAIL" in out

    # unparseable cache entry also fails loudly
    with open(entry, "w") as fh:
        fh.write("{not json")
    code, _, err = run(capsys, "verify", "2", "--p", "4..4", "--cache-dir", cache)
    assert code == 1
    assert "corrupt" in err


def test_no_cache_flag_ignores_corruption(tmp_path, capsys):
    cache = str(tmp_path / "cache")
    os.makedirs(cache)
    with open(os.path.join(cache, "twobridge_4_3.json"), "w") as fh:
        fh.write("{not json")
    code, _, _ = run(capsys, "verify", "2", "--p", "4..4", "--cache-dir", cache, "--no-cache")
    assert code == 0


def test_verify_parallel_matches_serial(capsys):
    code1, out1, _ = run(capsys, "verify", "3", "--k", "0..2")
    code2, out2, _ = run(capsys, "verify", "3", "--k", "0..2", "--jobs", "2")
    assert code1 == code2 == 0
    assert out1 == out2
