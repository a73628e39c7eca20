import json
import os

import pytest

import evoalg

DATA = os.environ.get("EVOALG_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def test_classify_rational():
    a = evoalg.algebra("Q", [[0, 5], [1, 0]])
    tag = evoalg.classify(a)
    assert tag["family"] == "II^{0,2}"
    assert tag["parameters"] == {"lambda": "5"}
    assert a.invariants() == {"l": 0, "e": 2, "diag_dim": 0}


def test_isomorphism_over_q():
    two = evoalg.canonical_algebra("III^{0,3}", [2])
    three = evoalg.canonical_algebra("III^{0,3}", [3])
    big = evoalg.canonical_algebra("III^{0,3}", [128])
    one = evoalg.canonical_algebra("III^{0,3}", [1])
    assert not evoalg.are_isomorphic(two, three)["isomorphic"]
    assert evoalg.are_isomorphic(one, big)["isomorphic"]


def test_oracle_over_finite_field():
    a = evoalg.canonical_algebra("II^{0,2}", [1], "F 3")
    b = evoalg.canonical_algebra("II^{0,2}", [2], "F 3")
    assert evoalg.brute_force_isomorphic(a, b)
    assert evoalg.are_isomorphic(a, b)["isomorphic"]


def test_errors_map_to_exceptions():
    with pytest.raises(evoalg.ParseError):
        evoalg.algebra("F 5", [[0, 7], [1, 0]])
    with pytest.raises(evoalg.DomainError):
        evoalg.classify(evoalg.algebra("Q", [[1, 0], [0, 1]]))


def test_tensor_and_periods():
    a = evoalg.canonical_algebra("III^{0,3}", [2])
    t = evoalg.tensor(a, a)
    assert t.dim == 9
    assert not t.is_simple()
    d = evoalg.decompose(a, a)
    assert d["predicted_components"] == 3
    assert len(d["components"]) == 3
    assert a.period() == 3


def test_census_dim2():
    r = evoalg.census("F 3", 2, pairs=50)
    assert r["scanned"] == 81
    assert r["ok"]
    assert len(r["family_counts"]) == 3


def test_text_round_trip():
    a = evoalg.Algebra.read(os.path.join(DATA, "ii24_f4.txt"))
    assert evoalg.Algebra.parse(a.to_text()) == a
    assert a.field == "F 2^2 t^2+t+1"


def test_cli_json():
    code, out, err = evoalg.run_cli(["--json", "classify", os.path.join(DATA, "ii02_q_5.txt")])
    assert code == 0, err
    env = json.loads(out)
    assert env["command"] == "classify"
    assert env["result"]["tag"] == "II^{0,2}(5)"


def test_family_list():
    ids = evoalg.family_ids()
    assert len(ids) == 30
    assert "III^{3,9}" in ids
