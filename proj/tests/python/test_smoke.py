import json
import os

import pytest

import gradalg


def test_examples_are_listed():
    names = gradalg.examples()
    assert "m2_gamma1" in names
    assert names == sorted(names)


def test_m2_universal_group():
    a = gradalg.Algebra.example("m2_gamma1")
    assert a.dim == 4
    assert a.labels == ["e11", "e12", "e21", "e22"]
    assert a.support() == ["-1", "0", "1"]
    u = a.universal_group()
    assert len(u["generators"]) == 3
    assert len(u["relators"]) == 7
    assert u["verdict"] == "free of rank 1"


def test_group_algebra_is_finite():
    u = gradalg.Algebra.example("group_algebra_s3").universal_group()
    assert u["verdict"] == "finite of order 6"


def test_weak_equivalence_certificate():
    a = gradalg.Algebra.example("m2_gamma1", "GF:2")
    b = gradalg.Algebra.example("m2_gamma2_s3", "GF:2")
    status, psi = gradalg.weak_equivalence(a, b)
    assert status == "certificate"
    assert psi == {"-1": "(123)", "0": "e", "1": "(132)"}


def test_weak_equivalence_none():
    a = gradalg.Algebra.example("group_algebra_z2", "GF:2")
    b = gradalg.Algebra.example("group_algebra_z3", "GF:2")
    status, _ = gradalg.weak_equivalence(a, b)
    assert status == "none"


def test_json_round_trip():
    a = gradalg.Algebra.example("prop_6_5_B", "GF:3")
    b = gradalg.Algebra.from_json(a.to_json())
    assert a == b
    assert b.field == "GF(3)"
    assert b.verify() == (True, "")
    assert json.loads(a.to_json())["field"]["kind"] == "GF"


def test_bad_input_raises():
    with pytest.raises(ValueError):
        gradalg.Algebra.from_json("{")
    with pytest.raises(gradalg.InputError):
        gradalg.Algebra.example("no_such_algebra")
    with pytest.raises(ValueError):
        gradalg.replay("no_such_scenario")


def test_characters():
    assert gradalg.one_dim_char_trivial("z3", 2)
    assert not gradalg.one_dim_char_trivial("z2", 3)


@pytest.mark.parametrize("field", ["Q", "GF:2", "GF:3"])
def test_every_scenario_replays(field):
    for name in gradalg.scenarios():
        r = gradalg.replay(name, field)
        assert r["passed"], r["assertions"]


def test_cli_exit_codes():
    code, out, _ = gradalg.run_cli(["example", "--list"])
    assert code == 0
    assert "m2_gamma1" in out
    code, _, _ = gradalg.run_cli(["frobnicate"])
    assert code == 2
    data = os.environ.get("GRADALG_DATA_DIR")
    if data:
        code, out, _ = gradalg.run_cli(["support", os.path.join(data, "m2_gamma1.json")])
        assert (code, out) == (0, "{-1, 0, 1}\n")
