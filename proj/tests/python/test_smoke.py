import json

import pytest

import grtlab

SIGMA3 = "[x,[x,y]] - [y,[y,x]]"


def test_normalize():
    assert grtlab.normalize("1/3 [y,x]", max_degree=4) == "-1/3 [x,y]"
    assert grtlab.normalize("[x,x]") == "0"


def test_parse_error():
    with pytest.raises(ValueError):
        grtlab.normalize("[x,,y]")


def test_json_round_trip():
    doc = grtlab.to_json("1/3 [y,x]", max_degree=4)
    assert doc["terms"] == [{"coeff": "-1/3", "word": "xy"}]
    assert grtlab.from_json(doc) == "-1/3 [x,y]"


def test_sigma3_residuals():
    for which in ("hexagon", "skew", "eq3", "pentagon"):
        assert grtlab.residual(which, SIGMA3, 3) == "0"
    assert grtlab.residual("hexagon", "[x,y]", 4) == "3 [x,y]"
    assert grtlab.residual("pentagon", "[x,y]", 4) == "0"


def test_projectors():
    h = grtlab.project("hexagon", "[x,y] + " + SIGMA3, 5)
    assert grtlab.residual("hexagon", h, 5) == "0"
    a = grtlab.project("antihexagon", "[x,y]", 5)
    assert grtlab.residual("antihexagon", a, 5) == "0"


def test_dk_dimensions():
    assert grtlab.dk_dimensions(3, 5) == [3, 1, 2, 3, 6]
    assert grtlab.dk_dimensions(4, 4) == [6, 4, 10, 21]


def test_labs():
    for lab_id in grtlab.group_lab_ids():
        report = grtlab.lab("group", lab_id, seed=3)
        # the search lab exists to exhibit a counterexample
        assert report["ok"] == (lab_id != "prop-2d-search"), lab_id
    for lab_id in grtlab.torsor_lab_ids():
        assert grtlab.lab("torsor", lab_id, seed=3)["ok"], lab_id


def test_five_cycle():
    assert grtlab.fp_cycle(11)["fixed_points"] == 2
    assert abs(grtlab.bloch_wigner(complex(0.5, 3 ** 0.5 / 2)) - 1.0149416064096536) < 1e-12
    sweep = grtlab.bloch_wigner_sweep(200, 5, jobs=2)
    assert sweep["passed"] and sweep["max_residual"] < 1e-10


def test_cli():
    code, out, _ = grtlab.run("--format", "json", "dk", "dims", "--n", "3", "--max-degree", "3")
    assert code == 0
    assert json.loads(out)["dimensions"] == [3, 1, 2]
    code, _, _ = grtlab.run("bogus")
    assert code == 2
