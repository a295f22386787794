import json
import os

import pytest

import ordtop

DISC2 = {"n": 2, "opens": [[0], [1]], "leq": [[0, 1]], "name": "disc2"}
SIERPINSKI = {"n": 2, "opens": [[1]], "leq": [[0, 1]], "name": "sierpinski"}
CHAIN3 = {"n": 3, "opens": [[0], [1], [2]], "leq": [[0, 1], [1, 2]], "name": "chain3"}


def test_property_report():
    report = ordtop.property_report(DISC2)
    assert report["completely_regular"]["holds"] is True
    assert ordtop.property_report(SIERPINSKI)["semiclosed"]["holds"] is False


def test_metrize_and_admissibility():
    matrix = ordtop.metrize(DISC2)
    assert matrix["m"][1][0] == "1/2"
    assert matrix["m"][0][1] == "0"
    verdict = ordtop.is_admissible(DISC2, matrix, strict=True)
    assert verdict["admissible"] is True
    assert verdict["strict"] is True


def test_metrize_rejects_non_completely_regular():
    with pytest.raises(ordtop.NotCompletelyRegularError):
        ordtop.metrize(SIERPINSKI)


def test_separating_family():
    family = ordtop.separating_family(CHAIN3)
    assert family == [["0", "0", "1"], ["0", "1", "1"]]


def test_embed():
    result = ordtop.embed(CHAIN3)
    assert result["order_embedding"]["holds"] is True
    assert result["embedding"]["image"] == [["0", "0"], ["0", "1"], ["1", "1"]]


def test_strict_embed():
    result = ordtop.strict_embed(DISC2)
    assert result["order_embedding"]["holds"] is True
    assert result["order_subspace"]["holds"] is True
    assert result["embedding"]["dimension"] == 4


def test_product():
    matrix = ordtop.metrize(DISC2)
    prod = ordtop.product([
        {"space": DISC2, "matrix": matrix},
        {"space": DISC2, "matrix": matrix},
    ])
    assert prod["space"]["n"] == 4
    assert prod["matrix"]["m"][3][0] == "3/8"


def test_quniform_check():
    family = ordtop.separating_family(DISC2)
    report = ordtop.quniform_check(DISC2, family)
    assert report["status"] == "ok"


def test_run_suite():
    assert "bhs-equivalence" in ordtop.known_suites()
    result = ordtop.run_suite(
        "bhs-equivalence", {"mode": "exhaustive", "n": 2}, jobs=2
    )
    assert result["checked"] == 16
    assert result["failures"] == 0


def test_search():
    assert "closed=>convex" in ordtop.known_implications()
    result = ordtop.search("closed=>convex", budget=100)
    assert result["found"] is True


def test_fixture_files_load():
    fixture_dir = os.environ.get("ORDTOP_FIXTURE_DIR")
    if not fixture_dir:
        pytest.skip("fixture directory not provided")
    with open(os.path.join(fixture_dir, "disc2.json")) as fh:
        space = json.load(fh)
    assert ordtop.property_report(space)["convex"]["holds"] is True
