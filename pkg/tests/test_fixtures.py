import json

import pytest

from limweight.fixtures import (BUILTINS, FixtureError, LieBundle, OdeFixture, fixture_kind, linear_map_from_json,
                                list_fixtures, load_fixture)
from limweight.matrix import Matrix
from limweight.novikov import GroupDiffFixture
from limweight.rota_baxter import GroupRBFixture, check_group_rrb

from conftest import E, I


def test_builtins_are_listed():
    names = {f["name"] for f in list_fixtures()}
    assert len(names) >= 5
    assert {"heisenberg-rb", "heisenberg-diff", "ode-polynomial-set"} <= names
    for name, entry in BUILTINS.items():
        assert fixture_kind(load_fixture(name)) == entry.kind


def test_linear_map_forms_agree():
    rows = linear_map_from_json([[0, 1, 0], [0, 0, 0], [0, 0, 0]], 3)
    cols = linear_map_from_json({"e2": [1, 0, 0]}, 3)
    assert rows == cols == Matrix.unit(3, 1, 2)
    with pytest.raises(FixtureError):
        linear_map_from_json([[1]], 3)


def test_unipotent_descriptor(tmp_path):
    desc = {"dim": 3, "pair": "power", "operator": {"kind": "exp-conjugate-linear", "B": {"e2": [1, 0, 0]}}}
    path = tmp_path / "mine.json"
    path.write_text(json.dumps(desc))
    f = load_fixture(str(path))
    assert isinstance(f, GroupRBFixture) and f.name == "mine"
    assert f.notes["B"] == Matrix.unit(3, 1, 2).to_json()
    assert check_group_rrb(f, [(I() + E(1, 2), I() + E(2, 3))]).passed


def test_diff_descriptor():
    d = {"dim": 3, "operator": {"kind": "exp-half-bracket", "D": [[1, 0, 0], [0, 1, 0], [0, 0, 2]]}}
    assert isinstance(load_fixture(d), GroupDiffFixture)


def test_lie_descriptor():
    sc = [[[0, 0], [1, 0]], [[-1, 0], [0, 0]]]
    b = load_fixture({"carrier": "lie", "structure_constants": sc, "D": {"e2": [1, 0]}})
    assert isinstance(b, LieBundle) and b.rb is None and b.diff is not None
    with pytest.raises(FixtureError, match="Jacobi"):
        load_fixture({"carrier": "lie", "structure_constants": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]})


def test_ode_descriptor():
    f = load_fixture({"carrier": "ode", "paths": {"u": [[[0, 1], [0, 0]]], "v": [[[0, 0], [1, 0]]]},
                      "pairs": [["u", "v"]], "interval": [0, 2]})
    assert isinstance(f, OdeFixture) and f.x1 == 2.0 and len(f.pairs) == 1


@pytest.mark.parametrize("desc", [
    {"dim": 9, "operator": "inverse"},
    {"dim": 3, "operator": "nonsense"},
    {"dim": 3},
    {"carrier": "torus"},
    {"carrier": "ode", "paths": {}, "pairs": [["u", "v"]]},
])
def test_bad_descriptors(desc):
    with pytest.raises(FixtureError):
        load_fixture(desc)


def test_unknown_name_and_unreadable_file(tmp_path):
    with pytest.raises(FixtureError, match="unknown fixture"):
        load_fixture("no-such-fixture")
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(FixtureError, match="cannot read"):
        load_fixture(str(bad))
