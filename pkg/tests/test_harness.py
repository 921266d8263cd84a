import copy
import json

import pytest

from antigeometry.harness import (
    CE,
    HOLDS,
    REGISTRY,
    UNREALIZED,
    ReplayMismatch,
    UnknownFixture,
    catalog,
    get_fixture,
    replay,
    run_all,
    run_fixture,
)
from antigeometry.model import DEFAULT


@pytest.fixture(scope="module")
def reports():
    return {r.fixture_id: r for r in run_all(DEFAULT)}


def test_catalog_covers_every_group():
    ids = catalog()
    assert len(ids) >= 30
    for prefix, n in (("euclid.", 5), ("I.", 7), ("II.", 5), ("V.", 1)):
        assert sum(1 for f in ids if f.startswith(prefix)) == n
    assert any(f.startswith("III.") for f in ids)
    assert any(f.startswith("IV.") for f in ids)


def test_every_fixture_reaches_expected_status(reports):
    for fid, rep in reports.items():
        assert rep.status == REGISTRY[fid].expected, fid


def test_expected_statuses():
    assert REGISTRY["III.finite"].expected == UNREALIZED
    assert REGISTRY["III.all"].expected == UNREALIZED
    assert REGISTRY["IV.sum180"].expected == HOLDS
    assert REGISTRY["I.1"].expected == CE


def test_reports_replay_from_json(reports):
    for rep in reports.values():
        d = json.loads(json.dumps(rep.to_dict(), allow_nan=False))
        assert replay(d, DEFAULT)


def test_tampered_witness_fails_replay(reports):
    d = copy.deepcopy(reports["IV.sumLess"].to_dict())
    d["witness"]["values"]["sum"] += 1.0
    with pytest.raises(ReplayMismatch):
        replay(d, DEFAULT)
    d = copy.deepcopy(reports["II.1"].to_dict())
    d["status"] = "NotFound"
    with pytest.raises(ReplayMismatch):
        replay(d, DEFAULT)


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        get_fixture("IX.9")


def test_report_dict_shape(reports):
    d = reports["euclid.1"].to_dict()
    assert set(d) == {"fixture_id", "anchor", "status", "witness"}
    assert set(d["witness"]) == {"inputs", "values"}


def test_angle_sum_values(reports):
    vals = {f: reports[f].to_dict()["witness"]["values"] for f in ("IV.sum180", "IV.sumLess", "IV.sum0", "IV.sumMore")}
    assert vals["IV.sum180"]["sum"] == pytest.approx(180, abs=1e-9)
    assert vals["IV.sum0"]["sum"] == 0.0
    assert 0 < vals["IV.sumLess"]["sum"] < 180
    assert vals["IV.sumMore"]["sum"] > 180


def test_filtered_run():
    assert [r.fixture_id for r in run_all(DEFAULT, prefix="II.")] == ["II.1", "II.2", "II.3", "II.4", "II.5"]


def test_strict_run_single():
    assert run_fixture("euclid.3", DEFAULT).status == CE
