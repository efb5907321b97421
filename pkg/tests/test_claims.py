from __future__ import annotations

import json

import pytest
from helpers import literal_doubly

from metricdim.claims import (
    FAIL,
    PASS,
    SKIPPED,
    claim_registry,
    emit_table,
    find_claims,
    golden_table,
    summary_table,
    verify_claims,
)
from metricdim.families import build_family, parse_vertex_set
from metricdim.graph import all_pairs_distances

NUMBERED = [
    "Rem2.1", "Rem2.2", "Rem2.3", "Thm2.1", "Thm2.2", "Thm2.3", "Thm3.1", "Thm3.2", "Lem3.1",
    "Thm3.3", "Conc3.1", "Rem3.1", "Lem3.2", "Thm3.4", "Thm3.5", "Thm3.6", "Prop3.1", "Prop3.2",
    "Thm3.7", "Cor3.1", "Lem3.3", "Thm3.8", "Lem3.4", "Thm3.9", "Prop3.3", "Thm3.10",
    "Ex3.1", "Ex3.2", "Ex3.3",
]


def one(cid, **params):
    reports = verify_claims([cid], params=params or None)
    assert len(reports) == 1
    return reports[0]


def test_registry_covers_every_numbered_item():
    ids = [c.id for c in claim_registry()]
    assert len(ids) >= 27 and len(set(ids)) == len(ids)
    for base in NUMBERED:
        assert any(i == base or i.startswith(base + "-") for i in ids), base


def test_registry_expected_values():
    by_id = {c.id: c for c in claim_registry()}
    assert by_id["Thm3.7"].expected_for({"n": 6}) == 4
    assert by_id["Thm3.7"].expected_for({"n": 9}) == 6
    assert by_id["Thm3.10"].expected_for({"n": 5}) == 15
    ex = by_id["Ex3.2-psi"]
    assert ex.expected_for({"n": 4, "k": 3, "m": 4}) == 5
    assert "4" in ex.note and "5" in ex.note


def test_spot_checked_notes():
    by_id = {c.id: c for c in claim_registry()}
    for cid in ("Conc3.1", "Thm3.4", "Thm3.5"):
        assert "spot-checked" in by_id[cid].note


def test_find_claims_groups_and_unknown():
    assert {c.id for c in find_claims(["Thm3.9"])} == {"Thm3.9"}
    assert {c.id for c in find_claims(["Rem2.1"])} == {"Rem2.1-beta", "Rem2.1-psi", "Rem2.1-sdim"}
    with pytest.raises(KeyError):
        find_claims(["Thm9.9"])


def test_thm31_passes_at_5_3():
    r = one("Thm3.1", n=5, k=3)
    assert r.verdict == PASS and r.computed == 3


def test_prop32_reports_v1_vn():
    for n in (5, 6):
        r = one("Prop3.2", n=n)
        assert r.verdict == PASS
        entry = r.detail["sets"][0]
        assert entry["named_pair"] == ["v1", f"v{n}"] and entry["named_pair_violates"]
        assert entry["violating_pair"] == ["v1", f"v{n}"]


def test_lem33_c1_colliding_pair():
    r = one("Lem3.3-C1", n=5)
    entry = r.detail["sets"][0]
    assert r.verdict == PASS
    assert entry["named_pair"] == ["{v1, v1v4}", "{v1, v1v5}"]
    assert entry["named_pair_representations"] == [[2, 2], [2, 2]]


def test_negative_claims_record_pairs():
    for cid in ("Thm3.1-MN", "Lem3.2-E12", "Lem3.4", "Prop3.3"):
        for r in verify_claims([cid]):
            assert r.verdict == PASS
            for entry in r.detail["sets"]:
                assert len(entry["violating_pair"]) == 2


def test_rem31_no_pair_resolves():
    r = one("Rem3.1", n=4, k=3)
    assert r.verdict == PASS and r.computed == 0 and r.detail["pairs_checked"] == 66


def test_basis_classification():
    r = one("Thm3.1-basis", n=5, k=3)
    assert r.verdict == PASS
    assert r.detail["minimum_resolving_sets"] == 10 and not r.detail["unexpected"]


def test_corollary_chain():
    r = one("Cor3.1", n=6)
    assert r.verdict == PASS
    assert r.detail["beta(H(7))"] == 5 and r.detail["beta(H(8))"] == 6


def test_table_claim_on_example_32():
    r = one("Ex3.2", n=4, k=3, m=4)
    assert r.verdict == PASS and r.computed == 48 and not r.detail["mismatches"]


def test_table_claim_reports_row_mismatches():
    r = one("Ex3.1", n=5, k=4, m=4)
    # every differing row is reported with both versions
    for diff in r.detail["mismatches"]:
        assert diff["printed"].split(" = ")[0] == diff["computed"].split(" = ")[0]
    assert r.computed == 80 - len(r.detail["mismatches"])


def test_smaller_doubly_resolving_set_found_at_n3():
    # the solver's witness for (C_3 x P_3) x P_2 is checked by the literal definition
    built = build_family("cpm:n=3,k=3,m=2")
    d = all_pairs_distances(built.graph).d.astype(int).tolist()
    q = parse_vertex_set("x1:1,x8:1,x3:2", built)
    assert literal_doubly(q, d)
    r = one("Thm3.3", n=3, k=3, m=2)
    assert r.computed == 3 and r.verdict == FAIL


def test_emit_table_rows():
    built = build_family("cpm:n=5,k=4,m=4")
    lines = emit_table(built, "D1").splitlines()
    assert len(lines) == 80 and lines[0] == "r(x1^1|D1) = (0, 2, 3, 6)"
    assert lines[1].startswith("r(x1^2|D1)")
    e = emit_table(build_family("cpm:n=4,k=3,m=4"), "E").splitlines()
    assert "r(x9^4|E) = (5, 6, 7, 3, 0)" in e
    assert e == golden_table("c4p3p4_E.txt")


def test_emit_table_singleton_and_plain_product():
    built = build_family("cp:n=5,k=3")
    lines = emit_table(built, "M1").splitlines()
    assert lines[0] == "r(x1|M1) = (0, 2)"
    h = build_family("h:n=5")
    assert emit_table(h, "P1").splitlines()[0] == "r(v1|P1) = (1, 1)"


def test_golden_files_shape():
    for name, rows, width in (("c5p4p4_D1.txt", 80, 4), ("c4p3p4_E.txt", 48, 5)):
        lines = golden_table(name)
        assert len(lines) == rows
        assert all(line.count(",") == width - 1 for line in lines)


def test_budget_becomes_skipped():
    reports = verify_claims(["Thm3.7"], budget=10)
    assert [r.verdict for r in reports] == [SKIPPED]
    assert reports[0].detail["upper_bound"] >= 4


def test_slow_cases_opt_in():
    assert len(verify_claims(["Thm3.7-P"])) == 3
    ids = [(c.id, c.slow_cases) for c in claim_registry() if c.slow_cases]
    assert ("Thm3.7", ({"n": 9},)) in ids


def test_report_json_round_trip():
    r = one("Rem2.2-beta", n=5)
    data = json.loads(r.to_json(timing=False))
    assert data == {"id": "Rem2.2-beta", "params": {"n": 5}, "verdict": "PASS", "expected": 2,
                    "computed": 2, "detail": {"witness": ["x1", "x2"]}}
    assert "elapsed_ms" in json.loads(r.to_json())


def test_summary_table():
    text = summary_table(verify_claims(["Rem2.3"]))
    assert text.splitlines()[0].split() == ["claim", "params", "verdict", "expected", "computed"]
    assert text.rstrip().endswith("8 passed, 0 failed, 0 skipped")


def test_report_order_follows_request():
    ids = [r.claim_id for r in verify_claims(["Thm2.3", "Thm2.1"])]
    assert ids == ["Thm2.3"] * 4 + ["Thm2.1"] * 6
