import numpy as np
import pytest

from pinch_rsma import coverage, tables
from pinch_rsma.closed_form import constants
from pinch_rsma.coverage import (RELATIONS, UNREACHABLE, broad_config, fuzz_rows, match_counts, orderings,
                                 relations_hold, row_mask, witness_search)


def test_relations_hold_on_sampled_configs():
    rng = np.random.default_rng(17)
    checked = 0
    for _ in range(20_000):
        cfg = broad_config(rng)
        th11, _, th2 = cfg.thresholds
        if th11 <= 0 or th2 <= 0:
            continue
        k = constants(cfg)
        v, _ = coverage.relation_values(k)
        if len(set(v.values()) | {0.0}) < len(v) + 1:
            continue    # ties: the relations are stated for generic configurations
        broken = [n for n, ok in relations_hold(k).items() if not ok]
        assert not broken, (broken, cfg)
        checked += 1
    assert checked > 15_000


def test_every_consistent_ordering_matches_exactly_one_row():
    orders = orderings()
    assert len(orders) < len(orderings(consistent_only=False))
    for message in tables.MESSAGES:
        counts = match_counts(message, orders)
        assert counts.min() == 1 and counts.max() == 1, message


def test_unreachable_list_is_exact():
    orders = orderings()
    for row in tables.ROWS:
        reachable = row_mask(row, orders).any()
        assert reachable == (row.row_id not in UNREACHABLE), row.row_id


def test_unreachable_reasons_name_sufficient_relations():
    full = orderings(consistent_only=False)
    for row_id, names in UNREACHABLE.items():
        row = next(r for r in tables.ROWS if r.row_id == row_id)
        keep = np.logical_and.reduce([RELATIONS[n].holds(full.values, full.strong) for n in names])
        sub = coverage.Orderings({k: v[keep] for k, v in full.values.items()}, full.strong[keep])
        assert not row_mask(row, sub).any(), row_id
        assert coverage.unreachable_reason(row_id)
    assert coverage.unreachable_reason("x1a.r08") is None


def test_absent_x1a_case_is_excluded():
    text, why = coverage.ABSENT_X1A_CASE
    assert why in RELATIONS
    v = orderings(consistent_only=False).values
    case = (v["C3"] >= v["Z"]) & (v["C3"] < v["L2"]) & (v["C4"] >= v["L2"])
    assert case.any()
    assert not (case & RELATIONS[why].holds(v, None)).any()


def test_witness_corpus_covers_all_reachable_rows(row_witnesses):
    reachable = {r.row_id for r in tables.ROWS + tables.SUPPLEMENTARY_ROWS} - set(UNREACHABLE)
    assert set(row_witnesses) == reachable
    for row_id, cfg in row_witnesses.items():
        message = row_id.split(".")[0]
        assert [r.row_id for r in tables.matches(constants(cfg), message)] == [row_id]


def test_fuzz_report_small():
    rep = fuzz_rows(500, seed=3)
    assert rep.configs == 500
    assert rep.no_match == 0 and rep.multi_match == 0
    assert sum(rep.hits.values()) == 3 * 500
    assert not set(rep.hits) & set(UNREACHABLE)
    assert rep == fuzz_rows(500, seed=3)


def test_witness_search_finds_a_rare_row():
    row = next(r for r in tables.ROWS if r.row_id == "xb.c6pos.r48")
    cfg = witness_search(row, seed=0)
    assert cfg is not None
    assert [r.row_id for r in tables.matches(constants(cfg), "xb")] == [row.row_id]


@pytest.mark.parametrize("row_id", ["x1a.r07", "xb.c6neg.r22"])
def test_witness_search_gives_up_on_unreachable_rows(row_id):
    row = next(r for r in tables.ROWS if r.row_id == row_id)
    assert witness_search(row, seed=0, maxiter=15) is None
