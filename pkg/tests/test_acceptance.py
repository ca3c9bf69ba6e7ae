"""Acceptance suite.

Each test prints one PASS/FAIL line. The criteria are exact (set
equality / boolean agreement); there are no numeric tolerances
anywhere.
"""

import numpy as np
import pytest

import ringlab.classify
from ringlab import (
    RingTable,
    direct_product,
    group_ring,
    ideal_generated,
    is_nil_clean_definitional,
    is_nil_neat_definitional,
    is_weakly_nil_clean_definitional,
    is_weakly_nil_neat_definitional,
    jacobson_radical,
    karpilovsky_radical,
    make_group,
    make_zmod,
    nilradical,
    quotient_ring,
    ring_isomorphic,
    validate_ring_axioms,
    weakly_nil_clean_criterion,
    weakly_nil_neat_criterion,
    weakly_nil_neat_group_ring_predicate,
)
from ringlab.expr import evaluate
from ringlab.sweep import SweepConfig, _expr_order, group_catalog, ring_catalog, run_sweep

KARPILOVSKY_CAP = 6561


def _report(number: int, name: str, ok: bool) -> bool:
    print(f"ACCEPTANCE {number} ({name}): {'PASS' if ok else 'FAIL'}")
    return ok


@pytest.fixture(scope="module")
def sweep_report():
    # defaults: Z_2..Z_9, products ab <= 12, groups of order <= 4, |RG| <= 1024
    return run_sweep(SweepConfig())


@pytest.fixture(scope="module")
def plain_ring_catalog():
    rings = [make_zmod(n) for n in range(2, 33)]
    for a in range(2, 9):
        for b in range(a, 64 // a + 1):
            rings.append(direct_product(make_zmod(a), make_zmod(b)))
    for parent_order, gen in ((12, 6), (16, 8), (18, 6), (27, 9), (32, 4)):
        parent = make_zmod(parent_order)
        rings.append(quotient_ring(parent, ideal_generated(parent, {gen}))[0])
    z4z9 = direct_product(make_zmod(4), make_zmod(9))
    rings.append(quotient_ring(z4z9, ideal_generated(z4z9, {2 * 9 + 3}))[0])  # by ((2,3))
    assert len(rings) >= 50
    assert all(r.order <= 64 for r in rings)
    return rings


def test_acceptance_1_main_theorem_sweep(sweep_report):
    records = sweep_report.records
    ok = len(records) > 0 and all(r["agreement"] for r in records)
    matched_4 = [
        r for r in records if r["ring"] == "Z3" and r["group"] == "C2"
    ]
    ok = ok and matched_4 and matched_4[0]["theorem_condition"] == 4
    assert _report(1, "main theorem sweep", bool(ok))


def test_acceptance_2_weakly_nil_clean_sweep(sweep_report):
    records = sweep_report.records
    ok = len(records) > 0 and all(r["lemma_agreement"] for r in records)
    assert _report(2, "weakly nil-clean group-ring sweep", bool(ok))


def test_acceptance_3_radical_formula_up_to_6561():
    pairs = 0
    ok = True
    for expr in ring_catalog(SweepConfig()):
        ring = None
        for group in group_catalog(4):
            if _expr_order(expr) ** group.order > KARPILOVSKY_CAP:
                continue
            if ring is None:
                ring = evaluate(expr)
            view = group_ring(ring, group, cap=KARPILOVSKY_CAP)
            formula = karpilovsky_radical(view, radical_cap=KARPILOVSKY_CAP)
            brute = jacobson_radical(view.ring, cap=KARPILOVSKY_CAP)
            if formula != brute:
                ok = False
            pairs += 1
    ok = ok and pairs >= 60  # includes Z9[C4] at order 6561 and Z3[C2xC2] at 81
    assert _report(3, f"radical formula on {pairs} group rings", bool(ok))


def test_acceptance_4_criterion_vs_oracle_on_plain_rings(plain_ring_catalog):
    ok = True
    for ring in plain_ring_catalog:
        wnc_def = is_weakly_nil_clean_definitional(ring).ok
        wnn_def = is_weakly_nil_neat_definitional(ring).ok
        wnc_crit = weakly_nil_clean_criterion(ring)
        wnn_crit = weakly_nil_neat_criterion(ring)
        if wnc_crit.verdict != wnc_def or wnn_crit != wnn_def:
            ok = False
        if not (wnc_crit.residue_fields_ok == wnc_crit.mod_nilradical_ok == wnc_crit.mod_jacobson_ok):
            ok = False
        if wnc_crit.verdict and nilradical(ring) != jacobson_radical(ring):
            ok = False
    assert _report(4, f"criterion vs oracle on {len(plain_ring_catalog)} rings", bool(ok))


def test_acceptance_5_golden_facts():
    z2, z3, z6 = make_zmod(2), make_zmod(3), make_zmod(6)
    z3z3 = direct_product(z3, z3)
    trivial_checks = [
        is_weakly_nil_clean_definitional(z3).ok,
        not is_nil_clean_definitional(z3).ok,
        not is_weakly_nil_clean_definitional(z3z3).ok,
        is_weakly_nil_neat_definitional(z3z3).ok,
        ring_isomorphic(group_ring(z3, make_group([2])).ring, z3z3)[0],
        weakly_nil_neat_group_ring_predicate(z3, make_group([2])) == (True, 4),
        weakly_nil_neat_group_ring_predicate(z2, make_group([2])) == (True, 2),
        weakly_nil_neat_group_ring_predicate(z2, make_group([3])) == (False, None),
        not is_weakly_nil_neat_definitional(group_ring(z2, make_group([3])).ring).ok,
        weakly_nil_neat_group_ring_predicate(z6, make_group([2])) == (False, None),
        not is_weakly_nil_neat_definitional(group_ring(z6, make_group([2])).ring).ok,
    ]
    ok = all(trivial_checks)
    assert _report(5, "golden facts", bool(ok))


def test_acceptance_6_hierarchy_and_disjointness(sweep_report, plain_ring_catalog):
    ok = True
    for ring in plain_ring_catalog:
        nc = is_nil_clean_definitional(ring).ok
        wnc = is_weakly_nil_clean_definitional(ring).ok
        nn = is_nil_neat_definitional(ring).ok
        wnn = is_weakly_nil_neat_definitional(ring).ok
        if nc and not (wnc and nn):
            ok = False
        if (wnc or nn) and not wnn:
            ok = False
    # disjointness: the predicates raise on a double match; re-run them
    for record in sweep_report.records:
        if record["theorem_predicate"]:
            if record["theorem_condition"] is None:
                ok = False
        elif record["theorem_condition"] is not None:
            ok = False
    assert _report(6, "hierarchy and condition disjointness", bool(ok))


def test_acceptance_7_negative_paths(capsys, monkeypatch, tmp_path):
    z4 = make_zmod(4)
    mul = np.array(z4.mul)
    mul[2, 2] = 1
    broken = RingTable(z4.add, mul, zero=0, one=1, label="Z4broken", check=False)
    report = validate_ring_axioms(broken)
    corrupted_ok = not report.ok and any(len(v.witness) == 3 for v in report.violations)

    from ringlab.classify import PredicateResult, weakly_nil_neat_group_ring_predicate
    from ringlab.cli import EXIT_DISAGREEMENT, main

    def inverted(ring, group, **kwargs):
        honest = weakly_nil_neat_group_ring_predicate(ring, group, **kwargs)
        return PredicateResult(not honest.holds, honest.condition)

    monkeypatch.setattr(ringlab.classify, "weakly_nil_neat_group_ring_predicate", inverted)
    code = main(
        [
            "verify-theorem",
            "--max-ring-order", "3",
            "--max-product-order", "4",
            "--max-group-order", "2",
            "--max-groupring-order", "16",
            "--no-cache",
        ]
    )
    capsys.readouterr()  # swallow the sweep JSONL
    fault_ok = code == EXIT_DISAGREEMENT
    ok = corrupted_ok and fault_ok
    assert _report(7, "negative-path robustness", bool(ok))
