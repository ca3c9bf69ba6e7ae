"""Exhaustive verification sweep over a catalog of (ring, group) pairs.

For every base ring R in the catalog and every abelian group G of
bounded order with |R|^|G| under the group-ring cap, the sweep builds
RG, decides weak nil-neatness and weak nil-cleanness definitionally,
evaluates the structural group-ring predicates, and records whether the
two sides agree.  Records are sorted by (|RG|, ring label, group label)
so reports are byte-stable; wall times are the only nondeterministic
fields.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__, classify
from .cache import VerdictCache
from .classify import is_weakly_nil_clean_definitional, is_weakly_nil_neat_definitional
from .expr import ProductExpr, RingExpr, ZmodExpr, canonical_label, evaluate
from .group_algebra import AbelianGroup, _factorint, group_ring, make_group
from .ideals import DEFAULT_IDEAL_CAP
from .rings import DEFAULT_ORDER_CAP


@dataclass
class SweepConfig:
    max_ring_order: int = 9
    max_product_order: int = 12
    max_group_order: int = 4
    max_groupring_order: int = 1024
    ideal_cap: int = DEFAULT_IDEAL_CAP
    order_cap: int = DEFAULT_ORDER_CAP
    jobs: int = 1

    def validate(self) -> None:
        if self.max_ring_order < 2:
            raise ValueError("max_ring_order must be >= 2 (no rings in catalog)")
        if self.max_group_order < 1:
            raise ValueError("max_group_order must be >= 1 (no groups in catalog)")
        if self.max_groupring_order < 2:
            raise ValueError("max_groupring_order must be >= 2")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def to_dict(self) -> dict:
        return {
            "max_ring_order": self.max_ring_order,
            "max_product_order": self.max_product_order,
            "max_group_order": self.max_group_order,
            "max_groupring_order": self.max_groupring_order,
            "ideal_cap": self.ideal_cap,
            "order_cap": self.order_cap,
        }


def ring_catalog(config: SweepConfig) -> list[RingExpr]:
    """All Z_n up to the ring-order cap, then two-factor products Z_a x
    Z_b (a <= b) up to the product-order cap."""
    exprs: list[RingExpr] = [ZmodExpr(n) for n in range(2, config.max_ring_order + 1)]
    for a in range(2, config.max_product_order // 2 + 1):
        for b in range(a, config.max_product_order // a + 1):
            exprs.append(ProductExpr(ZmodExpr(a), ZmodExpr(b)))
    return exprs


def _partitions(n: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []
    def rec(remaining: int, largest: int, acc: list[int]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part, acc + [part])
    rec(n, n, [])
    return out


def group_catalog(max_order: int) -> list[AbelianGroup]:
    """All abelian groups of order 1..max_order, one per isomorphism
    type, generated from exponent partitions prime by prime."""
    groups: list[AbelianGroup] = []
    for order in range(1, max_order + 1):
        variants: list[list[int]] = [[]]
        for p, e in sorted(_factorint(order).items()):
            extended = []
            for parts in _partitions(e):
                for base in variants:
                    extended.append(base + [p**exp for exp in parts])
            variants = extended
        for factors in variants:
            groups.append(make_group(factors))
    groups.sort(key=lambda g: (g.order, g.factors))
    return groups


def _evaluate_pair(args) -> dict:
    """Worker body: one (ring expr, group factors) pair to one record."""
    expr, factors, config_dict, cached = args
    config = SweepConfig(**config_dict, jobs=1)
    started = time.perf_counter()
    ring = evaluate(expr, order_cap=config.order_cap)
    group = make_group(factors)
    size = ring.order**group.order

    if cached is not None:
        wnn_ok = cached["wnn"]["ok"]
        wnn_witness = cached["wnn"]["witness"]
        wnc_ok = cached["wnc"]["ok"]
        wnc_witness = cached["wnc"]["witness"]
    else:
        view = group_ring(ring, group, cap=config.max_groupring_order)
        wnn = is_weakly_nil_neat_definitional(view.ring, cap=config.ideal_cap)
        wnc = is_weakly_nil_clean_definitional(view.ring)
        wnn_ok = wnn.ok
        wnn_witness = None if wnn.witness is None else [int(v) for v in wnn.witness.key]
        wnc_ok = wnc.ok
        wnc_witness = None if wnc.witness is None else int(wnc.witness)

    theorem = classify.weakly_nil_neat_group_ring_predicate(ring, group)
    lemma = classify.weakly_nil_clean_group_ring_predicate(ring, group)
    return {
        "ring": ring.label,
        "group": group.label,
        "order": size,
        "wnn_definitional": bool(wnn_ok),
        "wnn_witness": wnn_witness,
        "theorem_condition": theorem.condition,
        "theorem_predicate": bool(theorem.holds),
        "agreement": bool(wnn_ok) == bool(theorem.holds),
        "wnc_definitional": bool(wnc_ok),
        "wnc_witness": wnc_witness,
        "lemma_condition": lemma.condition,
        "lemma_predicate": bool(lemma.holds),
        "lemma_agreement": bool(wnc_ok) == bool(lemma.holds),
        "from_cache": cached is not None,  # popped before reporting
        "wall_ms": round((time.perf_counter() - started) * 1000.0, 3),
    }


@dataclass
class SweepReport:
    version: str
    config: dict
    records: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def all_agree(self) -> bool:
        return all(r["agreement"] and r["lemma_agreement"] for r in self.records)

    def jsonl_lines(self) -> list[str]:
        import json

        lines = [json.dumps(r, sort_keys=True) for r in self.records]
        footer = {
            "summary": self.summary,
            "version": self.version,
            "config": self.config,
        }
        lines.append(json.dumps(footer, sort_keys=True))
        return lines


def run_sweep(config: SweepConfig, *, cache: VerdictCache | None = None) -> SweepReport:
    config.validate()
    tasks = []
    config_dict = config.to_dict()
    for expr in ring_catalog(config):
        for group in group_catalog(config.max_group_order):
            base_order = _expr_order(expr)
            if base_order**group.order > config.max_groupring_order:
                continue
            key = f"GR({canonical_label(expr)}, {group.label})"
            cached = cache.get(key) if cache is not None else None
            tasks.append((key, (expr, group.factors, config_dict, cached)))

    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            records = list(pool.map(_evaluate_pair, (args for _, args in tasks)))
    else:
        records = [_evaluate_pair(args) for _, args in tasks]

    for (key, _), record in zip(tasks, records):
        was_cached = record.pop("from_cache")
        if cache is not None and not was_cached:
            cache.put(
                key,
                {
                    "wnn": {"ok": record["wnn_definitional"], "witness": record["wnn_witness"]},
                    "wnc": {"ok": record["wnc_definitional"], "witness": record["wnc_witness"]},
                },
            )

    records.sort(key=lambda r: (r["order"], r["ring"], r["group"]))
    disagreements = [r for r in records if not (r["agreement"] and r["lemma_agreement"])]
    conditions: dict[str, int] = {}
    for r in records:
        if r["theorem_condition"] is not None:
            conditions[str(r["theorem_condition"])] = conditions.get(str(r["theorem_condition"]), 0) + 1
    summary = {
        "pairs": len(records),
        "agreements": len(records) - len(disagreements),
        "disagreements": len(disagreements),
        "theorem_condition_counts": conditions,
        "weakly_nil_neat_count": sum(1 for r in records if r["wnn_definitional"]),
    }
    return SweepReport(version=__version__, config=config_dict, records=records, summary=summary)


def _expr_order(expr: RingExpr) -> int:
    if isinstance(expr, ZmodExpr):
        return expr.n
    if isinstance(expr, ProductExpr):
        return _expr_order(expr.left) * _expr_order(expr.right)
    raise TypeError(f"catalog expressions are Zmod and products only, got {expr!r}")
