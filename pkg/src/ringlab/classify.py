"""Deciders for the nil-clean family of ring classes.

Four properties of a finite commutative ring R:

* nil-clean: every element is nilpotent + idempotent;
* weakly nil-clean: every element is nilpotent + idempotent or
  nilpotent - idempotent;
* nil-neat / weakly nil-neat: every proper homomorphic image (quotient
  by a nonzero ideal) is nil-clean / weakly nil-clean.  The quotient by
  the whole ring is the zero ring and counts as vacuously nil-clean.

Each property gets a definitional brute-force decider (scan elements,
or scan quotients over the whole ideal lattice) and a structural
criterion in terms of radicals and residue fields.  The two must agree
on every ring; a mismatch raises :class:`DisagreementError`.

The group-ring predicates decide the same properties for RG directly
from (R, G) without building RG, so sweeping them against the
definitional deciders on the constructed group ring is an exhaustive
desk-scale check of the classification theorems they implement.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple, Optional

import numpy as np

from .group_algebra import AbelianGroup
from .ideals import (
    DEFAULT_IDEAL_CAP,
    IdealSet,
    _quotient_ring,
    enumerate_ideals,
    is_field,
    maximal_ideals,
    nilradical,
)
from .rings import (
    CapExceeded,
    DisagreementError,
    RingHom,
    RingTable,
    additive_orders,
    characteristic,
    element_classes,
)


class ElementVerdict(NamedTuple):
    ok: bool
    witness: Optional[int]  # least element index with no decomposition


class QuotientVerdict(NamedTuple):
    ok: bool
    witness: Optional[IdealSet]  # earliest failing ideal in lattice order


def _class_arrays(ring: RingTable) -> tuple[np.ndarray, np.ndarray]:
    classes = element_classes(ring)
    nil = np.fromiter(sorted(classes.nilpotents), dtype=np.int64)
    idem = np.fromiter(sorted(classes.idempotents), dtype=np.int64)
    return nil, idem


def _element_verdict(ring: RingTable, *, allow_difference: bool) -> ElementVerdict:
    nil, idem = _class_arrays(ring)
    reach = np.unique(ring.add[np.ix_(nil, idem)])
    if allow_difference:
        neg_idem = ring.neg[idem]
        reach = np.union1d(reach, np.unique(ring.add[np.ix_(nil, neg_idem)]))
    missing = np.setdiff1d(np.arange(ring.order), reach, assume_unique=True)
    if missing.size == 0:
        return ElementVerdict(True, None)
    return ElementVerdict(False, int(missing[0]))


def is_nil_clean_definitional(ring: RingTable) -> ElementVerdict:
    """Scan for an element outside nilpotents + idempotents."""
    return _element_verdict(ring, allow_difference=False)


def is_weakly_nil_clean_definitional(ring: RingTable) -> ElementVerdict:
    """Scan for an element outside (N + E) union (N - E)."""
    return _element_verdict(ring, allow_difference=True)


def _quotient_verdict(ring: RingTable, *, weak: bool, cap: int) -> QuotientVerdict:
    check = is_weakly_nil_clean_definitional if weak else is_nil_clean_definitional
    for ideal in enumerate_ideals(ring, cap=cap):
        if ideal.is_zero:
            continue  # proper image means quotient by a nonzero ideal
        if ideal.is_whole:
            continue  # zero ring, vacuously fine
        quot, _ = _quotient_ring(ring, ideal)
        if not check(quot).ok:
            return QuotientVerdict(False, ideal)
    return QuotientVerdict(True, None)


def is_nil_neat_definitional(ring: RingTable, *, cap: int = DEFAULT_IDEAL_CAP) -> QuotientVerdict:
    """Every quotient by a nonzero proper ideal must be nil-clean."""
    return _quotient_verdict(ring, weak=False, cap=cap)


def is_weakly_nil_neat_definitional(ring: RingTable, *, cap: int = DEFAULT_IDEAL_CAP) -> QuotientVerdict:
    """Every quotient by a nonzero proper ideal must be weakly nil-clean."""
    return _quotient_verdict(ring, weak=True, cap=cap)


@dataclass(frozen=True)
class StructureTag:
    """Shape of a ring relative to {boolean, Z3, boolean x Z3, field}.

    ``tag`` resolves overlaps (e.g. Z2 is boolean and a field) with the
    fixed display priority Boolean < Z3 < BooleanTimesZ3 < Field <
    Other.  Predicates must consume the raw booleans, never ``tag``.
    """

    tag: str
    is_boolean: bool
    is_z3: bool
    is_boolean_times_z3: bool
    is_field: bool
    split_idempotent: Optional[int]

    @property
    def in_weakly_nil_clean_shape(self) -> bool:
        return self.is_boolean or self.is_z3 or self.is_boolean_times_z3


def recognize_structure(ring: RingTable) -> StructureTag:
    """Classify a ring as boolean / Z3 / boolean x Z3 / field / other.

    The boolean-times-Z3 search walks idempotents e not in {0, 1} in
    ascending index order and takes the first e with eR boolean (every
    element idempotent; e is automatically its identity) and (1-e)R of
    order exactly 3.  The Peirce decomposition x -> (ex, (1-e)x) then
    splits the ring, so e is recorded as reproducible evidence.
    """
    idx = np.arange(ring.order)
    boolean = bool((ring.mul.diagonal() == idx).all())
    z3 = ring.order == 3
    field = is_field(ring)
    split = None
    idempotents = sorted(int(i) for i in idx[ring.mul.diagonal() == idx])
    for e in idempotents:
        if e in (ring.zero, ring.one):
            continue
        e_part = np.unique(ring.mul[:, e])
        if not (ring.mul[e_part, e_part] == e_part).all():
            continue
        f = int(ring.add[ring.one, ring.neg[e]])
        f_part = np.unique(ring.mul[:, f])
        if f_part.size == 3:
            split = e
            break
    b_times_z3 = split is not None
    for tag, hit in (
        ("Boolean", boolean),
        ("Z3", z3),
        ("BooleanTimesZ3", b_times_z3),
        ("Field", field),
    ):
        if hit:
            break
    else:
        tag = "Other"
    return StructureTag(tag, boolean, z3, b_times_z3, field, split)


def _radical_data(ring: RingTable, radical_cap: Optional[int]):
    maxima = maximal_ideals(ring, cap=radical_cap)
    residue_orders = sorted(ring.order // len(m) for m in maxima)
    jac_members = reduce(np.intersect1d, (m.members for m in maxima))
    jac = IdealSet(ring, jac_members, validate=False)
    return maxima, residue_orders, jac


def is_nil_clean_criterion(ring: RingTable) -> bool:
    """Structural test: R is nil-clean iff R/N(R) is boolean."""
    quot, _ = _quotient_ring(ring, nilradical(ring))
    return recognize_structure(quot).is_boolean


def is_nil_neat_criterion(ring: RingTable, *, radical_cap: Optional[int] = None) -> bool:
    """Structural test for finite rings: a field, or R/J(R) boolean.

    With J nonzero this makes R/J a proper image that must be nil-clean
    (hence boolean, being semiprimitive); with J zero the ring is a
    product of residue fields and every proper subproduct must be
    boolean, which forces all factors to be Z2 unless there is only one
    factor.  Cross-checked against the definitional decider in tests.
    """
    if is_field(ring):
        return True
    _, _, jac = _radical_data(ring, radical_cap)
    quot, _ = _quotient_ring(ring, jac)
    return recognize_structure(quot).is_boolean


class WeaklyNilCleanCriterion(NamedTuple):
    verdict: bool
    residue_fields_ok: bool      # all residue fields Z2, at most one Z3
    mod_nilradical_ok: bool      # R/N boolean, Z3 or boolean x Z3
    mod_jacobson_ok: bool        # J nil and same shape for R/J


def weakly_nil_clean_criterion(
    ring: RingTable, *, radical_cap: Optional[int] = None
) -> WeaklyNilCleanCriterion:
    """Three independent structural tests, which must agree.

    Finite rings are zero-dimensional, so that hypothesis is free; the
    three sub-checks exercise independent machinery (residue fields,
    the nilpotent scan, the maximal-ideal intersection) and a mismatch
    raises :class:`DisagreementError`.
    """
    _, residue_orders, jac = _radical_data(ring, radical_cap)
    by_residues = all(s in (2, 3) for s in residue_orders) and residue_orders.count(3) <= 1

    nil = nilradical(ring)
    quot_n, _ = _quotient_ring(ring, nil)
    by_nilradical = recognize_structure(quot_n).in_weakly_nil_clean_shape

    nil_set = set(nil.key)
    jac_is_nil = all(j in nil_set for j in jac.key)
    quot_j, _ = _quotient_ring(ring, jac)
    by_jacobson = jac_is_nil and recognize_structure(quot_j).in_weakly_nil_clean_shape

    if not (by_residues == by_nilradical == by_jacobson):
        raise DisagreementError(
            f"weakly-nil-clean sub-checks disagree on {ring.label}: "
            f"residues={by_residues} mod-N={by_nilradical} mod-J={by_jacobson}"
        )
    return WeaklyNilCleanCriterion(by_residues, by_residues, by_nilradical, by_jacobson)


def weakly_nil_neat_criterion(ring: RingTable, *, radical_cap: Optional[int] = None) -> bool:
    """Structural test: field, or R/J in weakly-nil-clean shape when
    J != 0, or (J = 0) a product of residue fields that are all Z2 with
    at most one Z3, or exactly Z3 x Z3.

    For a finite semiprimitive commutative ring the subdirect embedding
    into its residue fields is onto, so the J = 0 branch enumerates the
    proper sub-products directly: two Z3 factors survive only with no
    other factor present, since quotienting anything else away would
    leave Z3 x Z3, which is not weakly nil-clean.  Every nonzero prime
    ideal of a finite ring is maximal, so that clause holds
    automatically and is asserted by property tests rather than
    filtered on.
    """
    if is_field(ring):
        return True
    _, residue_orders, jac = _radical_data(ring, radical_cap)
    if len(jac) > 1:
        quot, _ = _quotient_ring(ring, jac)
        return recognize_structure(quot).in_weakly_nil_clean_shape
    if not all(s in (2, 3) for s in residue_orders):
        return False
    return residue_orders.count(3) <= 1 or residue_orders == [3, 3]


class PredicateResult(NamedTuple):
    holds: bool
    condition: Optional[int]  # which arm of the classification matched


def _three_is_nilpotent(ring: RingTable) -> bool:
    """Whether the element 3*1 of the ring is nilpotent."""
    three = ring.int_mul(3, ring.one)
    return three in element_classes(ring).nilpotents


def nil_clean_group_ring_predicate(ring: RingTable, group: AbelianGroup) -> bool:
    """RG is nil-clean iff G is a 2-group and R is nil-clean."""
    return group.is_p_group(2) and is_nil_clean_criterion(ring)


def weakly_nil_clean_group_ring_predicate(
    ring: RingTable, group: AbelianGroup, *, radical_cap: Optional[int] = None
) -> PredicateResult:
    """RG weakly nil-clean iff exactly one of three conditions holds.

    (1) R nil-clean and G a non-trivial 2-group;
    (2) R weakly nil-clean with 3 nilpotent in R and G a non-trivial
        3-group;
    (3) R weakly nil-clean and G trivial.
    """
    nc = is_nil_clean_criterion(ring)
    wnc = weakly_nil_clean_criterion(ring, radical_cap=radical_cap).verdict
    nontrivial = not group.is_trivial()
    conditions = {
        1: nc and nontrivial and group.is_p_group(2),
        2: wnc and _three_is_nilpotent(ring) and nontrivial and group.is_p_group(3),
        3: wnc and group.is_trivial(),
    }
    matched = [k for k, hit in conditions.items() if hit]
    if len(matched) > 1:
        raise DisagreementError(
            f"conditions {matched} matched simultaneously for ({ring.label}, {group.label})"
        )
    return PredicateResult(bool(matched), matched[0] if matched else None)


def nil_neat_group_ring_predicate(
    ring: RingTable, group: AbelianGroup, *, ideal_cap: int = DEFAULT_IDEAL_CAP
) -> bool:
    """RG nil-neat iff G trivial and R nil-neat, or G a non-trivial
    2-group and R nil-clean."""
    if group.is_trivial():
        return is_nil_neat_definitional(ring, cap=ideal_cap).ok
    return group.is_p_group(2) and is_nil_clean_criterion(ring)


def weakly_nil_neat_group_ring_predicate(
    ring: RingTable, group: AbelianGroup, *, radical_cap: Optional[int] = None
) -> PredicateResult:
    """RG weakly nil-neat iff exactly one of four conditions holds.

    (1) G trivial and R weakly nil-neat;
    (2) G a non-trivial 2-group and R nil-clean;
    (3) G a non-trivial 3-group and R weakly nil-clean with 3 nilpotent
        in R;
    (4) G cyclic of order 2 and R the ring of order 3.
    """
    nc = is_nil_clean_criterion(ring)
    wnc = weakly_nil_clean_criterion(ring, radical_cap=radical_cap).verdict
    nontrivial = not group.is_trivial()
    conditions = {
        1: group.is_trivial() and weakly_nil_neat_criterion(ring, radical_cap=radical_cap),
        2: nontrivial and group.is_p_group(2) and nc,
        3: nontrivial and group.is_p_group(3) and wnc and _three_is_nilpotent(ring),
        4: group.order == 2 and ring.order == 3,
    }
    matched = [k for k, hit in conditions.items() if hit]
    if len(matched) > 1:
        raise DisagreementError(
            f"conditions {matched} matched simultaneously for ({ring.label}, {group.label})"
        )
    return PredicateResult(bool(matched), matched[0] if matched else None)


def _element_profiles(ring: RingTable) -> list[tuple[int, bool, bool, bool]]:
    orders = additive_orders(ring)
    classes = element_classes(ring)
    return [
        (
            int(orders[x]),
            x in classes.nilpotents,
            x in classes.idempotents,
            x in classes.units,
        )
        for x in range(ring.order)
    ]


def ring_isomorphic(
    left: RingTable, right: RingTable, *, cap: int = 256
) -> tuple[bool, Optional[RingHom]]:
    """Backtracking search for a bijective ring homomorphism.

    Pruned by cheap invariants first (order, characteristic, per-element
    profiles of additive order / nilpotency / idempotency / invertibility,
    ideal count), then extends a partial map generator by generator with
    full closure propagation, so most of the table is forced rather than
    guessed.
    """
    if left.order != right.order:
        return False, None
    n = left.order
    if n > cap:
        raise CapExceeded(f"isomorphism search capped at order {cap}, got {n}")
    if characteristic(left) != characteristic(right):
        return False, None
    prof_l = _element_profiles(left)
    prof_r = _element_profiles(right)
    if sorted(prof_l) != sorted(prof_r):
        return False, None
    if len(enumerate_ideals(left, cap=n)) != len(enumerate_ideals(right, cap=n)):
        return False, None

    candidates = {
        x: [y for y in range(n) if prof_r[y] == prof_l[x]] for x in range(n)
    }

    def propagate(fmap: np.ndarray, used: np.ndarray, queue: list[int]) -> bool:
        while queue:
            a = queue.pop()
            mapped = np.flatnonzero(fmap >= 0)
            for table_l, table_r in ((left.add, right.add), (left.mul, right.mul)):
                xs = table_l[a, mapped]
                ys = table_r[fmap[a], fmap[mapped]]
                for x, y in zip(map(int, xs), map(int, ys)):
                    fx = fmap[x]
                    if fx == -1:
                        if used[y]:
                            return False
                        fmap[x] = y
                        used[y] = True
                        queue.append(x)
                    elif fx != y:
                        return False
        return True

    def backtrack(fmap: np.ndarray, used: np.ndarray) -> Optional[np.ndarray]:
        unmapped = np.flatnonzero(fmap < 0)
        if unmapped.size == 0:
            return fmap
        x = int(unmapped[0])
        for y in candidates[x]:
            if used[y]:
                continue
            fmap2 = fmap.copy()
            used2 = used.copy()
            fmap2[x] = y
            used2[y] = True
            if propagate(fmap2, used2, [x]):
                found = backtrack(fmap2, used2)
                if found is not None:
                    return found
        return None

    fmap = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    fmap[left.zero] = right.zero
    fmap[left.one] = right.one
    used[right.zero] = used[right.one] = True
    if not propagate(fmap, used, [left.zero, left.one]):
        return False, None
    found = backtrack(fmap, used)
    if found is None:
        return False, None
    return True, RingHom(left, right, found)


@dataclass
class PropertyVerdict:
    value: bool
    method: str  # "definitional", "criterion" or "both"
    witness: Optional[object] = None  # element index or IdealSet for negatives

    def witness_json(self):
        if self.witness is None:
            return None
        if isinstance(self.witness, IdealSet):
            return [int(v) for v in self.witness.key]
        return int(self.witness)


@dataclass
class ClassificationReport:
    """Per-ring verdicts for the four properties, with witnesses."""

    label: str
    order: int
    nil_clean: PropertyVerdict
    weakly_nil_clean: PropertyVerdict
    nil_neat: PropertyVerdict
    weakly_nil_neat: PropertyVerdict

    def verdicts(self) -> dict[str, PropertyVerdict]:
        return {
            "nil_clean": self.nil_clean,
            "weakly_nil_clean": self.weakly_nil_clean,
            "nil_neat": self.nil_neat,
            "weakly_nil_neat": self.weakly_nil_neat,
        }

    def to_dict(self) -> dict:
        return {
            "ring": self.label,
            "order": self.order,
            "verdicts": {
                name: {
                    "value": v.value,
                    "method": v.method,
                    "witness": v.witness_json(),
                }
                for name, v in self.verdicts().items()
            },
        }


def classify_ring(
    ring: RingTable,
    *,
    method: str = "both",
    ideal_cap: int = DEFAULT_IDEAL_CAP,
    radical_cap: Optional[int] = None,
) -> ClassificationReport:
    """Run the requested decision methods and assemble a report.

    With ``method="both"`` the definitional and criterion answers are
    compared and any mismatch raises :class:`DisagreementError`; the
    reported witnesses always come from the definitional scans.
    """
    if method not in ("definitional", "criterion", "both"):
        raise ValueError(f"unknown method {method!r}")
    run_def = method in ("definitional", "both")
    run_crit = method in ("criterion", "both")
    if run_def and ring.order > ideal_cap:
        raise CapExceeded(
            f"definitional classification needs order <= {ideal_cap}, got {ring.order}"
        )

    verdicts: dict[str, PropertyVerdict] = {}
    definitional = {}
    if run_def:
        definitional = {
            "nil_clean": is_nil_clean_definitional(ring),
            "weakly_nil_clean": is_weakly_nil_clean_definitional(ring),
            "nil_neat": is_nil_neat_definitional(ring, cap=ideal_cap),
            "weakly_nil_neat": is_weakly_nil_neat_definitional(ring, cap=ideal_cap),
        }
    criterion = {}
    if run_crit:
        criterion = {
            "nil_clean": is_nil_clean_criterion(ring),
            "weakly_nil_clean": weakly_nil_clean_criterion(ring, radical_cap=radical_cap).verdict,
            "nil_neat": is_nil_neat_criterion(ring, radical_cap=radical_cap),
            "weakly_nil_neat": weakly_nil_neat_criterion(ring, radical_cap=radical_cap),
        }

    for name in ("nil_clean", "weakly_nil_clean", "nil_neat", "weakly_nil_neat"):
        if run_def and run_crit and definitional[name].ok != criterion[name]:
            raise DisagreementError(
                f"{name}: definitional={definitional[name].ok} "
                f"criterion={criterion[name]} on {ring.label}"
            )
        if run_def:
            verdicts[name] = PropertyVerdict(
                value=definitional[name].ok,
                method="both" if run_crit else "definitional",
                witness=definitional[name].witness,
            )
        else:
            verdicts[name] = PropertyVerdict(value=criterion[name], method="criterion")

    report = ClassificationReport(ring.label, ring.order, **verdicts)
    _check_hierarchy(report)
    return report


def _check_hierarchy(report: ClassificationReport) -> None:
    v = {name: pv.value for name, pv in report.verdicts().items()}
    implications = (
        ("nil_clean", "weakly_nil_clean"),
        ("nil_clean", "nil_neat"),
        ("weakly_nil_clean", "weakly_nil_neat"),
        ("nil_neat", "weakly_nil_neat"),
    )
    for weak, strong in implications:
        if v[weak] and not v[strong]:
            raise DisagreementError(
                f"hierarchy violated on {report.label}: {weak} holds but {strong} does not"
            )
