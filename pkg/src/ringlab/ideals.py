"""Ideals, quotients and radicals of table rings.

The whole module is brute force by design: principal ideals are columns
of the multiplication table, arbitrary ideals are join-closures of
principal ones, maximality is decided by the quotient-is-a-field test,
and the Jacobson radical is a literal intersection of maximal ideals.
Everything is deterministic; ideal lists are always sorted by size and
then lexicographically by member list.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

from .rings import (
    DEFAULT_ORDER_CAP,
    CapExceeded,
    RingHom,
    RingTable,
    element_classes,
)

#: Default cap on the ring order for full ideal-lattice enumeration.
DEFAULT_IDEAL_CAP = 1024

#: Radicals only need maximal ideals and are allowed up to the global cap.
DEFAULT_RADICAL_CAP = DEFAULT_ORDER_CAP


class IdealSet:
    """A subset of a ring's indices closed under + and ambient *."""

    __slots__ = ("ring", "members")

    def __init__(self, ring: RingTable, members, *, validate: bool = True):
        if isinstance(members, np.ndarray):
            arr = np.unique(members.astype(np.int64))
        else:
            arr = np.unique(np.fromiter(members, dtype=np.int64)) if members else np.empty(0, dtype=np.int64)
        if arr.size == 0:
            arr = np.array([ring.zero], dtype=np.int64)
        if arr.min() < 0 or arr.max() >= ring.order:
            raise ValueError("ideal member index out of range")
        if validate:
            _check_ideal(ring, arr)
        self.ring = ring
        self.members = arr
        arr.setflags(write=False)

    def __len__(self) -> int:
        return int(self.members.size)

    def __contains__(self, index: int) -> bool:
        return bool(np.isin(index, self.members))

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(map(int, self.members))

    @property
    def is_zero(self) -> bool:
        return len(self) == 1

    @property
    def is_whole(self) -> bool:
        return len(self) == self.ring.order

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IdealSet)
            and other.ring is self.ring
            and np.array_equal(other.members, self.members)
        )

    def __hash__(self) -> int:
        return hash((id(self.ring), self.members.tobytes()))

    def __repr__(self) -> str:
        inner = ",".join(map(str, self.key)) if len(self) <= 12 else f"{len(self)} elements"
        return f"IdealSet({self.ring.label}, {{{inner}}})"


def _check_ideal(ring: RingTable, members: np.ndarray) -> None:
    if ring.zero not in members:
        raise ValueError("ideal must contain zero")
    sums = ring.add[np.ix_(members, members)]
    if not np.isin(sums, members).all():
        raise ValueError("set is not closed under addition")
    prods = ring.mul[:, members]
    if not np.isin(prods, members).all():
        raise ValueError("set is not closed under ambient multiplication")


def _additive_closure(ring: RingTable, seed: np.ndarray) -> np.ndarray:
    """Close a set of indices under addition by repeated squaring."""
    s = np.unique(np.append(seed, ring.zero))
    while True:
        t = np.unique(ring.add[np.ix_(s, s)])
        if t.size == s.size:
            return s
        s = t


def ideal_generated(ring: RingTable, gens, *, validate: bool = True) -> IdealSet:
    """Least ideal containing ``gens``.

    Since the ring is commutative with 1, this is the additive closure
    of all multiples ``r*g``; no further multiplication pass is needed.
    """
    gens = np.unique(np.fromiter(gens, dtype=np.int64)) if not isinstance(gens, np.ndarray) else np.unique(gens.astype(np.int64))
    if gens.size and (gens.min() < 0 or gens.max() >= ring.order):
        raise ValueError("generator index out of range")
    if gens.size == 0:
        return IdealSet(ring, [ring.zero], validate=validate)
    multiples = np.unique(ring.mul[:, gens])
    return IdealSet(ring, _additive_closure(ring, multiples), validate=validate)


def minimal_generators(ideal: IdealSet) -> list[int]:
    """Greedy small generating set, used for quotient labels."""
    ring = ideal.ring
    if ideal.is_zero:
        return [ring.zero]
    gens: list[int] = []
    span = np.array([ring.zero], dtype=np.int64)
    for x in ideal.key:
        if x in span:
            continue
        gens.append(int(x))
        span = ideal_generated(ring, gens, validate=False).members
        if span.size == len(ideal):
            break
    return gens


def enumerate_ideals(ring: RingTable, *, cap: int = DEFAULT_IDEAL_CAP) -> list[IdealSet]:
    """The complete ideal lattice.

    Starts from all principal ideals (columns of the multiplication
    table) and closes under pairwise joins ``I + J`` until no new ideal
    appears.  Every ideal of a finite ring is a finite sum of principal
    ideals, so the fixpoint is the full lattice.
    """
    n = ring.order
    if n > cap:
        raise CapExceeded(f"ideal enumeration needs order <= {cap}, got {n}")
    known: dict[bytes, np.ndarray] = {}
    frontier: list[np.ndarray] = []
    for x in range(n):
        members = np.unique(ring.mul[:, x]).astype(np.int64)
        key = members.tobytes()
        if key not in known:
            known[key] = members
            frontier.append(members)
    while frontier:
        fresh: list[np.ndarray] = []
        snapshot = list(known.values())
        for i_members in frontier:
            for j_members in snapshot:
                small, large = (
                    (i_members, j_members)
                    if i_members.size <= j_members.size
                    else (j_members, i_members)
                )
                if np.isin(small, large, assume_unique=True).all():
                    continue  # join is `large`, already known
                joined = np.unique(ring.add[np.ix_(small, large)]).astype(np.int64)
                key = joined.tobytes()
                if key not in known:
                    known[key] = joined
                    fresh.append(joined)
        frontier = fresh
    ordered = sorted(known.values(), key=lambda m: (m.size, tuple(m)))
    return [IdealSet(ring, m, validate=False) for m in ordered]


def _quotient_tables(ring: RingTable, ideal: IdealSet):
    """Coset reps and quotient tables; shared by quotient_ring and the
    maximality test."""
    members = ideal.members
    rep = np.asarray(ring.add[:, members]).min(axis=1).astype(np.int64)
    class_reps = np.unique(rep)
    proj = np.searchsorted(class_reps, rep)
    q_add = proj[ring.add[np.ix_(class_reps, class_reps)]]
    q_mul = proj[ring.mul[np.ix_(class_reps, class_reps)]]
    return class_reps, proj, q_add, q_mul


def _quotient_ring(ring: RingTable, ideal: IdealSet) -> tuple[RingTable, np.ndarray]:
    """Quotient ring plus the raw projection vector (no hom object)."""
    if ideal.is_whole:
        raise ValueError("quotient by the whole ring is the zero ring; callers treat it as vacuous")
    class_reps, proj, q_add, q_mul = _quotient_tables(ring, ideal)
    gens = minimal_generators(ideal)
    label = f"{ring.label}/({','.join(map(str, gens))})"
    quot = RingTable(
        q_add,
        q_mul,
        zero=int(proj[ring.zero]),
        one=int(proj[ring.one]),
        label=label,
    )
    return quot, proj


def quotient_ring(ring: RingTable, ideal: IdealSet) -> tuple[RingTable, RingHom]:
    """Quotient by a proper ideal, with the verified projection hom."""
    quot, proj = _quotient_ring(ring, ideal)
    return quot, RingHom(ring, quot, proj)


def _is_field_table(add: np.ndarray, mul: np.ndarray, zero: int, one: int) -> bool:
    n = add.shape[0]
    if n < 2:
        return False
    invertible = (mul == one).any(axis=1)
    invertible[zero] = True
    return bool(invertible.all())


def is_field(ring: RingTable) -> bool:
    """Every nonzero element is a unit."""
    return _is_field_table(ring.add, ring.mul, ring.zero, ring.one)


def maximal_ideals(ring: RingTable, *, cap: int | None = None) -> list[IdealSet]:
    """Proper ideals whose quotient is a field, in canonical order."""
    eff = DEFAULT_RADICAL_CAP if cap is None else cap
    out = []
    for ideal in enumerate_ideals(ring, cap=eff):
        if ideal.is_whole:
            continue
        if ideal.is_zero:
            if is_field(ring):
                out.append(ideal)
            continue
        index = ring.order // len(ideal)
        if index < 2:
            continue
        _, proj, q_add, q_mul = _quotient_tables(ring, ideal)
        if _is_field_table(q_add, q_mul, int(proj[ring.zero]), int(proj[ring.one])):
            out.append(ideal)
    return out


def is_prime_ideal(ring: RingTable, ideal: IdealSet) -> bool:
    """True iff a, b outside the ideal implies ab outside the ideal."""
    if not isinstance(ideal, IdealSet) or ideal.ring is not ring:
        raise ValueError("expected an ideal of this ring")
    _check_ideal(ring, ideal.members)
    if ideal.is_whole:
        raise ValueError("the whole ring is not a candidate prime ideal")
    comp = np.setdiff1d(np.arange(ring.order), ideal.members, assume_unique=False)
    prods = ring.mul[np.ix_(comp, comp)]
    return not np.isin(prods, ideal.members).any()


def nilradical(ring: RingTable) -> IdealSet:
    """The set of nilpotents, re-checked for ideal closure.

    Commutativity guarantees closure, so a failure here signals a
    corrupted table and raises ``ValueError``.
    """
    nil = sorted(element_classes(ring).nilpotents)
    return IdealSet(ring, nil, validate=True)


def jacobson_radical(ring: RingTable, *, cap: int | None = None) -> IdealSet:
    """Intersection of all maximal ideals."""
    maxima = maximal_ideals(ring, cap=cap)
    members = reduce(np.intersect1d, (m.members for m in maxima))
    return IdealSet(ring, members, validate=True)
