"""Table-based kernel for finite commutative unital rings.

A ring here is a :class:`RingTable`: the elements are the indices
``0 .. order-1`` and addition / multiplication are dense Cayley tables
of indices.  Everything downstream (ideals, quotients, group rings,
classification) works purely on indices; labels are presentation-only
strings that re-parse through the expression grammar in
:mod:`ringlab.expr`.

Tables are numpy integer arrays made read-only after construction, so
instances are immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Default upper bound on the number of elements of any constructed ring.
DEFAULT_ORDER_CAP = 4096

_BLOCK = 1 << 22  # elements per chunk in table-sized scans


class RingLabError(Exception):
    """Base class for errors raised by ringlab."""


class CapExceeded(RingLabError):
    """A construction or brute-force scan exceeds the configured cap."""


class DisagreementError(RingLabError):
    """Two provably equivalent computations returned different answers.

    This never fires on a correct build; it signals a corrupted table or
    an implementation bug and maps to a dedicated CLI exit code.
    """


def _table_dtype(order: int) -> np.dtype:
    return np.dtype(np.int16 if order <= np.iinfo(np.int16).max else np.int32)


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class RingTable:
    """A finite commutative unital ring given by explicit index tables.

    Parameters
    ----------
    add, mul:
        Square integer tables; entry ``[i, j]`` is the index of the sum
        (product) of elements ``i`` and ``j``.
    zero, one:
        Indices of the additive and multiplicative identities.
    label:
        Canonical descriptor; re-parses through the expression grammar.
    check:
        Cheap structural sanity (shape, index range, order >= 2,
        ``one != zero``).  Pass ``False`` only to build deliberately
        broken tables for :func:`validate_ring_axioms`; full axiom
        checking always lives there, never here.
    """

    __slots__ = ("order", "add", "mul", "zero", "one", "label", "neg")

    def __init__(self, add, mul, zero: int, one: int, label: str, *, check: bool = True):
        add = np.asarray(add)
        mul = np.asarray(mul)
        if add.ndim != 2 or add.shape != mul.shape or add.shape[0] != add.shape[1]:
            raise ValueError("operation tables must be square and of equal shape")
        n = int(add.shape[0])
        dt = _table_dtype(n)
        add = add.astype(dt, copy=True)
        mul = mul.astype(dt, copy=True)
        zero = int(zero)
        one = int(one)
        if check:
            if n < 2:
                raise ValueError("rings of order < 2 are rejected: the identity must be non-zero")
            if not (0 <= zero < n and 0 <= one < n):
                raise ValueError("zero/one index out of range")
            if zero == one:
                raise ValueError("one must differ from zero")
            for name, t in (("add", add), ("mul", mul)):
                if t.size and (t.min() < 0 or t.max() >= n):
                    raise ValueError(f"{name} table entry out of range")
        self.order = n
        self.zero = zero
        self.one = one
        self.label = str(label)
        self.add = _readonly(add)
        self.mul = _readonly(mul)
        # additive inverse of i sits where row i of `add` hits zero
        self.neg = _readonly((add == zero).argmax(axis=1).astype(dt))

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"RingTable({self.label!r}, order={self.order})"

    def elem(self, index: int) -> "RingElem":
        return RingElem(self, index)

    def int_mul(self, k: int, x: int) -> int:
        """k-fold sum x + x + ... + x (k >= 0)."""
        acc = self.zero
        for _ in range(int(k)):
            acc = int(self.add[acc, x])
        return acc


@dataclass(frozen=True)
class RingElem:
    """An element of a specific ring, as (ring, index)."""

    ring: RingTable
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.ring.order:
            raise ValueError(f"element index {self.index} out of range for {self.ring!r}")

    def __str__(self) -> str:
        return f"{self.index}@{self.ring.label}"


@dataclass(frozen=True)
class ElementClasses:
    """The nilpotent, idempotent and unit index sets of a ring."""

    nilpotents: frozenset[int]
    idempotents: frozenset[int]
    units: frozenset[int]


def make_zmod(n: int, *, cap: int = DEFAULT_ORDER_CAP) -> RingTable:
    """The ring of integers modulo ``n``, labelled ``Z<n>``."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if n > cap:
        raise CapExceeded(f"order {n} exceeds cap {cap}")
    idx = np.arange(n)
    add = np.add.outer(idx, idx) % n
    mul = np.multiply.outer(idx, idx) % n
    return RingTable(add, mul, zero=0, one=1, label=f"Z{n}")


def direct_product(r: RingTable, s: RingTable, *, cap: int = DEFAULT_ORDER_CAP) -> RingTable:
    """Componentwise product ring on row-major pair indices ``i*|S| + j``.

    Row-major pairing makes the construction strictly associative at the
    index level, so labels like ``"Z2 x Z3 x Z2"`` are unambiguous.
    """
    n = r.order * s.order
    if n > cap:
        raise CapExceeded(f"product order {n} exceeds cap {cap}")
    ns = s.order
    idx = np.arange(n, dtype=np.int64)
    ir, js = idx // ns, idx % ns
    add = r.add[np.ix_(ir, ir)].astype(np.int64) * ns + s.add[np.ix_(js, js)]
    mul = r.mul[np.ix_(ir, ir)].astype(np.int64) * ns + s.mul[np.ix_(js, js)]
    return RingTable(
        add,
        mul,
        zero=r.zero * ns + s.zero,
        one=r.one * ns + s.one,
        label=f"{r.label} x {s.label}",
    )


def _nilpotent_mask(r: RingTable) -> np.ndarray:
    """Boolean mask of elements with x^k = 0 for some k <= order.

    Iterates the power vector x -> x^(k+1); the sequence of vectors
    repeats within ``order`` steps, so we stop at the first repeat or at
    k = order, whichever comes first.
    """
    n = r.order
    idx = np.arange(n)
    cur = idx.copy()
    nil = cur == r.zero
    seen = {cur.tobytes()}
    for _ in range(n - 1):
        cur = r.mul[cur, idx]
        nil |= cur == r.zero
        key = cur.tobytes()
        if key in seen:
            break
        seen.add(key)
    return nil


def element_classes(r: RingTable) -> ElementClasses:
    """Scan the tables for nilpotents, idempotents and units."""
    n = r.order
    idx = np.arange(n)
    nil = _nilpotent_mask(r)
    idem = r.mul.diagonal() == idx
    units = (r.mul == r.one).any(axis=1)
    classes = ElementClasses(
        nilpotents=frozenset(map(int, idx[nil])),
        idempotents=frozenset(map(int, idx[idem])),
        units=frozenset(map(int, idx[units])),
    )
    # sanity on any valid ring; failures indicate a corrupted table
    assert r.zero in classes.nilpotents
    assert r.zero in classes.idempotents and r.one in classes.idempotents
    assert r.one in classes.units
    assert not classes.nilpotents & classes.units
    assert classes.nilpotents & classes.idempotents == {r.zero}
    return classes


def characteristic(r: RingTable) -> int:
    """Least k >= 1 with k * 1 = 0."""
    acc = r.one
    k = 1
    while acc != r.zero:
        acc = int(r.add[acc, r.one])
        k += 1
    return k


def additive_orders(r: RingTable) -> np.ndarray:
    """Order of each element in the additive group."""
    n = r.order
    idx = np.arange(n)
    out = np.zeros(n, dtype=np.int64)
    cur = idx.copy()
    for k in range(1, n + 1):
        hit = (cur == r.zero) & (out == 0)
        out[hit] = k
        if (out != 0).all():
            break
        cur = r.add[cur, idx]
    return out


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple


@dataclass
class ValidationReport:
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __repr__(self) -> str:
        if self.ok:
            return "ValidationReport(ok)"
        body = "; ".join(f"{v.axiom} at {v.witness}" for v in self.violations)
        return f"ValidationReport({body})"


def _first_bad_triple(bad: np.ndarray, row_offset: int) -> tuple:
    a, b, c = np.argwhere(bad)[0]
    return (int(a) + row_offset, int(b), int(c))


def validate_ring_axioms(r: RingTable) -> ValidationReport:
    """Exhaustively check every commutative-unital-ring axiom.

    Violations are report content, not exceptions; each violated axiom
    is listed once with a witnessing element/pair/triple.  Associativity
    and distributivity are O(n^3) and checked in row blocks to bound
    memory.
    """
    out: list[Violation] = []
    add, mul, n = r.add, r.mul, r.order

    if n < 2 or r.zero == r.one:
        out.append(Violation("identity distinct from zero (order >= 2)", ()))
    in_range = True
    for name, t in (("+", add), ("*", mul)):
        if t.min() < 0 or t.max() >= n:
            bad = np.argwhere((t < 0) | (t >= n))[0]
            out.append(Violation(f"totality of {name}", (int(bad[0]), int(bad[1]))))
            in_range = False
    if not in_range:
        return ValidationReport(out)  # index-based checks would be garbage

    for name, t in (("+", add), ("*", mul)):
        if not np.array_equal(t, t.T):
            bad = np.argwhere(t != t.T)[0]
            out.append(Violation(f"commutativity of {name}", (int(bad[0]), int(bad[1]))))

    idx = np.arange(n)
    if not np.array_equal(add[r.zero], idx):
        a = int(np.argwhere(add[r.zero] != idx)[0][0])
        out.append(Violation("zero is the additive identity", (a,)))
    no_inv = ~(add == r.zero).any(axis=1)
    if no_inv.any():
        out.append(Violation("additive inverses exist", (int(idx[no_inv][0]),)))
    if not np.array_equal(mul[r.one], idx):
        a = int(np.argwhere(mul[r.one] != idx)[0][0])
        out.append(Violation("one is the multiplicative identity", (a,)))

    block = max(1, _BLOCK // max(1, n * n))
    assoc_add = assoc_mul = distrib = None
    for a0 in range(0, n, block):
        a1 = min(n, a0 + block)
        rows_a = add[a0:a1]
        rows_m = mul[a0:a1]
        if assoc_add is None:
            bad = add[rows_a, :] != rows_a[:, add]  # (a+b)+c vs a+(b+c)
            if bad.any():
                assoc_add = _first_bad_triple(bad, a0)
        if assoc_mul is None:
            bad = mul[rows_m, :] != rows_m[:, mul]
            if bad.any():
                assoc_mul = _first_bad_triple(bad, a0)
        if distrib is None:
            lhs = rows_m[:, add]  # a*(b+c)
            rhs = add[rows_m[:, :, None], rows_m[:, None, :]]  # a*b + a*c
            bad = lhs != rhs
            if bad.any():
                distrib = _first_bad_triple(bad, a0)
        if assoc_add is not None and assoc_mul is not None and distrib is not None:
            break
    if assoc_add is not None:
        out.append(Violation("associativity of +", assoc_add))
    if assoc_mul is not None:
        out.append(Violation("associativity of *", assoc_mul))
    if distrib is not None:
        out.append(Violation("distributivity", distrib))
    return ValidationReport(out)


class RingHom:
    """A total map between two rings, checked to preserve +, * and 1."""

    __slots__ = ("domain", "codomain", "map")

    def __init__(self, domain: RingTable, codomain: RingTable, map_, *, check: bool = True):
        m = np.asarray(map_).astype(np.int64, copy=True)
        if m.shape != (domain.order,):
            raise ValueError("hom map must assign an image to every domain element")
        if m.min() < 0 or m.max() >= codomain.order:
            raise ValueError("hom image index out of range")
        if check:
            if int(m[domain.one]) != codomain.one:
                raise ValueError("map does not send 1 to 1")
            fa = m[domain.add]
            ga = codomain.add[np.ix_(m, m)]
            if not np.array_equal(fa, ga):
                a, b = np.argwhere(fa != ga)[0]
                raise ValueError(f"map is not additive at ({int(a)}, {int(b)})")
            fm = m[domain.mul]
            gm = codomain.mul[np.ix_(m, m)]
            if not np.array_equal(fm, gm):
                a, b = np.argwhere(fm != gm)[0]
                raise ValueError(f"map is not multiplicative at ({int(a)}, {int(b)})")
        self.domain = domain
        self.codomain = codomain
        self.map = _readonly(m)

    def __call__(self, index: int) -> int:
        return int(self.map[index])

    def is_surjective(self) -> bool:
        return len(np.unique(self.map)) == self.codomain.order

    def is_bijective(self) -> bool:
        return self.domain.order == self.codomain.order and self.is_surjective()

    def kernel_members(self) -> np.ndarray:
        return np.flatnonzero(self.map == self.codomain.zero)

    def __repr__(self) -> str:
        return f"RingHom({self.domain.label} -> {self.codomain.label})"
