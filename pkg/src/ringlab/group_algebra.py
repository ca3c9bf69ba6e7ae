"""Finite abelian groups and group rings over table rings.

Groups are kept in canonical prime-power form: the factor list holds
cyclic orders ``p^e`` sorted by (prime, exponent), and elements are
exponent tuples enumerated lexicographically.  The group ring ``RG``
is a :class:`~ringlab.rings.RingTable` whose element index is the
mixed-radix encoding of the coefficient tuple (base ``|R|``, group
element 0 least significant), so the copy of R embedded on the identity
coefficient occupies indices ``0 .. |R|-1`` unchanged.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .ideals import IdealSet, ideal_generated, jacobson_radical
from .rings import DEFAULT_ORDER_CAP, CapExceeded, RingHom, RingTable, _readonly, _table_dtype


def _factorint(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


class AbelianGroup:
    """A finite abelian group as a canonical list of cyclic factors."""

    __slots__ = ("factors",)

    def __init__(self, factors: Sequence[int]):
        factors = tuple(int(d) for d in factors)
        for d in factors:
            f = _factorint(d)
            if d < 2 or len(f) != 1:
                raise ValueError(f"factor {d} is not a prime power; build groups with make_group")
        key = [(min(_factorint(d)), d) for d in factors]
        if key != sorted(key):
            raise ValueError("factors not in canonical (prime, exponent) order; use make_group")
        self.factors = factors

    @property
    def order(self) -> int:
        n = 1
        for d in self.factors:
            n *= d
        return n

    @property
    def label(self) -> str:
        if not self.factors:
            return "1"
        return " x ".join(f"C{d}" for d in self.factors)

    def __eq__(self, other) -> bool:
        return isinstance(other, AbelianGroup) and other.factors == self.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"AbelianGroup({self.label})"

    def is_trivial(self) -> bool:
        return not self.factors

    def is_p_group(self, p: int) -> bool:
        """True iff the order is a power of p (the trivial group counts)."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        n = self.order
        while n % p == 0:
            n //= p
        return n == 1

    def p_component(self, p: int) -> "AbelianGroup":
        """The subgroup of p-power torsion, as an abstract group."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return AbelianGroup([d for d in self.factors if d % p == 0])

    def quotient_by_component(self, p: int) -> "AbelianGroup":
        """G / G_p: the product of the non-p cyclic factors."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return AbelianGroup([d for d in self.factors if d % p != 0])

    def elements(self) -> list[tuple[int, ...]]:
        """Exponent tuples in lexicographic (index) order."""
        return list(product(*(range(d) for d in self.factors)))

    def index_of(self, exponents: Sequence[int]) -> int:
        idx = 0
        for e, d in zip(exponents, self.factors):
            idx = idx * d + (e % d)
        return idx

    def compose(self, i: int, j: int) -> int:
        ei = self.elements()[i]
        ej = self.elements()[j]
        return self.index_of([a + b for a, b in zip(ei, ej)])

    def cayley(self) -> np.ndarray:
        elems = np.array(self.elements(), dtype=np.int64).reshape(self.order, len(self.factors))
        sums = elems[:, None, :] + elems[None, :, :]
        table = np.zeros((self.order, self.order), dtype=np.int64)
        for k, d in enumerate(self.factors):
            table = table * d + sums[:, :, k] % d
        return table

    def inverses(self) -> np.ndarray:
        table = self.cayley()
        return (table == 0).argmax(axis=1)

    def p_torsion_indices(self, p: int) -> list[int]:
        """Indices (within this group) of the elements of p-power order."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        out = []
        for idx, exps in enumerate(self.elements()):
            if all(e == 0 for e, d in zip(exps, self.factors) if d % p != 0):
                out.append(idx)
        return out


def make_group(orders: Iterable[int]) -> AbelianGroup:
    """Canonical abelian group from arbitrary cyclic orders.

    Each order is split into prime-power cyclic factors (CRT) and the
    factors are sorted by (prime, exponent); order-1 factors vanish.
    """
    factors: list[int] = []
    for d in orders:
        d = int(d)
        if d < 1:
            raise ValueError("cyclic factor orders must be >= 1")
        for p, e in _factorint(d).items():
            factors.append(p**e)
    factors.sort(key=lambda q: (min(_factorint(q)), q))
    return AbelianGroup(factors)


class GroupRingView:
    """A constructed group ring RG with its coefficient bookkeeping.

    ``coeff_of[i, j]`` is the base-ring index of the coefficient of the
    j-th group element in the i-th ring element.
    """

    __slots__ = ("ring", "base", "group", "coeff_of")

    def __init__(self, ring: RingTable, base: RingTable, group: AbelianGroup, coeff_of: np.ndarray):
        self.ring = ring
        self.base = base
        self.group = group
        self.coeff_of = _readonly(coeff_of)

    def encode(self, coeffs: Sequence[int]) -> int:
        """Ring index of the given coefficient tuple."""
        n = self.base.order
        idx = 0
        for j in reversed(range(self.group.order)):
            idx = idx * n + int(coeffs[j]) % n
        return idx

    def embed_base(self, r: int) -> int:
        """Image of a base-ring element (coefficient r on the identity)."""
        return int(r)

    def embed_group(self, g: int) -> int:
        """Image of a group element (coefficient one in position g)."""
        return int(self.base.one) * self.base.order ** int(g)

    def __repr__(self) -> str:
        return f"GroupRingView({self.ring.label})"


def group_ring(base: RingTable, group: AbelianGroup, *, cap: int = DEFAULT_ORDER_CAP) -> GroupRingView:
    """Build RG: componentwise addition, convolution multiplication.

    Tables are assembled in row blocks to bound memory; all gathers hit
    the small base-ring tables, which keeps them cache-resident.
    """
    n = base.order
    m = group.order
    size = n**m
    if size > cap:
        raise CapExceeded(f"group ring order {n}^{m} = {size} exceeds cap {cap}")
    dt = _table_dtype(size)
    radix = n ** np.arange(m, dtype=np.int64)
    coeff = ((np.arange(size, dtype=np.int64)[:, None] // radix[None, :]) % n).astype(
        _table_dtype(n)
    )
    gmul = group.cayley()
    ginv = group.inverses()

    add_table = np.empty((size, size), dtype=dt)
    mul_table = np.empty((size, size), dtype=dt)
    block = max(1, (1 << 22) // size)
    for r0 in range(0, size, block):
        r1 = min(size, r0 + block)
        acc_add = np.zeros((r1 - r0, size), dtype=np.int64)
        acc_mul = np.zeros((r1 - r0, size), dtype=np.int64)
        for g in range(m):
            acc_add += base.add[coeff[r0:r1, g][:, None], coeff[:, g][None, :]].astype(
                np.int64
            ) * int(radix[g])
            conv = None
            for h in range(m):
                k = int(gmul[int(ginv[h]), g])  # h + k = g in the group
                term = base.mul[coeff[r0:r1, h][:, None], coeff[:, k][None, :]]
                conv = term if conv is None else base.add[conv, term]
            acc_mul += conv.astype(np.int64) * int(radix[g])
        add_table[r0:r1] = acc_add
        mul_table[r0:r1] = acc_mul

    ring = RingTable(
        add_table,
        mul_table,
        zero=0,
        one=int(base.one),
        label=f"GR({base.label}, {group.label})",
    )
    return GroupRingView(ring, base, group, coeff)


def augmentation(view: GroupRingView) -> RingHom:
    """The coefficient-sum homomorphism RG -> R."""
    base = view.base
    total = view.coeff_of[:, 0].astype(np.int64)
    for j in range(1, view.group.order):
        total = base.add[total, view.coeff_of[:, j]].astype(np.int64)
    return RingHom(view.ring, base, total)


def karpilovsky_radical(view: GroupRingView, *, radical_cap: int | None = None) -> IdealSet:
    """Jacobson radical of RG from base-ring data alone.

    Generators: every j*g with j in J(R) and g in G, together with every
    r*(g_p - 1) where p is a prime dividing |G|, g_p runs over the
    p-torsion elements of G, and p*r lies in J(R).
    """
    base, group = view.base, view.group
    j_base = jacobson_radical(base, cap=radical_cap)
    j_members = set(j_base.key)
    gens: set[int] = set()
    n = base.order
    for j in j_base.key:
        for g in range(group.order):
            gens.add(j * n**g)
    for p in _factorint(group.order):
        shifted = [r for r in range(n) if base.int_mul(p, r) in j_members]
        torsion = group.p_torsion_indices(p)
        for r in shifted:
            neg_r = int(base.neg[r])
            for g in torsion:
                if g == 0:
                    continue  # r*(1 - 1) = 0
                gens.add(neg_r + r * n**g)
    return ideal_generated(view.ring, sorted(gens))
