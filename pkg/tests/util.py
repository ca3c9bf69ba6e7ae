"""Independent oracles for the test suite.

Everything here is computed with plain integer arithmetic (or frozen
from well-known tables), deliberately avoiding the table machinery
under test.
"""

from __future__ import annotations

from math import gcd


def zn_nilpotents(n: int) -> set[int]:
    return {x for x in range(n) if any(pow(x, k, n) == 0 for k in range(1, n + 1))}


def zn_idempotents(n: int) -> set[int]:
    return {x for x in range(n) if (x * x) % n == x}


def zn_units(n: int) -> set[int]:
    return {x for x in range(n) if gcd(x, n) == 1}


def euler_phi(n: int) -> int:
    return len(zn_units(n))


def zn_is_nil_clean(n: int) -> bool:
    nil = zn_nilpotents(n)
    idem = zn_idempotents(n)
    return all(any((x - e) % n in nil for e in idem) for x in range(n))


def zn_is_weakly_nil_clean(n: int) -> bool:
    nil = zn_nilpotents(n)
    idem = zn_idempotents(n)
    return all(
        any((x - e) % n in nil or (x + e) % n in nil for e in idem) for x in range(n)
    )


def crt_pair_map(a: int, b: int) -> list[int]:
    """Map Z_{ab} -> Z_a x Z_b by x -> (x mod a, x mod b), row-major pairs."""
    return [(x % a) * b + (x % b) for x in range(a * b)]


# Number of abelian groups of each order (classification by partitions).
ABELIAN_GROUP_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 1, 7: 1, 8: 3, 9: 2, 10: 1,
    11: 1, 12: 2, 13: 1, 14: 1, 15: 1, 16: 5, 17: 1, 18: 2,
}
