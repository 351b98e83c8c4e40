"""Counting orbit classes and primitive orbit classes by period.

The classes of period 2n biject with partitions of n into 2s and 3s, which
yields closed-form counts, a generating-function recurrence, and a Mobius
inversion for the primitive count.  Several routes to the same numbers are
kept deliberately independent so they can cross-validate each other.
"""

from __future__ import annotations

from typing import NamedTuple

from .orbits import OrbitClass, enumerate_classes, is_primitive


def count_classes(n: int) -> int:
    """Number of orbit classes of period 2n: floor((n+2)/2) - floor((n+2)/3)."""
    if n < 1:
        raise ValueError(f"period index must be >= 1, got {n}")
    return (n + 2) // 2 - (n + 2) // 3


def count_classes_mod6(n: int) -> int:
    """Same count via the residue of n mod 6: floor(n/6), plus 1 unless n = 1 (mod 6)."""
    if n < 1:
        raise ValueError(f"period index must be >= 1, got {n}")
    return n // 6 if n % 6 == 1 else n // 6 + 1


def count_partitions(n: int) -> int:
    """Partitions of n into 2s and 3s, counted by direct enumeration."""
    if n < 0:
        raise ValueError(f"nothing to partition for n = {n}")
    return sum(1 for threes in range(n // 3 + 1) if (n - 3 * threes) % 2 == 0)


def gf_coefficients(max_n: int) -> list[int]:
    """Coefficients 0..max_n of 1 / ((1 - z^2)(1 - z^3)).

    The denominator expands to 1 - z^2 - z^3 + z^5, giving the recurrence
    c[n] = c[n-2] + c[n-3] - c[n-5] with c[0] = 1 and c[n] = 0 for n < 0.
    """
    if max_n < 0:
        raise ValueError(f"need max_n >= 0, got {max_n}")
    coeffs = [0] * (max_n + 1)
    coeffs[0] = 1
    for n in range(1, max_n + 1):
        acc = 0
        if n >= 2:
            acc += coeffs[n - 2]
        if n >= 3:
            acc += coeffs[n - 3]
        if n >= 5:
            acc -= coeffs[n - 5]
        coeffs[n] = acc
    return coeffs


def mobius(n: int) -> int:
    """Mobius function by trial division: 0 on square factors, else (-1)^#primes."""
    if n < 1:
        raise ValueError(f"mobius needs n >= 1, got {n}")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    """Positive divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def count_primitive(n: int) -> int:
    """Primitive classes of period 2n, by Mobius inversion of count_classes."""
    return sum(mobius(d) * count_classes(n // d) for d in divisors(n))


def count_primitive_oracle(n: int) -> int:
    """Primitive classes of period 2n, counted one class at a time.

    Independent of the Mobius route: enumerates the classes and applies the
    primitivity test to each.
    """
    return sum(1 for c in enumerate_classes(n) if is_primitive(c))


class PartitionPair(NamedTuple):
    """A partition of n into ``twos`` parts of 2 and ``threes`` parts of 3."""

    twos: int
    threes: int


def partition_to_class(p: PartitionPair) -> OrbitClass:
    """The bijection (a, b) -> (a, a + 3b) from partitions to classes."""
    if p.twos < 0 or p.threes < 0 or p.twos + p.threes == 0:
        raise ValueError(f"invalid partition pair {p!r}")
    return OrbitClass(p.twos, p.twos + 3 * p.threes).validate()


def class_to_partition(c: OrbitClass) -> PartitionPair:
    """Inverse bijection: (x, y) -> (x, (y - x) / 3)."""
    c.validate()
    return PartitionPair(c.x, (c.y - c.x) // 3)


class CountRow(NamedTuple):
    n: int
    period: int
    classes: int
    primitive: int


def table(max_n: int) -> list[CountRow]:
    """Rows (n, period 2n, class count, primitive count) for n = 1..max_n."""
    if max_n < 1:
        raise ValueError(f"need max_n >= 1, got {max_n}")
    return [
        CountRow(n, 2 * n, count_classes(n), count_primitive(n))
        for n in range(1, max_n + 1)
    ]
