"""Multiplicative substrate: primes, factorization and multi-indices.

Every Dirichlet-side object in the package reduces through this module: an
integer ``n`` becomes the multi-index of its prime exponents, with position
``j`` meaning the ``j``-th prime (2 is position 1).  The prime table is a
plain sieve that grows on demand.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

import numpy as np

_primes = np.empty(0, dtype=np.int64)
_prime_bound = 1


def primes_up_to(bound: int) -> np.ndarray:
    """All primes ``<= bound``, ascending.  The returned array is shared; do not mutate."""
    global _primes, _prime_bound
    if bound > _prime_bound:
        new_bound = max(bound, 2 * _prime_bound, 1 << 10)
        mask = np.ones(new_bound + 1, dtype=bool)
        mask[:2] = False
        for p in range(2, math.isqrt(new_bound) + 1):
            if mask[p]:
                mask[p * p:: p] = False
        _primes = np.nonzero(mask)[0].astype(np.int64)
        _prime_bound = new_bound
    return _primes[: bisect_right(_primes, bound)]


def nth_prime(j: int) -> int:
    """The ``j``-th prime, 1-based."""
    if j < 1:
        raise ValueError("prime positions are 1-based")
    bound = 1 << 10
    while True:
        table = primes_up_to(bound)
        if len(table) >= j:
            return int(table[j - 1])
        bound *= 2


def prime_index(p: int) -> int:
    """Position of the prime ``p`` in the increasing enumeration of primes."""
    table = primes_up_to(p)
    i = bisect_left(table, p)
    if i == len(table) or table[i] != p:
        raise ValueError(f"{p} is not prime")
    return i + 1


@dataclass(frozen=True)
class MultiIndex:
    """Finitely supported exponent vector over prime positions.

    ``entries`` holds ``(position, exponent)`` pairs with positions ascending
    and exponents nonzero.  The zero multi-index has no entries.
    """

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 0
        for pos, exp in self.entries:
            if pos <= last:
                raise ValueError("positions must be strictly increasing and >= 1")
            if exp == 0:
                raise ValueError("exponents must be nonzero")
            last = pos

    @classmethod
    def from_dense(cls, vector) -> "MultiIndex":
        return cls(tuple((j + 1, int(e)) for j, e in enumerate(vector) if e != 0))

    def to_dense(self, dims: int) -> tuple[int, ...]:
        if self.max_position > dims:
            raise ValueError(f"multi-index touches position {self.max_position} > dims {dims}")
        dense = [0] * dims
        for pos, exp in self.entries:
            dense[pos - 1] = exp
        return tuple(dense)

    @property
    def max_position(self) -> int:
        return self.entries[-1][0] if self.entries else 0

    def degree(self) -> int:
        """Sum of exponents (counts multiplicity; negative entries subtract)."""
        return sum(e for _, e in self.entries)


def factorize(n: int) -> MultiIndex:
    """Prime factorization of ``n >= 1`` as a multi-index over prime positions."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    entries = []
    rest = n
    for p in primes_up_to(math.isqrt(n) + 1):
        p = int(p)
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            entries.append((prime_index(p), e))
    if rest > 1:
        entries.append((prime_index(rest), 1))
    entries.sort()
    return MultiIndex(tuple(entries))


def recompose(index: MultiIndex) -> int:
    """Inverse of :func:`factorize` on nonnegative multi-indices."""
    n = 1
    for pos, exp in index.entries:
        if exp < 0:
            raise ValueError("recompose needs nonnegative exponents")
        n *= nth_prime(pos) ** exp
    return n


def big_omega(n: int) -> int:
    """Number of prime factors of ``n`` counted with multiplicity."""
    return factorize(n).degree()


def divisor_count(n: int) -> int:
    """d(n), the number of divisors."""
    out = 1
    for _, e in factorize(n).entries:
        out *= e + 1
    return out


def divisor_counts_up_to(limit: int) -> np.ndarray:
    """Array ``d[0..limit]`` of divisor counts (``d[0]`` unused, set to 0)."""
    counts = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        counts[d:: d] += 1
    return counts


@dataclass(frozen=True)
class PrimeSet:
    """A set of primes: either an explicit finite tuple or all primes.

    ``primes`` is ascending and deduplicated.  The ``all_primes`` sentinel
    stands for the full sequence of primes; counting then goes through the
    sieve.
    """

    primes: tuple[int, ...] = ()
    all_primes: bool = False

    def __post_init__(self):
        if self.all_primes and self.primes:
            raise ValueError("give either an explicit tuple or all_primes, not both")
        last = 1
        for p in self.primes:
            if p <= last:
                raise ValueError("primes must be ascending and distinct")
            prime_index(p)  # raises if composite
            last = p

    @classmethod
    def explicit(cls, primes) -> "PrimeSet":
        return cls(primes=tuple(sorted(set(int(p) for p in primes))))

    @classmethod
    def all_up_to(cls, bound: int) -> "PrimeSet":
        return cls(primes=tuple(int(p) for p in primes_up_to(bound)))

    def count_up_to(self, x: float) -> int:
        """Number of members ``<= x``."""
        if x < 2:
            return 0
        if self.all_primes:
            return len(primes_up_to(int(x)))
        return bisect_right(self.primes, int(x))

    def __contains__(self, p: int) -> bool:
        if self.all_primes:
            i = bisect_left(primes_up_to(int(p)), p)
            table = primes_up_to(int(p))
            return i < len(table) and int(table[i]) == p
        i = bisect_left(self.primes, p)
        return i < len(self.primes) and self.primes[i] == p


def smooth_numbers(prime_set: PrimeSet, limit: int) -> list[int]:
    """Ascending integers ``<= limit`` whose prime factors all lie in ``prime_set``.

    1 is always included (empty product).  Generated by extending partial
    products prime by prime, so the cost is proportional to the output size.
    """
    if limit < 1:
        return []
    if prime_set.all_primes:
        return list(range(1, limit + 1))
    values = [1]
    for p in prime_set.primes:
        if p > limit:
            break
        extended = []
        for v in values:
            w = v
            while w * p <= limit:
                w *= p
                extended.append(w)
        values.extend(extended)
    return sorted(values)


def prime_reciprocal_sum(x: float) -> float:
    """Sum of 1/p over primes ``p <= x``, accumulated in ascending order."""
    table = primes_up_to(int(x))
    return float(np.sum(1.0 / table.astype(np.float64))) if len(table) else 0.0
