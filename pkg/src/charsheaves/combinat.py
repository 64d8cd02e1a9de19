"""Partitions, bipartitions and characters of finite cyclic groups.

Everything here is exact integer arithmetic. Listings come out in a fixed
canonical order so downstream tables are reproducible and diffable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers. ``Partition(())`` is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(x, int) or isinstance(x, bool) for x in parts):
            raise TypeError(f"partition parts must be integers: {parts!r}")
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")

    @classmethod
    def from_multiplicities(cls, mults: dict[int, int]) -> "Partition":
        """Build from ``{part: multiplicity}``; zero multiplicities are dropped."""
        parts: list[int] = []
        for part in sorted(mults, reverse=True):
            parts.extend([part] * mults[part])
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for x in self.parts:
            out[x] = out.get(x, 0) + 1
        return out

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        return "(" + ",".join(map(str, self.parts)) + ")"


EMPTY = Partition(())


@dataclass(frozen=True)
class Bipartition:
    """An ordered pair of partitions; its size is the sum of the two sizes."""

    first: Partition
    second: Partition

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    def __str__(self) -> str:
        return f"({self.first},{self.second})"


@dataclass(frozen=True)
class CyclicCharacter:
    """The character of Z/dZ sending the fixed generator to exp(2*pi*i*k/d).

    ``modulus`` is d, ``exponent`` is k in [0, d).
    """

    modulus: int
    exponent: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.exponent < self.modulus:
            raise ValueError(
                f"exponent must lie in [0, {self.modulus}), got {self.exponent}"
            )

    @property
    def order(self) -> int:
        return self.modulus // gcd(self.modulus, self.exponent)

    @property
    def is_trivial(self) -> bool:
        return self.exponent == 0

    @property
    def angle(self) -> Fraction:
        """Value on the generator as a fraction of a full turn, in [0, 1).

        Two characters on different cyclic quotients of Z/nZ pull back to the
        same character of Z/nZ exactly when their angles agree.
        """
        return Fraction(self.exponent, self.modulus)

    @classmethod
    def from_angle(cls, angle: Fraction, modulus: int) -> "CyclicCharacter":
        """Inverse of :attr:`angle`; the denominator of ``angle`` must divide ``modulus``."""
        k = angle * modulus
        if k.denominator != 1:
            raise ValueError(f"angle {angle} is not a character of Z/{modulus}Z")
        return cls(modulus, int(k) % modulus)

    def __str__(self) -> str:
        return f"chi[{self.exponent} mod {self.modulus}]"


def transpose(p: Partition) -> Partition:
    """Conjugate partition (column heights of the Young diagram)."""
    if not p.parts:
        return EMPTY
    return Partition(tuple(sum(1 for x in p.parts if x > j) for j in range(p.parts[0])))


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    # lexicographically decreasing
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(t) for t in _partitions_bounded(n, n))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n``, lexicographically decreasing: (4), (3,1), (2,2), (2,1,1), (1,1,1,1)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return list(_partitions_cached(n))


def bipartitions_of(n: int) -> list[Bipartition]:
    """All bipartitions of ``n``.

    Ordered by decreasing size of the first component, then by the canonical
    order of each component.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    out: list[Bipartition] = []
    for a in range(n, -1, -1):
        for first in _partitions_cached(a):
            for second in _partitions_cached(n - a):
                out.append(Bipartition(first, second))
    return out


def euler_phi(m: int) -> int:
    """Number of units modulo ``m``."""
    if m < 1:
        raise ValueError(f"euler_phi needs m >= 1, got {m}")
    result = m
    rest = m
    f = 2
    while f * f <= rest:
        if rest % f == 0:
            while rest % f == 0:
                rest //= f
            result -= result // f
        f += 1
    if rest > 1:
        result -= result // rest
    return result


def characters_of_order(d: int, m: int) -> list[CyclicCharacter]:
    """Characters of Z/dZ of exact order ``m``, by increasing exponent.

    There are ``euler_phi(m)`` of them when ``m`` divides ``d`` and none otherwise.
    """
    if d < 1 or m < 1:
        raise ValueError(f"need d >= 1 and m >= 1, got d={d}, m={m}")
    if d % m:
        return []
    step = d // m
    return [CyclicCharacter(d, step * j) for j in range(m) if gcd(j, m) == 1]


def divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]
