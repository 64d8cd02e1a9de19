"""Dual strata supporting character sheaves and their equivariant fundamental groups.

A stratum is named by ``(m, l, mu)``: the orbit with ``l`` rows of length
``m`` of each sign added to the diagram ``mu``.  The label, not the merged
diagram, is the identity of the object.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .orbits import (
    EMPTY_DIAGRAM,
    PairContext,
    SignedYoungDiagram,
    d_lambda,
    pair_diagram,
    richardson_orbits,
)


@dataclass(frozen=True)
class DualStratumLabel:
    m: int
    l: int
    mu: SignedYoungDiagram = EMPTY_DIAGRAM

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if self.l < 0:
            raise ValueError(f"l must be nonnegative, got {self.l}")
        if self.l == 0 and self.mu.is_empty:
            raise ValueError("a stratum with l = 0 needs a nonempty mu")

    @property
    def n(self) -> int:
        return 2 * self.m * self.l + self.mu.n

    def __str__(self) -> str:
        mu = str(self.mu) if not self.mu.is_empty else "0"
        return f"[m={self.m} l={self.l} mu={mu}]"


@dataclass(frozen=True)
class Pi1Data:
    """Rank of the type-B braid factor and modulus of the cyclic factor."""

    braid_rank: int
    cyclic_modulus: int


def stratum_of_orbital_datum(m: int, l: int, mu: SignedYoungDiagram) -> SignedYoungDiagram:
    """Merge ``l`` rows ``m_+`` and ``l`` rows ``m_-`` into ``mu``."""
    return pair_diagram(m, l).union(mu)


def merged_diagram(label: DualStratumLabel) -> SignedYoungDiagram:
    return stratum_of_orbital_datum(label.m, label.l, label.mu)


def pi1_data(label: DualStratumLabel) -> Pi1Data:
    if label.mu.is_empty:
        modulus = 2 * label.m
    elif label.l == 0:
        modulus = d_lambda(label.mu)
    else:
        modulus = gcd(2 * label.m, d_lambda(label.mu))
    return Pi1Data(label.l, modulus)


def _richardson(p: int, q: int) -> list[SignedYoungDiagram]:
    if p < 0 or q < 0:
        return []
    if p + q == 0:
        return [EMPTY_DIAGRAM]
    return richardson_orbits(PairContext(p, q))


def richardson_strata(ctx: PairContext, m: int) -> list[DualStratumLabel]:
    """Labels ``(m, l, mu)`` with ``m`` odd, ``mu`` Richardson of signature (p-ml, q-ml)
    and ``m | d_mu`` whenever ``mu`` is nonempty.

    For ``l = 0`` the stratum is the orbit of ``mu`` itself, for every odd
    ``m``; only the ``m`` dividing ``d_mu`` carry order-``m`` sheaves, and
    those are the ones listed.
    """
    if m % 2 == 0:
        return []
    out = []
    l = 0
    while m * l <= min(ctx.p, ctx.q):
        for mu in _richardson(ctx.p - m * l, ctx.q - m * l):
            if not mu.is_empty and d_lambda(mu) % m:
                continue
            out.append(DualStratumLabel(m, l, mu))
        l += 1
    return out


def split_strata(ctx: PairContext) -> list[DualStratumLabel]:
    """Labels ``(m, n/2m, empty)`` for every ``m`` with ``2m | n``; only when p = q."""
    if ctx.p != ctx.q:
        return []
    n = ctx.n
    return [DualStratumLabel(m, n // (2 * m)) for m in range(1, n // 2 + 1) if n % (2 * m) == 0]


@lru_cache(maxsize=None)
def _cs_orbits_cached(p: int, q: int) -> tuple[DualStratumLabel, ...]:
    ctx = PairContext(p, q)
    seen: set[DualStratumLabel] = set()
    out: list[DualStratumLabel] = []
    for m in range(1, ctx.n + 1, 2):
        for label in richardson_strata(ctx, m):
            if label not in seen:
                seen.add(label)
                out.append(label)
    for label in split_strata(ctx):
        if label not in seen:
            seen.add(label)
            out.append(label)
    out.sort(key=_label_key)
    return tuple(out)


def _label_key(label: DualStratumLabel):
    return (label.m, label.l, [(-L, -a, -b) for L, a, b in label.mu.blocks])


def cs_orbits(ctx: PairContext) -> list[DualStratumLabel]:
    """Every stratum label that supports some character sheaf, each listed once.

    Sorted by ``m``, then ``l``, then ``mu``.
    """
    return list(_cs_orbits_cached(ctx.p, ctx.q))


def strata_for_central_order(ctx: PairContext, m: int) -> list[DualStratumLabel]:
    """Strata carrying sheaves whose central character has order ``m``."""
    if m % 2:
        return [s for s in cs_orbits(ctx) if s.m == m]
    k = m // 2
    return [s for s in split_strata(ctx) if s.m == k]


def case_collisions(ctx: PairContext) -> list[DualStratumLabel]:
    """Labels produced both by the Richardson family and the p = q family.

    These occur for odd ``m`` with ``2ml = n``; the listing keeps one copy.
    """
    split = set(split_strata(ctx))
    return [
        label
        for m in range(1, ctx.n + 1, 2)
        for label in richardson_strata(ctx, m)
        if label in split
    ]


def is_valid_for(label: DualStratumLabel, ctx: PairContext) -> bool:
    return label in set(_cs_orbits_cached(ctx.p, ctx.q))
