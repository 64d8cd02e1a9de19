"""Signed Young diagrams and the nilpotent K-orbits they label.

A diagram is stored in block form: one ``(length, plus, minus)`` triple per
distinct row length, lengths strictly decreasing, where ``plus`` (resp.
``minus``) counts rows of that length whose filling starts with ``+``
(resp. ``-``).  Rows alternate signs, so a row of length L starting with
``+`` contributes ceil(L/2) to p and floor(L/2) to q.

ASCII form, used on the command line and in records::

    3+^1 2-^2 1+^1

one token per nonzero (length, sign) block, lengths descending, ``+`` before
``-`` at equal length.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product
from math import gcd
from typing import Iterable, Iterator

from .combinat import CyclicCharacter, Partition, characters_of_order, partitions_of, transpose


class DiagramParseError(ValueError):
    """Malformed ASCII diagram; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SignatureMismatch(ValueError):
    pass


@dataclass(frozen=True)
class PairContext:
    """The pair (SL_n, S(GL_p x GL_q)) with n = p + q."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"p and q must be nonnegative, got ({self.p}, {self.q})")
        if self.p + self.q < 1:
            raise ValueError("p + q must be at least 1")

    @property
    def n(self) -> int:
        return self.p + self.q

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class SignedYoungDiagram:
    blocks: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        prev = None
        for b in blocks:
            if len(b) != 3:
                raise ValueError(f"block must be (length, plus, minus), got {b!r}")
            length, plus, minus = b
            if length <= 0 or plus < 0 or minus < 0 or plus + minus == 0:
                raise ValueError(f"invalid block {b!r}")
            if prev is not None and length >= prev:
                raise ValueError("block lengths must be strictly decreasing")
            prev = length

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[int, str]]) -> "SignedYoungDiagram":
        """Build from individual rows ``(length, '+'|'-')`` in any order."""
        acc: dict[int, list[int]] = {}
        for length, sign in rows:
            slot = acc.setdefault(length, [0, 0])
            if sign == "+":
                slot[0] += 1
            elif sign == "-":
                slot[1] += 1
            else:
                raise ValueError(f"sign must be '+' or '-', got {sign!r}")
        return cls(tuple((L, a, b) for L, (a, b) in sorted(acc.items(), reverse=True)))

    @classmethod
    def from_multiplicities(cls, mults: dict[int, tuple[int, int]]) -> "SignedYoungDiagram":
        return cls(
            tuple((L, a, b) for L, (a, b) in sorted(mults.items(), reverse=True) if a + b > 0)
        )

    @property
    def is_empty(self) -> bool:
        return not self.blocks

    @property
    def n(self) -> int:
        return sum(L * (a + b) for L, a, b in self.blocks)

    @property
    def signature(self) -> tuple[int, int]:
        p = sum(a * ((L + 1) // 2) + b * (L // 2) for L, a, b in self.blocks)
        q = sum(a * (L // 2) + b * ((L + 1) // 2) for L, a, b in self.blocks)
        return p, q

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(L for L, _, _ in self.blocks)

    def rows(self) -> list[tuple[int, str]]:
        """Individual rows, longest first, ``+`` rows before ``-`` rows at equal length."""
        out: list[tuple[int, str]] = []
        for L, a, b in self.blocks:
            out.extend([(L, "+")] * a)
            out.extend([(L, "-")] * b)
        return out

    def multiplicities(self) -> dict[int, tuple[int, int]]:
        return {L: (a, b) for L, a, b in self.blocks}

    def partition(self) -> Partition:
        """The underlying unsigned partition of n."""
        return Partition(tuple(L for L, _ in self.rows()))

    def union(self, other: "SignedYoungDiagram") -> "SignedYoungDiagram":
        """Rearrange the rows of both diagrams by length."""
        mults = self.multiplicities()
        for L, a, b in other.blocks:
            x, y = mults.get(L, (0, 0))
            mults[L] = (x + a, y + b)
        return SignedYoungDiagram.from_multiplicities(mults)

    def __str__(self) -> str:
        return format_diagram(self)


EMPTY_DIAGRAM = SignedYoungDiagram(())


def format_diagram(lam: SignedYoungDiagram) -> str:
    tokens = []
    for L, a, b in lam.blocks:
        if a:
            tokens.append(f"{L}+^{a}")
        if b:
            tokens.append(f"{L}-^{b}")
    return " ".join(tokens)


def _digits(text: str, pos: int, what: str) -> tuple[int, int]:
    end = pos
    while end < len(text) and text[end].isdigit():
        end += 1
    if end == pos:
        raise DiagramParseError(f"expected {what}", pos)
    if text[pos] == "0":
        raise DiagramParseError(f"{what} must be positive without leading zeros", pos)
    return int(text[pos:end]), end


def _expect(text: str, pos: int, allowed: str, what: str) -> str:
    if pos >= len(text) or text[pos] not in allowed:
        raise DiagramParseError(f"expected {what}", pos)
    return text[pos]


def parse_diagram(text: str) -> SignedYoungDiagram:
    """Inverse of :func:`format_diagram`; only the exact canonical form is accepted.

    Errors carry the offset of the first offending character.
    """
    pos = 0
    blocks: list[tuple[int, str, int]] = []
    if text == "":
        return EMPTY_DIAGRAM
    while True:
        start = pos
        length, pos = _digits(text, pos, "a row length")
        sign = _expect(text, pos, "+-", "'+' or '-'")
        _expect(text, pos + 1, "^", "'^'")
        mult, pos = _digits(text, pos + 2, "a multiplicity")
        if blocks:
            prev_len, prev_sign, _ = blocks[-1]
            ordered = length < prev_len or (length == prev_len and prev_sign == "+" and sign == "-")
            if not ordered:
                raise DiagramParseError("blocks out of canonical order", start)
        blocks.append((length, sign, mult))
        if pos == len(text):
            break
        if text[pos] != " ":
            raise DiagramParseError("expected a single space between blocks", pos)
        pos += 1
        if pos == len(text):
            raise DiagramParseError("trailing space", pos - 1)
    mults: dict[int, tuple[int, int]] = {}
    for length, sign, mult in blocks:
        a, b = mults.get(length, (0, 0))
        mults[length] = (a + mult, b) if sign == "+" else (a, b + mult)
    return SignedYoungDiagram.from_multiplicities(mults)


def _sign_splits(mults: list[tuple[int, int]]) -> Iterator[tuple[tuple[int, int, int], ...]]:
    # every way to split each multiplicity c into (plus, minus), plus-heavy first
    choices = [[(L, a, c - a) for a in range(c, -1, -1)] for L, c in mults]
    for combo in product(*choices):
        yield tuple(combo)


@lru_cache(maxsize=None)
def _diagrams_of_size(n: int) -> tuple[SignedYoungDiagram, ...]:
    out = []
    for part in partitions_of(n):
        mults = sorted(part.multiplicities().items(), reverse=True)
        for blocks in _sign_splits(mults):
            out.append(SignedYoungDiagram(blocks))
    return tuple(out)


def signed_diagrams(n: int) -> list[SignedYoungDiagram]:
    """All signed Young diagrams of size ``n``, any signature, canonical order."""
    return list(_diagrams_of_size(n))


@lru_cache(maxsize=None)
def _orbits_cached(p: int, q: int) -> tuple[SignedYoungDiagram, ...]:
    return tuple(lam for lam in _diagrams_of_size(p + q) if lam.signature == (p, q))


def enumerate_orbits(ctx: PairContext) -> list[SignedYoungDiagram]:
    """Signed Young diagrams of signature (p, q), i.e. the nilpotent K-orbits in g_1.

    Order: by underlying partition (lexicographically decreasing), then with
    more ``+`` rows first at the longest differing length.
    """
    return list(_orbits_cached(ctx.p, ctx.q))


def richardson_orbits(ctx: PairContext) -> list[SignedYoungDiagram]:
    return [lam for lam in _orbits_cached(ctx.p, ctx.q) if is_richardson(lam)]


def d_lambda(lam: SignedYoungDiagram) -> int:
    """gcd of the row lengths; the order of the component group of the orbit."""
    if lam.is_empty:
        raise ValueError("d_lambda is undefined for the empty diagram")
    return reduce(gcd, lam.lengths)


def is_richardson(lam: SignedYoungDiagram) -> bool:
    """True when rows of each length all start with the same sign."""
    return all(a == 0 or b == 0 for _, a, b in lam.blocks)


def orbit_dimension(lam: SignedYoungDiagram, ctx: PairContext) -> int:
    """Complex dimension of the K-orbit: half the dimension of the GL_n-orbit of the same Jordan type."""
    if lam.signature != (ctx.p, ctx.q):
        raise SignatureMismatch(
            f"diagram {format_diagram(lam)!r} has signature {lam.signature}, expected {(ctx.p, ctx.q)}"
        )
    n = ctx.n
    cols = transpose(lam.partition())
    twice = n * n - sum(t * t for t in cols.parts)
    assert twice % 2 == 0
    return twice // 2


def component_character_set(lam: SignedYoungDiagram, m: int) -> list[CyclicCharacter]:
    """Order-``m`` characters of the component group Z/d_lambda."""
    return characters_of_order(d_lambda(lam), m)


def uniform_diagram(length: int, count: int, sign: str) -> SignedYoungDiagram:
    """``count`` rows of the given length, all starting with ``sign``."""
    if count == 0:
        return EMPTY_DIAGRAM
    return SignedYoungDiagram.from_rows([(length, sign)] * count)


def pair_diagram(length: int, count: int) -> SignedYoungDiagram:
    """``count`` rows of each sign at the given length."""
    if count == 0:
        return EMPTY_DIAGRAM
    return SignedYoungDiagram(((length, count, count),))
