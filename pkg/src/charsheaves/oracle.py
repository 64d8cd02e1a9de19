"""Brute-force checks by explicit matrices over Q.

Nothing here uses the closed formulas of :mod:`charsheaves.orbits`: orbit and
stratum dimensions come from kernel ranks of ``y -> [y, x]`` on
k = s(gl_p + gl_q), and orbit counts from a separate recursion.

Basis convention: indices ``0..p-1`` are e_1..e_p (V+), ``p..n-1`` are
f_1..f_q (V-).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .orbits import PairContext, SignatureMismatch, SignedYoungDiagram
from .strata import DualStratumLabel

Matrix = tuple[tuple[Fraction, ...], ...]


class NonGenericSample(RuntimeError):
    """Two random regular elements gave different stratum dimensions."""


@dataclass(frozen=True)
class MatrixRepresentative:
    n: int
    plus_indices: tuple[int, ...]
    minus_indices: tuple[int, ...]
    entries: Matrix

    @property
    def p(self) -> int:
        return len(self.plus_indices)

    @property
    def q(self) -> int:
        return len(self.minus_indices)

    def in_g1(self) -> bool:
        plus = set(self.plus_indices)
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x and ((i in plus) == (j in plus)):
                    return False
        return True


# --- exact linear algebra ------------------------------------------------


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    work = [[Fraction(x) for x in row] for row in rows if any(row)]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        pr = work[r]
        inv = 1 / pr[col]
        for i in range(r + 1, len(work)):
            f = work[i][col]
            if f:
                f *= inv
                row = work[i]
                for j in range(col, ncols):
                    if pr[j]:
                        row[j] -= f * pr[j]
        r += 1
        if r == len(work):
            break
    return r


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(k) if a[i][t]), Fraction(0)) for j in range(m))
        for i in range(n)
    )


def _zeros(n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(n)]


# --- representatives -----------------------------------------------------


def _fill_rows(
    x: list[list[Fraction]], rows: list[tuple[int, str]], plus_free: list[int], minus_free: list[int]
) -> None:
    for length, sign in rows:
        chain = []
        cur = sign
        for _ in range(length):
            chain.append(plus_free.pop(0) if cur == "+" else minus_free.pop(0))
            cur = "-" if cur == "+" else "+"
        for a, b in zip(chain, chain[1:]):
            x[b][a] = Fraction(1)


def representative(lam: SignedYoungDiagram, ctx: PairContext) -> MatrixRepresentative:
    """A nilpotent element of g_1 in the orbit of ``lam``.

    Each row becomes a Jordan chain v_1 -> v_2 -> ... -> 0 whose vectors
    alternate between V+ and V- starting from the row's sign.
    """
    if lam.signature != (ctx.p, ctx.q):
        raise SignatureMismatch(f"{lam} has signature {lam.signature}, expected {(ctx.p, ctx.q)}")
    n = ctx.n
    x = _zeros(n)
    _fill_rows(x, lam.rows(), list(range(ctx.p)), list(range(ctx.p, n)))
    return MatrixRepresentative(
        n, tuple(range(ctx.p)), tuple(range(ctx.p, n)), tuple(tuple(r) for r in x)
    )


def jordan_type(x: MatrixRepresentative) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent matrix, from ranks of its powers."""
    n = x.n
    ranks = [n]
    power = x.entries
    while ranks[-1] > 0:
        ranks.append(rank(power))
        if len(ranks) > n + 1:
            raise ValueError("matrix is not nilpotent")
        power = matmul(power, x.entries)
    # number of blocks of size >= j is rank(x^{j-1}) - rank(x^j)
    at_least = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))]
    sizes = []
    for j in range(len(at_least), 0, -1):
        exact = at_least[j - 1] - (at_least[j] if j < len(at_least) else 0)
        sizes.extend([j] * exact)
    return tuple(sizes)


# --- centralizers ----------------------------------------------------------


def _k_basis(p: int, q: int) -> list[tuple[int, int]]:
    n = p + q
    blocks = [range(p), range(p, n)]
    return [(i, j) for blk in blocks for i in blk for j in blk]


def centralizer_dim_in_k(x: MatrixRepresentative) -> int:
    """dim {y in s(gl_p + gl_q) : [y, x] = 0}, by exact kernel rank."""
    p, q = x.p, x.q
    return _centralizer_dim(x.entries, p, q)


def _centralizer_dim(entries: Matrix, p: int, q: int) -> int:
    n = p + q
    basis = _k_basis(p, q)
    # column for E_ij: [E_ij, x] = E_ij x - x E_ij, flattened; plus a trace row
    columns = []
    for i, j in basis:
        c = [Fraction(0)] * (n * n + 1)
        for b in range(n):
            v = entries[j][b]
            if v:
                c[i * n + b] += v
        for a in range(n):
            v = entries[a][i]
            if v:
                c[a * n + j] -= v
        if i == j:
            c[n * n] = Fraction(1)
        columns.append(c)
    m = [[columns[c][r] for c in range(len(columns))] for r in range(n * n + 1)]
    return len(basis) - rank(m)


def dim_k(ctx: PairContext) -> int:
    return ctx.p * ctx.p + ctx.q * ctx.q - 1


def orbit_dimension_by_centralizer(lam: SignedYoungDiagram, ctx: PairContext) -> int:
    return dim_k(ctx) - centralizer_dim_in_k(representative(lam, ctx))


# --- strata ---------------------------------------------------------------


def stratum_point(label: DualStratumLabel, ctx: PairContext, scalars: Sequence[Fraction]) -> Matrix:
    """The element a + e of the stratum with torus coordinates ``scalars`` (one per pair block).

    On the j-th pair block with basis e_1..e_m, f_1..f_m::

        e_i -> f_{m-i} + a_j f_{m-i+1},   f_i -> a_j e_{m-i+1} + e_{m-i+2}

    (out-of-range vectors are zero); on the rest, the nilpotent
    representative of ``mu``.
    """
    m, l, mu = label.m, label.l, label.mu
    if label.n != ctx.n or 2 * m * l + mu.n != ctx.n or mu.signature != (ctx.p - m * l, ctx.q - m * l):
        raise SignatureMismatch(f"{label} does not fit the pair {ctx}")
    if len(scalars) != l:
        raise ValueError(f"need {l} torus coordinates, got {len(scalars)}")
    n = ctx.n
    x = _zeros(n)
    plus_free = list(range(ctx.p))
    minus_free = list(range(ctx.p, n))
    for j in range(l):
        e = [plus_free.pop(0) for _ in range(m)]
        f = [minus_free.pop(0) for _ in range(m)]
        a = Fraction(scalars[j])

        def put(target_kind: str, idx: int, src: int, val: Fraction) -> None:
            # idx is 1-based within the block
            if 1 <= idx <= m and val:
                tgt = (e if target_kind == "e" else f)[idx - 1]
                x[tgt][src] += val

        for i in range(1, m + 1):
            put("f", m - i, e[i - 1], Fraction(1))
            put("f", m - i + 1, e[i - 1], a)
            put("e", m - i + 1, f[i - 1], a)
            put("e", m - i + 2, f[i - 1], Fraction(1))
    _fill_rows(x, mu.rows(), plus_free, minus_free)
    return tuple(tuple(r) for r in x)


def _generic_scalars(l: int, rng: random.Random) -> list[Fraction]:
    # distinct odd numerators, distinct squares, none zero
    nums = rng.sample(range(1, 400, 2), l)
    dens = [rng.randrange(1, 50) for _ in range(l)]
    vals = [Fraction(a, b) for a, b in zip(nums, dens)]
    if len({v * v for v in vals}) < l:
        return _generic_scalars(l, rng)
    return vals


def stratum_dim(label: DualStratumLabel, ctx: PairContext, seed: int = 0) -> int:
    """dim K.(a + e) + l for a random regular a, confirmed by a second draw."""
    rng = random.Random(seed)
    dims = []
    for _ in range(2):
        point = stratum_point(label, ctx, _generic_scalars(label.l, rng))
        dims.append(dim_k(ctx) - _centralizer_dim(point, ctx.p, ctx.q) + label.l)
    if dims[0] != dims[1]:
        raise NonGenericSample(f"stratum {label}: sampled dimensions {dims[0]} and {dims[1]} disagree")
    return dims[0]


# --- independent orbit count ----------------------------------------------


def count_orbits_independent(ctx: PairContext) -> int:
    """Number of signed Young diagrams of signature (p, q).

    Recursion over the longest remaining row length: pick how many rows of
    that length start with + and how many with -, then recurse on shorter
    lengths.  Shares no code with the enumerator.
    """
    return _count(ctx.p, ctx.q, ctx.p + ctx.q)


@lru_cache(maxsize=None)
def _count(p: int, q: int, max_len: int) -> int:
    if p == 0 and q == 0:
        return 1
    if max_len == 0:
        return 0
    total = 0
    L = max_len
    hi, lo = (L + 1) // 2, L // 2
    a = 0
    while a * hi <= p and a * lo <= q:
        b = 0
        while a * hi + b * lo <= p and a * lo + b * hi <= q:
            total += _count(p - a * hi - b * lo, q - a * lo - b * hi, L - 1)
            b += 1
        a += 1
    return total
