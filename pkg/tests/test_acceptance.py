"""One test per acceptance criterion; each prints a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s``; the lines are
also repeated in the terminal summary.
"""

from __future__ import annotations

import time

from conftest import ACCEPTANCE_LINES

from charsheaves.classify import (
    OddSheaf,
    all_character_sheaves,
    all_orbital_complexes,
    character_sheaves,
    cuspidal_sheaves,
    fourier_forward,
    fourier_inverse,
    levi_for_nilpotent_support,
    orbital_complexes,
)
from charsheaves.combinat import divisors, euler_phi
from charsheaves.oracle import count_orbits_independent, orbit_dimension_by_centralizer, stratum_dim
from charsheaves.orbits import (
    PairContext,
    d_lambda,
    enumerate_orbits,
    is_richardson,
    orbit_dimension,
    richardson_orbits,
)
from charsheaves.strata import cs_orbits


def pairs(n_max: int):
    for n in range(1, n_max + 1):
        for p in range(n + 1):
            yield PairContext(p, n - p)


def report(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def test_1_counting_identity():
    start = time.perf_counter()
    bad = []
    for ctx in pairs(12):
        lhs = sum(d_lambda(lam) for lam in enumerate_orbits(ctx))
        rhs = sum(len(character_sheaves(ctx, m)) for m in divisors(ctx.n))
        if lhs != rhs:
            bad.append((str(ctx), lhs, rhs))
    spot = [len(character_sheaves(PairContext(2, 2), m)) for m in (1, 2, 4)]
    elapsed = time.perf_counter() - start
    ok = not bad and spot == [10, 5, 4] and elapsed < 60
    report(1, "counting identity p+q<=12", ok, f"mismatches={bad[:3]}, (2,2) split={spot}, {elapsed:.1f}s (<60s)")


def test_2_bijection_round_trip():
    bad = 0
    checked = 0
    for ctx in pairs(12):
        for c in all_orbital_complexes(ctx):
            checked += 1
            bad += fourier_inverse(fourier_forward(c), ctx) != c
        for s in all_character_sheaves(ctx):
            checked += 1
            bad += fourier_forward(fourier_inverse(s, ctx)) != s
    report(2, "Fourier round trips p+q<=12", bad == 0, f"{checked} compositions, {bad} failures")


def _cuspidal_expected(ctx: PairContext) -> int:
    n, diff = ctx.n, abs(ctx.p - ctx.q)
    if diff > 1:
        return 0
    if diff == 1:
        return euler_phi(n)
    return 2 * euler_phi(n) + (euler_phi(n // 2) if (n // 2) % 2 else 0)


def test_3_cuspidal_counts():
    spots = {(2, 1): 2, (1, 1): 3, (2, 2): 4, (3, 3): 6}
    got = {pq: len(cuspidal_sheaves(PairContext(*pq))) for pq in spots}
    far = [str(ctx) for ctx in pairs(12) if abs(ctx.p - ctx.q) >= 2 and cuspidal_sheaves(ctx)]
    formula = [str(ctx) for ctx in pairs(12) if len(cuspidal_sheaves(ctx)) != _cuspidal_expected(ctx)]
    ok = got == spots and not far and not formula
    report(3, "cuspidal counts", ok, f"spots={got}, nonzero with |p-q|>=2: {far}, formula mismatches: {formula}")


def test_4_nilpotent_support():
    bad = []
    for ctx in pairs(12):
        pulled = {
            fourier_inverse(s, ctx)
            for s in all_character_sheaves(ctx)
            if isinstance(s, OddSheaf) and s.l == 0
        }
        expected = {
            c for c in all_orbital_complexes(ctx) if is_richardson(c.orbit) and c.character.order % 2 == 1
        }
        if pulled != expected:
            bad.append(str(ctx))
    spot = sum(
        1
        for s in all_character_sheaves(PairContext(2, 2))
        if isinstance(s, OddSheaf) and s.l == 0
    )
    report(4, "nilpotent-support sheaves = Richardson x odd order", not bad and spot == 6, f"bad pairs={bad}, (2,2)->{spot}")


def test_5_oracle_agreement():
    start = time.perf_counter()
    orbit_bad = [
        (str(ctx), str(lam))
        for ctx in pairs(6)
        for lam in enumerate_orbits(ctx)
        if orbit_dimension_by_centralizer(lam, ctx) != orbit_dimension(lam, ctx)
    ]
    stratum_bad = []
    seen = 0
    m2l1 = None
    for ctx in pairs(8):
        for s in cs_orbits(ctx):
            if not s.mu.is_empty:
                continue
            seen += 1
            got = stratum_dim(s, ctx)
            if (s.m, s.l) == (2, 1):
                m2l1 = got
            if got != 2 * s.m**2 * s.l**2 - s.m * s.l + s.l:
                stratum_bad.append((str(ctx), s.m, s.l, got))
    elapsed = time.perf_counter() - start
    ok = not orbit_bad and not stratum_bad and m2l1 == 7 and elapsed < 120
    report(
        5,
        "oracle agreement",
        ok,
        f"orbit mismatches={orbit_bad[:3]}, {seen} split strata, mismatches={stratum_bad[:3]}, (m=2,l=1)->{m2l1}, {elapsed:.1f}s (<120s)",
    )


def test_6_enumeration_cross_check():
    bad = [
        str(ctx) for ctx in pairs(14) if len(enumerate_orbits(ctx)) != count_orbits_independent(ctx)
    ]
    spots = [len(enumerate_orbits(PairContext(*pq))) for pq in [(1, 1), (2, 1), (2, 2)]]
    report(6, "orbit enumeration vs independent count p+q<=14", not bad and spots == [3, 4, 10], f"bad={bad}, spots={spots}")


def test_7_levi_laws():
    problems = []
    count = 0
    for ctx in pairs(10):
        for lam in richardson_orbits(ctx):
            d = d_lambda(lam)
            for m in range(1, d + 1, 2):
                if d % m:
                    continue
                count += 1
                datum = levi_for_nilpotent_support(lam, m)
                where = (str(ctx), str(lam), m)
                if sum(datum.block_sizes) != ctx.n:
                    problems.append(("block sum", where))
                if any(a == b for a, b in zip(datum.signs, datum.signs[1:])):
                    problems.append(("signs", where))
                if sum(datum.l_sequence) != sum(L // m for L in lam.partition().parts):
                    problems.append(("l sum", where))
                whole = all(L == m for L in lam.lengths)
                if datum.is_whole_group != whole:
                    problems.append(("whole group", where))
    report(7, "Levi construction laws p+q<=10", not problems, f"{count} (orbit, m) data, problems={problems[:3]}")


def test_8_parity():
    bad = [
        (str(ctx), m)
        for ctx in pairs(12)
        if ctx.p != ctx.q
        for m in divisors(ctx.n)
        if m % 2 == 0 and (character_sheaves(ctx, m) or orbital_complexes(ctx, m))
    ]
    report(8, "even central order only when p=q, p+q<=12", not bad, f"violations={bad[:3]}")

