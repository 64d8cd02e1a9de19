"""Exhaustive self-checks over every pair (p, q) with p + q <= n_max.

Each check returns a :class:`CheckResult`; on failure ``counterexample``
holds the first offending input in JSON-friendly form.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import oracle
from .classify import (
    OddSheaf,
    all_character_sheaves,
    character_sheaves,
    cuspidal_sheaves,
    fourier_forward,
    fourier_inverse,
    induction_datum_for_sheaf,
    levi_for_nilpotent_support,
    nilpotent_support_sheaves,
    orbital_complexes,
)
from .combinat import characters_of_order, divisors, euler_phi, partitions_of, transpose
from .orbits import (
    PairContext,
    d_lambda,
    enumerate_orbits,
    format_diagram,
    orbit_dimension,
    richardson_orbits,
)
from .strata import DualStratumLabel, case_collisions, cs_orbits, merged_diagram, pi1_data, split_strata

N_MAX_BOUND = 16
ORBIT_ORACLE_N = 6
STRATUM_ORACLE_N = 8


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: dict | None = None
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    def record(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "counterexample": self.counterexample,
            "seconds": round(self.seconds, 3),
            "notes": self.notes,
        }


class _Failure(Exception):
    def __init__(self, detail: str, counterexample: dict):
        super().__init__(detail)
        self.detail = detail
        self.counterexample = counterexample


def pairs(n_max: int, n_min: int = 1) -> Iterator[PairContext]:
    for n in range(n_min, n_max + 1):
        for p in range(n, -1, -1):
            yield PairContext(p, n - p)


def _fail(detail: str, **payload) -> None:
    raise _Failure(detail, {k: (str(v) if not isinstance(v, (int, bool, str, list, dict)) else v) for k, v in payload.items()})


def _partition_count_recurrence(n: int) -> int:
    # Euler's pentagonal-number recurrence
    p = [1] + [0] * n
    for i in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > i:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[i - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= i:
                total += sign * p[i - g2]
            k += 1
        p[i] = total
    return p[n]


def check_partitions(n_max: int) -> str:
    top = min(n_max, 20)
    for n in range(top + 1):
        parts = partitions_of(n)
        if len(parts) != _partition_count_recurrence(n) or len(set(parts)) != len(parts):
            _fail("partition count mismatch", n=n, got=len(parts))
        for lam in parts:
            if transpose(transpose(lam)) != lam:
                _fail("transpose is not an involution", partition=lam)
    return f"n <= {top}"


def check_character_orders(n_max: int) -> str:
    top = max(60, n_max)
    for d in range(1, top + 1):
        total = 0
        for m in range(1, d + 1):
            chars = characters_of_order(d, m)
            if (d % m == 0) != bool(chars):
                _fail("empty iff m does not divide d fails", d=d, m=m)
            if chars and len(chars) != euler_phi(m):
                _fail("count differs from Euler phi", d=d, m=m)
            total += len(chars)
        if total != d:
            _fail("orders do not partition the character group", d=d, total=total)
    return f"d <= {top}"


def check_enumeration(n_max: int) -> str:
    top = min(n_max, 14)
    for ctx in pairs(top):
        orbits = enumerate_orbits(ctx)
        if len(set(orbits)) != len(orbits):
            _fail("duplicate orbit", pair=str(ctx))
        for lam in orbits:
            if lam.signature != (ctx.p, ctx.q):
                _fail("signature equation violated", pair=str(ctx), orbit=format_diagram(lam))
            if all(L % 2 == 0 for L in lam.lengths) and ctx.p != ctx.q:
                _fail("even-length diagram with p != q", pair=str(ctx), orbit=format_diagram(lam))
        independent = oracle.count_orbits_independent(ctx)
        if independent != len(orbits):
            _fail("orbit count disagrees with independent recursion", pair=str(ctx), enumerated=len(orbits), independent=independent)
    return f"p + q <= {top}"


def check_counting(n_max: int) -> str:
    for ctx in pairs(n_max):
        lhs = sum(d_lambda(lam) for lam in enumerate_orbits(ctx))
        rhs = 0
        for m in divisors(ctx.n):
            sheaves = character_sheaves(ctx, m)
            expected = euler_phi(m) * sum(1 for lam in enumerate_orbits(ctx) if d_lambda(lam) % m == 0)
            if len(sheaves) != expected:
                _fail("per-m count mismatch", pair=str(ctx), m=m, sheaves=len(sheaves), expected=expected)
            rhs += len(sheaves)
        if lhs != rhs:
            _fail("sum of d_lambda differs from number of sheaves", pair=str(ctx), lhs=lhs, rhs=rhs)
    return f"p + q <= {n_max}"


def check_bijection(n_max: int) -> str:
    for ctx in pairs(n_max):
        for m in divisors(ctx.n):
            complexes = orbital_complexes(ctx, m)
            sheaves = character_sheaves(ctx, m)
            images = []
            for c in complexes:
                s = fourier_forward(c)
                if s.central_order != m or s.psi.angle != c.character.angle:
                    _fail("central character not preserved", pair=str(ctx), orbit=format_diagram(c.orbit))
                if fourier_inverse(s, ctx) != c:
                    _fail("inverse(forward(c)) != c", pair=str(ctx), orbit=format_diagram(c.orbit))
                images.append(s)
            if len(set(images)) != len(images) or set(images) != set(sheaves):
                _fail("forward map is not onto the sheaf list", pair=str(ctx), m=m)
            for s in sheaves:
                if fourier_forward(fourier_inverse(s, ctx)) != s:
                    _fail("forward(inverse(s)) != s", pair=str(ctx), sheaf=str(s))
    return f"p + q <= {n_max}"


def check_nilpotent_support(n_max: int) -> str:
    for ctx in pairs(n_max):
        pulled = {
            fourier_inverse(s, ctx)
            for s in all_character_sheaves(ctx)
            if isinstance(s, OddSheaf) and s.l == 0
        }
        direct = set(nilpotent_support_sheaves(ctx))
        if pulled != direct:
            _fail("l = 0 sheaves do not pull back to Richardson orbits with odd characters", pair=str(ctx), extra=len(pulled - direct), missing=len(direct - pulled))
    return f"p + q <= {n_max}"


def _expected_cuspidal_count(ctx: PairContext) -> int:
    n = ctx.n
    if abs(ctx.p - ctx.q) > 1:
        return 0
    if abs(ctx.p - ctx.q) == 1:
        return euler_phi(n)
    return 2 * euler_phi(n) + (euler_phi(n // 2) if (n // 2) % 2 else 0)


def check_cuspidals(n_max: int) -> str:
    for ctx in pairs(n_max):
        cusp = cuspidal_sheaves(ctx)
        if len(cusp) != _expected_cuspidal_count(ctx):
            _fail("cuspidal count", pair=str(ctx), got=len(cusp), expected=_expected_cuspidal_count(ctx))
        everything = all_character_sheaves(ctx)
        if not set(cusp) <= set(everything):
            _fail("cuspidal label missing from the classification", pair=str(ctx))
        cusp_set = set(cusp)
        for s in everything:
            not_induced = induction_datum_for_sheaf(s, ctx) is None
            if not_induced != (s in cusp_set):
                _fail("induction datum disagrees with the cuspidal list", pair=str(ctx), sheaf=str(s))
    return f"p + q <= {n_max}"


def _levi_laws(datum, ctx: PairContext) -> str | None:
    if sum(datum.block_sizes) != ctx.n:
        return "block sizes do not sum to n"
    if any(b != datum.m * la for b, la in zip(datum.block_sizes, datum.l_sequence)):
        return "block size differs from m * l_a"
    if sum(datum.l_sequence) * datum.m != datum.target.n:
        return "sum of l_a differs from sum of rows / m"
    if any(datum.signs[i + 1] == datum.signs[i] for i in range(len(datum.signs) - 1)):
        return "signs do not alternate"
    if tuple(map(sum, zip(*datum.theta_blocks))) != (ctx.p, ctx.q):
        return "theta blocks do not sum to (p, q)"
    for (a, b), orb, size in zip(datum.theta_blocks, datum.source_orbits, datum.block_sizes):
        if orb.signature != (a, b) or a + b != size:
            return "source orbit does not fit its block"
    return None


def check_levi(n_max: int) -> str:
    top = min(n_max, 10)
    count = 0
    for ctx in pairs(top):
        for lam in richardson_orbits(ctx):
            for m in divisors(d_lambda(lam)):
                if m % 2 == 0:
                    continue
                datum = levi_for_nilpotent_support(lam, m)
                count += 1
                problem = _levi_laws(datum, ctx)
                if problem:
                    _fail(problem, pair=str(ctx), orbit=format_diagram(lam), m=m)
                all_ones = all(L == m for L in lam.lengths)
                if datum.is_whole_group != all_ones:
                    _fail("whole-group case does not match lambda/m = (1,...,1)", pair=str(ctx), orbit=format_diagram(lam), m=m)
    for ctx in pairs(top):
        for s in all_character_sheaves(ctx):
            datum = induction_datum_for_sheaf(s, ctx)
            if datum is not None:
                problem = _levi_laws(datum, ctx)
                if problem:
                    _fail(problem, pair=str(ctx), sheaf=str(s))
    return f"p + q <= {top}, {count} Richardson data"


def check_parity(n_max: int) -> str:
    for ctx in pairs(n_max):
        if ctx.p == ctx.q:
            continue
        for m in range(2, ctx.n + 1, 2):
            if character_sheaves(ctx, m) or orbital_complexes(ctx, m):
                _fail("even central order with p != q", pair=str(ctx), m=m)
    return f"p + q <= {n_max}"


def check_strata(n_max: int) -> str:
    collisions = 0
    for ctx in pairs(n_max):
        for label in cs_orbits(ctx):
            lam = merged_diagram(label)
            if lam.signature != (ctx.p, ctx.q):
                _fail("merged stratum diagram has wrong signature", pair=str(ctx), stratum=str(label))
            pi1 = pi1_data(label)
            if not label.mu.is_empty:
                dm = d_lambda(label.mu)
                if (2 * label.m * dm) % pi1.cyclic_modulus:
                    _fail("cyclic modulus does not divide 2m d_mu", stratum=str(label))
                if label.l > 0 and (2 * label.m % pi1.cyclic_modulus or dm % pi1.cyclic_modulus):
                    _fail("gcd case divisibility", stratum=str(label))
        richardson = set(cs_orbits(ctx))
        for mu in richardson_orbits(ctx):
            for m in divisors(d_lambda(mu)):
                if m % 2 and DualStratumLabel(m, 0, mu) not in richardson:
                    _fail("Richardson orbit missing from the strata", pair=str(ctx), orbit=format_diagram(mu), m=m)
        by_m: dict[int, set] = {}
        for label in cs_orbits(ctx):
            if label.m % 2:
                lam = merged_diagram(label)
                if lam in by_m.setdefault(label.m, set()):
                    _fail("two labels with the same odd m merge to one diagram", pair=str(ctx), stratum=str(label))
                by_m[label.m].add(lam)
        collisions += len(case_collisions(ctx))
    return f"p + q <= {n_max}; {collisions} labels produced by both families (kept once)"


def check_orbit_dimensions(n_max: int) -> str:
    top = min(n_max, ORBIT_ORACLE_N)
    for ctx in pairs(top):
        for lam in enumerate_orbits(ctx):
            rep = oracle.representative(lam, ctx)
            if not rep.in_g1() or oracle.jordan_type(rep) != lam.partition().parts:
                _fail("representative has wrong shape", pair=str(ctx), orbit=format_diagram(lam))
            by_matrix = oracle.orbit_dimension_by_centralizer(lam, ctx)
            if by_matrix != orbit_dimension(lam, ctx):
                _fail("orbit dimension disagrees with centralizer rank", pair=str(ctx), orbit=format_diagram(lam), formula=orbit_dimension(lam, ctx), oracle=by_matrix)
    return f"p + q <= {top}"


def check_stratum_dimensions(n_max: int) -> str:
    top = min(n_max, STRATUM_ORACLE_N)
    seen = []
    for ctx in pairs(top):
        for label in split_strata(ctx):
            m, l = label.m, label.l
            got = oracle.stratum_dim(label, ctx)
            expected = 2 * m * m * l * l - m * l + l
            if got != expected:
                _fail("stratum dimension", pair=str(ctx), stratum=str(label), got=got, expected=expected)
            seen.append(f"(m={m},l={l})->{got}")
    return f"p + q <= {top}: " + ", ".join(seen)


CHECKS: list[tuple[str, Callable[[int], str]]] = [
    ("partitions", check_partitions),
    ("character-orders", check_character_orders),
    ("orbit-enumeration", check_enumeration),
    ("strata", check_strata),
    ("counting-identity", check_counting),
    ("bijection-round-trip", check_bijection),
    ("nilpotent-support", check_nilpotent_support),
    ("cuspidals", check_cuspidals),
    ("levi-laws", check_levi),
    ("parity", check_parity),
    ("orbit-dimension-oracle", check_orbit_dimensions),
    ("stratum-dimension-oracle", check_stratum_dimensions),
]


def run_checks(n_max: int) -> list[CheckResult]:
    if not 1 <= n_max <= N_MAX_BOUND:
        raise ValueError(f"n_max must lie in [1, {N_MAX_BOUND}], got {n_max}")
    results = []
    for name, fn in CHECKS:
        start = time.perf_counter()
        try:
            detail = fn(n_max)
            result = CheckResult(name, True, detail)
        except _Failure as exc:
            result = CheckResult(name, False, exc.detail, exc.counterexample)
        except oracle.NonGenericSample as exc:
            result = CheckResult(name, False, str(exc))
        result.seconds = time.perf_counter() - start
        results.append(result)
    return results

