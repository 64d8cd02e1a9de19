from fractions import Fraction

import pytest

from charsheaves.oracle import (
    MatrixRepresentative,
    centralizer_dim_in_k,
    count_orbits_independent,
    jordan_type,
    orbit_dimension_by_centralizer,
    rank,
    representative,
    stratum_dim,
)
from charsheaves.orbits import PairContext, SignatureMismatch, enumerate_orbits, orbit_dimension, parse_diagram
from charsheaves.strata import DualStratumLabel, cs_orbits

P = parse_diagram


def _nonzero(x: MatrixRepresentative):
    return {(i, j) for i, row in enumerate(x.entries) for j, v in enumerate(row) if v}


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[Fraction(1, 3), 1], [1, 3], [0, 1]]) == 2


def test_representative_examples():
    ctx = PairContext(1, 1)
    assert _nonzero(representative(P("1+^1 1-^1"), ctx)) == set()
    # e1 -> f1: column e1 (index 0), row f1 (index 1)
    assert _nonzero(representative(P("2+^1"), ctx)) == {(1, 0)}
    x = representative(P("3+^1"), PairContext(2, 1))
    assert _nonzero(x) == {(2, 0), (1, 2)}
    with pytest.raises(SignatureMismatch):
        representative(P("3+^1"), ctx)


@pytest.mark.parametrize("p,q", [(a, n - a) for n in range(1, 7) for a in range(n + 1)])
def test_representatives_have_right_type(p, q):
    ctx = PairContext(p, q)
    for lam in enumerate_orbits(ctx):
        x = representative(lam, ctx)
        assert x.in_g1()
        assert jordan_type(x) == lam.partition().parts


def test_centralizer_examples():
    assert centralizer_dim_in_k(representative(P("1+^1 1-^1"), PairContext(1, 1))) == 1
    assert centralizer_dim_in_k(representative(P("2+^1"), PairContext(1, 1))) == 0
    assert centralizer_dim_in_k(representative(P("2+^1 2-^1"), PairContext(2, 2))) == 3


@pytest.mark.parametrize("p,q", [(a, n - a) for n in range(1, 7) for a in range(n + 1)])
def test_orbit_dimension_oracle(p, q):
    ctx = PairContext(p, q)
    for lam in enumerate_orbits(ctx):
        assert orbit_dimension_by_centralizer(lam, ctx) == orbit_dimension(lam, ctx)


def test_stratum_dim_examples():
    assert stratum_dim(DualStratumLabel(1, 1), PairContext(1, 1)) == 2
    assert stratum_dim(DualStratumLabel(2, 1), PairContext(2, 2)) == 7
    assert stratum_dim(DualStratumLabel(1, 2), PairContext(2, 2)) == 8


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_split_strata_dimension_formula(p):
    ctx = PairContext(p, p)
    for s in cs_orbits(ctx):
        if s.mu.is_empty:
            m, l = s.m, s.l
            assert stratum_dim(s, ctx) == 2 * m * m * l * l - m * l + l


def test_stratum_with_nilpotent_part_stays_below_g1():
    ctx = PairContext(2, 1)
    assert stratum_dim(DualStratumLabel(1, 1, P("1+^1")), ctx) <= 2 * ctx.p * ctx.q


def test_independent_count():
    assert [count_orbits_independent(PairContext(*pq)) for pq in [(1, 1), (2, 1), (2, 2)]] == [3, 4, 10]
    for n in range(1, 11):
        for a in range(n + 1):
            ctx = PairContext(a, n - a)
            assert count_orbits_independent(ctx) == len(enumerate_orbits(ctx))
