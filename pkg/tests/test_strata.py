import pytest

from charsheaves.orbits import EMPTY_DIAGRAM, PairContext, format_diagram, parse_diagram
from charsheaves.strata import (
    DualStratumLabel,
    case_collisions,
    cs_orbits,
    is_valid_for,
    merged_diagram,
    pi1_data,
    strata_for_central_order,
)

P = parse_diagram
L = DualStratumLabel


def test_cs_orbits_examples():
    s21 = set(cs_orbits(PairContext(2, 1)))
    assert L(1, 1, P("1+^1")) in s21
    for mu in ("3+^1", "2+^1 1+^1", "2-^1 1+^1"):
        assert L(1, 0, P(mu)) in s21
    assert L(3, 0, P("3+^1")) in s21
    assert L(1, 1) in set(cs_orbits(PairContext(1, 1)))
    assert all(not s.mu.is_empty for s in cs_orbits(PairContext(3, 1)))


def test_pi1_examples():
    assert tuple(vars(pi1_data(L(1, 1))).values()) == (1, 2)
    d = pi1_data(L(3, 0, P("3+^1")))
    assert (d.braid_rank, d.cyclic_modulus) == (0, 3)
    d = pi1_data(L(3, 1, P("6+^1")))
    assert (d.braid_rank, d.cyclic_modulus) == (1, 6)


def test_merged_diagram_examples():
    assert format_diagram(merged_diagram(L(1, 1, P("1+^1")))) == "1+^2 1-^1"
    assert format_diagram(merged_diagram(L(2, 1))) == "2+^1 2-^1"
    assert format_diagram(merged_diagram(L(1, 2))) == "1+^2 1-^2"


@pytest.mark.parametrize("p,q", [(a, n - a) for n in range(1, 10) for a in range(n + 1)])
def test_merged_signature_matches_pair(p, q):
    ctx = PairContext(p, q)
    labels = cs_orbits(ctx)
    assert len(set(labels)) == len(labels)
    for s in labels:
        assert merged_diagram(s).signature == (p, q)
        assert is_valid_for(s, ctx)


def test_label_validation():
    with pytest.raises(ValueError):
        L(1, 0, EMPTY_DIAGRAM)
    with pytest.raises(ValueError):
        L(0, 1)


def test_even_orders_only_for_equal_rank():
    assert strata_for_central_order(PairContext(3, 1), 2) == []
    assert strata_for_central_order(PairContext(2, 2), 2) == [L(1, 2)]


def test_collisions_are_kept_once():
    ctx = PairContext(2, 2)
    collisions = case_collisions(ctx)
    assert collisions
    labels = cs_orbits(ctx)
    for c in collisions:
        assert labels.count(c) == 1
