import pytest
from hypothesis import given, strategies as st

from charsheaves.orbits import (
    DiagramParseError,
    PairContext,
    SignatureMismatch,
    SignedYoungDiagram,
    component_character_set,
    d_lambda,
    enumerate_orbits,
    format_diagram,
    is_richardson,
    orbit_dimension,
    parse_diagram,
    richardson_orbits,
)

P = parse_diagram


def names(ctx):
    return {format_diagram(lam) for lam in enumerate_orbits(ctx)}


def test_enumeration_examples():
    assert names(PairContext(1, 1)) == {"2+^1", "2-^1", "1+^1 1-^1"}
    assert names(PairContext(2, 0)) == {"1+^2"}
    assert names(PairContext(2, 1)) == {"3+^1", "2+^1 1+^1", "2-^1 1+^1", "1+^2 1-^1"}


def test_pair_context_rejects_empty():
    with pytest.raises(ValueError):
        PairContext(0, 0)


@pytest.mark.parametrize("p,q", [(a, n - a) for n in range(1, 9) for a in range(n + 1)])
def test_signature_equations(p, q):
    for lam in enumerate_orbits(PairContext(p, q)):
        plus = sum(a * ((L + 1) // 2) + b * (L // 2) for L, a, b in lam.blocks)
        minus = sum(a * (L // 2) + b * ((L + 1) // 2) for L, a, b in lam.blocks)
        assert (plus, minus) == (p, q)


def test_d_lambda():
    assert d_lambda(P("3+^1")) == 3
    assert d_lambda(P("2+^1 1+^1")) == 1
    assert d_lambda(P("6+^1 4-^1 2+^1 2-^1")) == 2


def test_richardson():
    assert is_richardson(P("3+^1 1-^1"))
    assert not is_richardson(P("2+^1 2-^1"))
    assert not is_richardson(P("1+^2 1-^2"))


def test_orbit_dimension():
    assert orbit_dimension(P("1+^1 1-^1"), PairContext(1, 1)) == 0
    assert orbit_dimension(P("2+^1"), PairContext(1, 1)) == 1
    assert orbit_dimension(P("2+^1 2-^1"), PairContext(2, 2)) == 4
    with pytest.raises(SignatureMismatch):
        orbit_dimension(P("2+^1"), PairContext(2, 1))


def test_component_characters():
    assert len(component_character_set(P("3+^1"), 3)) == 2
    assert component_character_set(P("2+^1 1+^1"), 2) == []
    assert len(component_character_set(P("4+^1"), 1)) == 1


def test_richardson_orbits_subset():
    ctx = PairContext(2, 2)
    r = richardson_orbits(ctx)
    assert set(r) <= set(enumerate_orbits(ctx))
    assert all(is_richardson(lam) for lam in r)


def test_canonical_order_is_deterministic():
    ctx = PairContext(3, 2)
    assert enumerate_orbits(ctx) == enumerate_orbits(PairContext(3, 2))
    assert len(set(enumerate_orbits(ctx))) == len(enumerate_orbits(ctx))


@pytest.mark.parametrize(
    "text,pos",
    [
        ("3+^1 x", 5),
        ("3+1", 2),
        ("1+^1 3+^1", 5),
        ("3+^01", 3),
        ("3+^1  2-^1", 5),
        ("3+^0", 3),
        ("0+^1", 0),
        ("3+^1 ", 4),
        ("3+", 2),
        ("3*^1", 1),
    ],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(DiagramParseError) as info:
        parse_diagram(text)
    assert info.value.position == pos


def test_empty_diagram_text():
    assert format_diagram(parse_diagram("")) == ""
    assert parse_diagram("").is_empty


diagrams = st.integers(1, 9).flatmap(
    lambda n: st.integers(0, n).flatmap(lambda p: st.sampled_from(enumerate_orbits(PairContext(p, n - p))))
)


@given(diagrams)
def test_format_parse_round_trip(lam):
    text = format_diagram(lam)
    assert parse_diagram(text) == lam
    assert SignedYoungDiagram.from_rows(lam.rows()) == lam
