from fractions import Fraction

import pytest

from densdel.errors import ParseError
from densdel.rational import (
    Cost,
    frac_str,
    parse_frac,
    simplest_between,
    total_cost,
)


def test_parse_and_render():
    assert parse_frac("3/2") == Fraction(3, 2)
    assert parse_frac("7") == Fraction(7)
    assert frac_str(Fraction(3, 2)) == "3/2"
    assert frac_str(Fraction(2)) == "2/1"
    with pytest.raises(ParseError):
        parse_frac("x/y")
    with pytest.raises(ParseError):
        parse_frac("1/0")


def test_simplest_between():
    assert simplest_between(Fraction(1, 3), Fraction(1, 2)) == Fraction(1, 2)
    assert simplest_between(Fraction(5, 2), Fraction(7, 2)) == Fraction(3)
    assert simplest_between(Fraction(3, 2), Fraction(3, 2)) == Fraction(3, 2)
    assert simplest_between(Fraction(0), Fraction(1, 7)) == Fraction(0)
    # the densest-subgraph use case: a tiny interval around a snap target
    lo = Fraction(31, 15) - Fraction(1, 1000)
    hi = Fraction(31, 15) + Fraction(1, 1000)
    assert simplest_between(lo, hi) == Fraction(31, 15)


def test_simplest_between_is_minimal_denominator():
    import random

    rng = random.Random(7)
    for _ in range(200):
        a = Fraction(rng.randint(0, 50), rng.randint(1, 20))
        b = a + Fraction(rng.randint(0, 10), rng.randint(1, 25))
        got = simplest_between(a, b)
        assert a <= got <= b
        for q in range(1, got.denominator):
            p_lo = (a * q).__ceil__()
            assert Fraction(p_lo, q) > b or p_lo > b * q


def test_costs():
    assert Cost(2) + Cost(Fraction(1, 2)) == Cost(Fraction(5, 2))
    inf = Cost.infinite()
    assert (inf + Cost(3)).is_infinite()
    assert Cost(3) < inf
    assert not inf < inf
    assert str(inf) == "inf"
    assert str(Cost(Fraction(1, 2))) == "1/2"
    assert Cost.parse("inf").is_infinite()
    assert Cost.parse("3/4") == Cost(Fraction(3, 4))
    assert sum([Cost(1), Cost(2)], Cost(0)) == Cost(3)
    assert total_cost({0: Cost(1), 1: inf}, [0, 1]).is_infinite()
    with pytest.raises(ValueError):
        Cost(-1)
