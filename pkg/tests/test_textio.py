import json
import random
import string

import pytest
from hypothesis import given, settings, strategies as st

from transpoly import (
    OMEGA,
    ZERO,
    Ordinal,
    ParseError,
    SchemaError,
    TranspolyError,
    family,
    from_json,
    monomial,
    parse_ordinal,
    parse_poly,
    parse_surint,
    print_poly,
    print_surint,
    to_json,
)
from transpoly.errors import UnboundName
from transpoly.textio import Parser
from strategies import canonical_values, surints

W = OMEGA
ALT = family([1], -1, W - 2, 2, None)


@pytest.mark.parametrize(
    "text, value",
    [("0", W * 0), ("w - 2", W - 2), ("3*w + 1", W * 3 + 1), ("w*3", W * 3), ("-w^2 + w", W - W * 0 - parse_surint("w^2"))],
)
def test_parse_surint(text, value):
    assert parse_surint(text) == value


def test_parse_nested_exponent():
    s = parse_surint("w^(w) - w + 3")
    assert print_surint(s) == "w^(w) - w + 3"
    assert s.leading_exponent == Ordinal.omega_power(1)
    assert parse_ordinal("w^(w + 1)*2 + 5") == parse_surint("w^(w+1)*2 + 5").to_ordinal()


@pytest.mark.parametrize(
    "text, expected",
    [
        ("X^(w)", monomial(1, W)),
        ("X^(2) + 1", monomial(1, 2) + 1),
        ("sum(n<w, (-1)^n * X^(w - 2*(n+1)))", ALT),
        ("sum(n<w, -(1/2)^n * X^(w - n))", family([-1], "1/2", W, 1, None)),
        ("sum(n<3, 2 * X^(5 - 2*n))", family([2], 1, 5, 2, 3)),
        ("sum(n<w, (1 + 2*n) * (3)^n * X^(w*2 + 1 - 2*n))", family([1, 2], 3, W * 2 + 1, 2, None)),
    ],
)
def test_parse_poly(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize(
    "value, text",
    [
        (ZERO, "0"),
        (monomial(1, W), "X^(w)"),
        (monomial(-1, 1), "-X"),
        (ALT, "sum(n<w, (-1)^n * X^(w - 2*(n+1)))"),
        (monomial("1/2", W - 1), "1/2*X^(w - 1)"),
    ],
)
def test_print_poly(value, text):
    assert print_poly(value) == text


@pytest.mark.parametrize(
    "text, offset",
    [("X^(", 3), ("X + + 1", 4), ("sum(n<w, X^(w + n))", 9), ("1/0", 2), ("X^(-1)", 2), ("w^(w - 1)", 3)],
)
def test_parse_errors_point_at_the_problem(text, offset):
    with pytest.raises(ParseError) as info:
        parse_poly(text) if text[0] != "w" else parse_surint(text)
    assert info.value.offset == offset
    again = pytest.raises(ParseError, parse_poly if text[0] != "w" else parse_surint, text)
    assert str(again.value) == str(info.value)


def test_unbound_and_bound_names():
    with pytest.raises(UnboundName) as info:
        parse_poly("X + foo")
    assert info.value.offset == 4 and "foo" in str(info.value)
    assert parse_poly("2*a + 1", {"a": ALT}) == ALT * 2 + 1


def test_prefix_parsing_stops_at_the_next_argument():
    p = Parser("X^(w) X^(2)+1")
    assert p.poly() == monomial(1, W)
    assert p.poly() == monomial(1, 2) + 1
    assert p.at_end()


def test_json_schema_instance():
    assert json.loads(to_json(ZERO)) == {"schemaVersion": 1, "families": []}
    assert json.loads(to_json(ALT))["families"] == [
        {"coeffPoly": ["1/1"], "ratio": "-1/1", "startExp": "w - 2", "step": 2, "length": "omega"}
    ]
    assert from_json('{"families":[]}') == ZERO


@pytest.mark.parametrize(
    "doc, path",
    [
        ("[", "$"),
        ('{"families": 3}', "$.families"),
        ('{"families":[{"coeffPoly":["1/0"],"ratio":"1","startExp":"w","step":1,"length":"omega"}]}', "$.families[0].coeffPoly[0]"),
        ('{"families":[{"coeffPoly":["1"],"ratio":"1","startExp":"w","step":0,"length":"omega"}]}', "$.families[0].step"),
        ('{"families":[{"coeffPoly":["1"],"ratio":"1","startExp":"3","step":1,"length":"omega"}]}', "$.families[0]"),
        ('{"schemaVersion":2,"families":[]}', "$.schemaVersion"),
    ],
)
def test_schema_errors_carry_a_path(doc, path):
    with pytest.raises(SchemaError) as info:
        from_json(doc)
    assert info.value.path == path


@given(canonical_values)
@settings(max_examples=150, deadline=None)
def test_text_round_trip(p):
    assert parse_poly(print_poly(p)) == p


@given(canonical_values)
@settings(max_examples=150, deadline=None)
def test_json_round_trip(p):
    assert from_json(to_json(p)) == p


@given(surints)
def test_surint_round_trip(s):
    assert parse_surint(print_surint(s)) == s


@given(canonical_values, canonical_values)
@settings(max_examples=60, deadline=None)
def test_printing_is_injective(a, b):
    if a != b:
        assert print_poly(a) != print_poly(b)


@given(st.text(alphabet=string.printable + "ω", max_size=40))
@settings(max_examples=300, deadline=None)
def test_parser_is_total(text):
    try:
        parse_poly(text)
    except TranspolyError:
        pass
    except (ValueError, RecursionError):
        pass
