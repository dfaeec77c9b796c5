"""Factored-product parsing and printing."""

import random
from fractions import Fraction

import pytest

from rlct import (
    ArrangementSpec,
    NonlinearFactorError,
    ParseError,
    RationalMatrix,
    UnknownVariableError,
    format_factored_product,
    normalize,
    parse_factored_product,
)

F = Fraction


class TestParse:
    def test_four_planes(self):
        spec = parse_factored_product("x*y^2*z^2*(x+y+z)")
        assert spec.normals == RationalMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
        assert spec.multiplicities == (1, 2, 2, 1)
        assert spec.offsets == (F(0),) * 4
        assert spec.variables == ("x", "y", "z")

    def test_single_variable(self):
        spec = parse_factored_product("x")
        assert spec.normals == RationalMatrix([[1]])
        assert spec.multiplicities == (1,)

    def test_four_lines(self):
        spec = parse_factored_product("x*y*(x+y)*(x-y)")
        assert spec.n == 4
        assert spec.multiplicities == (1, 1, 1, 1)
        assert spec.normals.row(3) == (F(1), F(-1))

    def test_juxtaposition(self):
        starred = parse_factored_product("x*y^2*z^2*(x+y+z)")
        spaced = parse_factored_product("x y^2 z^2 (x+y+z)")
        assert spaced == starred

    def test_adjacent_name_is_one_variable(self):
        spec = parse_factored_product("xy")
        assert spec.dim == 1
        assert spec.variables == ("xy",)

    def test_vars_declaration_controls_order(self):
        spec = parse_factored_product("vars x, y, z; z*y")
        assert spec.variables == ("x", "y", "z")
        assert spec.normals == RationalMatrix([[0, 0, 1], [0, 1, 0]])

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError):
            parse_factored_product("vars x, y; x*w")

    def test_affine_factor(self):
        spec = parse_factored_product("x*(x-1)")
        assert spec.offsets == (F(0), F(-1))

    def test_rational_coefficients(self):
        spec = parse_factored_product("(1/2*x + y - 3/4)")
        assert spec.normals == RationalMatrix([[F(1, 2), 1]])
        assert spec.offsets == (F(-3, 4),)

    def test_coefficient_juxtaposition(self):
        spec = parse_factored_product("(2x + 1/2 y)")
        assert spec.normals == RationalMatrix([[2, F(1, 2)]])

    def test_zero_exponent_drops_after_normalize(self):
        arr = normalize(parse_factored_product("vars x, y; y^0*x"))
        assert arr.normals == RationalMatrix([[1, 0]])
        assert arr.multiplicities == (1,)
        assert arr.dim == 2

    def test_repeated_factor_multiplicities_merge(self):
        arr = normalize(parse_factored_product("x*x^2"))
        assert arr.multiplicities == (3,)

    def test_vars_is_a_variable_without_semicolon(self):
        spec = parse_factored_product("vars")
        assert spec.variables == ("vars",)


class TestParseErrors:
    def test_syntax_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_factored_product("x*)y")
        assert err.value.position == 2

    def test_unexpected_character(self):
        with pytest.raises(ParseError):
            parse_factored_product("x$y")

    def test_unbalanced_parenthesis(self):
        with pytest.raises(ParseError):
            parse_factored_product("(x+y")

    def test_negative_exponent(self):
        with pytest.raises(ParseError):
            parse_factored_product("x^-2")

    @pytest.mark.parametrize("text", ["(x*y)", "(x^2+y)", "(x y)", "(2*x*y)"])
    def test_nonlinear_factor(self, text):
        with pytest.raises(NonlinearFactorError):
            parse_factored_product(text)

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_factored_product("   ")


class TestFormatRoundTrip:
    def test_named_examples(self):
        for text in ["x*y", "x*y^2*z^2*(x+y+z)", "x*(x-1)", "(x + 1/2*y - 3)^4*(y - 2)"]:
            arr = normalize(parse_factored_product(text))
            printed = format_factored_product(arr)
            assert normalize(parse_factored_product(printed)) == arr

    def test_unused_variable_survives(self):
        arr = normalize(parse_factored_product("vars x, y; y"))
        printed = format_factored_product(arr)
        again = normalize(parse_factored_product(printed))
        assert again == arr
        assert again.dim == 2

    def test_random_round_trips(self):
        rng = random.Random(321)
        for _ in range(60):
            d = rng.randint(1, 4)
            n = rng.randint(1, 5)
            rows, offsets, mults = [], [], []
            for _ in range(n):
                while True:
                    row = [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(d)]
                    if any(row):
                        break
                rows.append(row)
                offsets.append(F(rng.randint(-2, 2), rng.randint(1, 2)))
                mults.append(rng.randint(1, 4))
            arr = normalize(ArrangementSpec(rows, mults, offsets=offsets))
            printed = format_factored_product(arr)
            assert normalize(parse_factored_product(printed)) == arr
