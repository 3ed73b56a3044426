"""CLI: expression parsing, dispatch, exit codes, JSON determinism."""

import json
import random
import string

import pytest

from galoiskit.errors import ParseError
from galoiskit.numbers import QQ, PrimeField
from galoiskit.poly import Poly, render
from galoiskit.cli import dispatch, parse_poly


def q(coeffs):
    return Poly(QQ, coeffs)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def test_parse_basic():
    assert parse_poly("t^4 - 2") == q([-2, 0, 0, 0, 1])
    assert parse_poly("9 + 14*t - 8*t^3") == q([9, 14, 0, -8])
    assert parse_poly("t^2 - 2", PrimeField(3)) == Poly(PrimeField(3), [1, 0, 1])
    assert parse_poly("1/2*t + 1/3") == q([__import__("fractions").Fraction(1, 3), __import__("fractions").Fraction(1, 2)])
    assert parse_poly("(t - 1)*(t + 1)") == q([-1, 0, 1])
    assert parse_poly("-t^2") == -q([0, 0, 1])
    assert parse_poly("2^3") == q([8])
    assert parse_poly("0") == q([])


def test_unary_minus_binds_looser_than_power():
    # -2^2 parses as -(2^2) = -4
    assert parse_poly("-2^2") == q([-4])


def test_parse_rejects_implicit_multiplication():
    with pytest.raises(ParseError):
        parse_poly("2t")
    with pytest.raises(ParseError):
        parse_poly("t t")


def test_parse_errors_carry_position_and_expected():
    try:
        parse_poly("t + ")
        assert False
    except ParseError as exc:
        assert exc.position == 4
        assert exc.expected
    with pytest.raises(ParseError):
        parse_poly("t ^ t")  # exponent must be a nonnegative integer literal
    with pytest.raises(ParseError):
        parse_poly("t / 2")  # '/' only inside rational literals
    with pytest.raises(ParseError):
        parse_poly("1/0")
    with pytest.raises(ParseError):
        parse_poly("x + 1")


def test_parse_render_roundtrip_random():
    rng = random.Random(3)
    for _ in range(60):
        deg = rng.randint(0, 6)
        f = q([rng.randint(-9, 9) for _ in range(deg + 1)])
        assert parse_poly(render(f)) == f
    F5 = PrimeField(5)
    for _ in range(30):
        f = Poly(F5, [rng.randrange(5) for _ in range(rng.randint(1, 6))])
        assert parse_poly(render(f), F5) == f


def test_parser_fuzz_never_crashes():
    rng = random.Random(11)
    alphabet = "0123456789t+-*^()/ " + string.ascii_lowercase
    for _ in range(300):
        src = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 25)))
        try:
            parse_poly(src)
        except ParseError:
            pass  # only controlled failures


# ---------------------------------------------------------------------------
# dispatch + exit codes
# ---------------------------------------------------------------------------


def test_galois_command(capsys):
    assert dispatch(["galois", "t^4-2"]) == 0
    out = capsys.readouterr().out
    assert "order 8, type D4" in out


def test_solvable_command(capsys):
    assert dispatch(["solvable", "t^5-6*t+3"]) == 0
    out = capsys.readouterr().out
    assert "NOT solvable by radicals (Galois group S5)" in out


def test_gf_command(capsys):
    assert dispatch(["gf", "2", "2", "--generator"]) == 0
    out = capsys.readouterr().out
    assert "t^2 + t + 1" in out
    assert "generator: a" in out


def test_factor_command_fp(capsys):
    assert dispatch(["--field", "F3", "factor", "t^2-2"]) == 0
    out = capsys.readouterr().out
    assert "t^2 + 1" in out


def test_irreducible_command(capsys):
    assert dispatch(["irreducible", "t^3 - 10"]) == 0
    out = capsys.readouterr().out
    assert "irreducible" in out


def test_minpoly_command(capsys):
    assert dispatch(["minpoly", "t^2-2", "t^2-3"]) == 0
    out = capsys.readouterr().out
    assert "degree 4" in out
    assert "t^4 - 10*t^2 + 1" in out


def test_splitting_field_command(capsys):
    assert dispatch(["splitting-field", "t^3-2"]) == 0
    out = capsys.readouterr().out
    assert "degree 6" in out


def test_correspondence_command(capsys):
    assert dispatch(["correspondence", "(t^2+1)*(t^2-2)"]) == 0
    out = capsys.readouterr().out
    assert "mutually inverse: True" in out


def test_construct_commands(capsys):
    assert dispatch(["construct", "classic"]) == 0
    assert dispatch(["construct", "ngon", "17"]) == 0
    out = capsys.readouterr().out
    assert "True" in out
    assert dispatch(["construct", "degree", "t^3-2"]) == 0
    out = capsys.readouterr().out
    assert "not_constructible" in out


def test_exit_codes(capsys):
    assert dispatch(["factor", "2t"]) == 2  # parse error
    capsys.readouterr()
    assert dispatch(["solvable", "t^7 - 2*t + 2"]) == 3  # degree cap
    capsys.readouterr()
    assert dispatch(["--json", "galois", "t^4-2"]) == 0


def test_json_byte_determinism(capsys):
    outputs = []
    for _ in range(2):
        assert dispatch(["--json", "galois", "t^4-2"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    payload = json.loads(outputs[0])
    assert payload["order"] == 8
    assert payload["type"] == "D4"


def test_json_schema_fields(capsys):
    assert dispatch(["--json", "splitting-field", "t^3-2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"degree", "tower", "roots", "multiplicities", "polynomial"}
    assert dispatch(["--json", "solvable", "t^5-6*t+3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"input", "verdict", "evidence_kind", "evidence_data", "axioms"}


def test_cli_fuzz_returns_clean_codes(capsys):
    rng = random.Random(23)
    alphabet = "0123456789t+-*^()/xyz "
    for _ in range(40):
        src = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 15)))
        code = dispatch(["factor", src])
        capsys.readouterr()
        assert code in (0, 2, 3)
