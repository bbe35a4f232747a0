import pytest
from _abelcodec.numeration import (
    digits_from_pattern,
    frep_sort_key,
    frep_value,
    is_normal_frep,
    normalize_frep,
    parse_frep,
    prefix_from_frep,
    render_frep,
    to_normal_frep,
)
from _abelcodec.parry import fixed_point_prefix
from _abelcodec.shared import InvalidRepresentationError, WordLengthLimitExceededError
from _abelcodec.words import parse_word
from hypothesis import given, settings
from hypothesis import strategies as st

from _abelcodec_tests._helpers import SUBSTITUTION_NAMES, cached_set_up_substitution


@pytest.mark.parametrize(
    "n, expected",
    [
        (0, ()),
        (1, (1,)),
        (2, (1, 0)),
        (3, (1, 1)),
        (5, (1, 0, 1)),
        (6, (1, 1, 0)),
        (7, (1, 0, 0, 0)),
        (12, (1, 1, 0, 1)),
        (18, (1, 0, 1, 0, 1)),
        (163, (1, 0, 0, 0, 1, 0, 0, 0, 1)),
        (1867, (1, 0, 0, 0) * 3 + (0,)),
        (1868, (1, 0, 0, 0) * 3 + (1,)),
    ],
)
def test_to_normal_frep_tribonacci(n, expected):
    phi = cached_set_up_substitution("tribonacci")
    assert to_normal_frep(n, phi) == expected


@pytest.mark.parametrize("n, expected", [(5, (1, 2)), (6, (2, 0)), (7, (1, 0, 0))])
def test_to_normal_frep_u2(n, expected):
    phi = cached_set_up_substitution("u2")
    assert to_normal_frep(n, phi) == expected


@pytest.mark.parametrize("n", [-1, 1.5, True, "5"])
def test_to_normal_frep_rejects(n):
    phi = cached_set_up_substitution("tribonacci")
    with pytest.raises(ValueError):
        to_normal_frep(n, phi)


def test_to_normal_frep_handles_huge_numbers():
    phi = cached_set_up_substitution("tribonacci")
    n = 10**60 + 12345
    assert frep_value(to_normal_frep(n, phi), phi) == n


def test_frep_value_accepts_padded_representations():
    phi = cached_set_up_substitution("tribonacci")
    assert frep_value((0, 0, 1, 0, 1), phi) == 5
    assert frep_value((), phi) == 0


def test_frep_value_rejects_large_digits():
    phi = cached_set_up_substitution("tribonacci")
    with pytest.raises(InvalidRepresentationError):
        frep_value((2, 0), phi)


@pytest.mark.parametrize(
    "digits, expected",
    [
        ((1, 0, 1), True),
        ((0, 1, 0, 1), True),
        ((1, 1, 0), True),
        ((1, 1, 1), False),
        ((1, 1, 1, 0), False),
        ((2,), False),
        ((), True),
    ],
)
def test_is_normal_frep_tribonacci(digits, expected):
    phi = cached_set_up_substitution("tribonacci")
    assert is_normal_frep(digits, phi) is expected


@pytest.mark.parametrize(
    "digits, expected",
    [
        ((1, 0, 1), "01020"),
        ((1, 1, 0), "010201"),
        ((1, 0, 0, 0), "0102010"),
        ((1,), "0"),
        ((), ""),
    ],
)
def test_prefix_from_frep_tribonacci(digits, expected):
    phi = cached_set_up_substitution("tribonacci")
    assert prefix_from_frep(digits, phi) == parse_word(expected)


def test_prefix_from_frep_respects_cap():
    phi = cached_set_up_substitution("tribonacci")
    with pytest.raises(WordLengthLimitExceededError):
        prefix_from_frep(to_normal_frep(20_000, phi), phi, max_length=10**4)


@pytest.mark.parametrize("name", SUBSTITUTION_NAMES)
def test_prefix_from_frep_is_prefix_of_fixed_point(name):
    phi = cached_set_up_substitution(name)
    long_prefix = fixed_point_prefix(phi, 400)
    for n in range(1, 401):
        assert prefix_from_frep(to_normal_frep(n, phi), phi) == long_prefix[:n]


@pytest.mark.parametrize("name", SUBSTITUTION_NAMES)
@given(n=st.integers(min_value=0, max_value=10**40))
@settings(max_examples=50, deadline=None)
def test_greedy_representation_is_normal_and_exact(name, n):
    phi = cached_set_up_substitution(name)
    digits = to_normal_frep(n, phi)
    assert frep_value(digits, phi) == n
    assert is_normal_frep(digits, phi)
    assert all(0 <= d <= phi.alpha_0 for d in digits)
    assert not digits or digits[0] > 0


@given(a=st.integers(0, 10**6), b=st.integers(0, 10**6))
def test_frep_sort_key_orders_like_integers(a, b):
    phi = cached_set_up_substitution("tribonacci")
    key_a = frep_sort_key(to_normal_frep(a, phi))
    key_b = frep_sort_key(to_normal_frep(b, phi))
    assert (key_a < key_b) == (a < b)


def test_normalize_frep():
    assert normalize_frep((0, 0, 1, 0)) == (1, 0)
    assert normalize_frep((0, 0)) == ()


def test_digits_from_pattern():
    assert digits_from_pattern((1, 0), 2, (1,)) == (1, 0, 1, 0, 1)
    assert digits_from_pattern((1, 0, 0, 0), 0, (1,)) == (1,)
    with pytest.raises(ValueError):
        digits_from_pattern((1, 0), -1)


@pytest.mark.parametrize(
    "text, expected",
    [("(1,0,1)", (1, 0, 1)), ("1, 0, 1", (1, 0, 1)), ("", ()), ("()", ())],
)
def test_parse_frep(text, expected):
    assert parse_frep(text) == expected
    if expected:
        assert parse_frep(render_frep(expected)) == expected


@pytest.mark.parametrize("text", ["1,a", "(1,-1)", "1;0"])
def test_parse_frep_rejects_malformed_digits(text):
    with pytest.raises(InvalidRepresentationError):
        parse_frep(text)


def test_parse_frep_checks_digits_against_substitution():
    phi = cached_set_up_substitution("tribonacci")
    with pytest.raises(InvalidRepresentationError):
        parse_frep("2,0", phi)
    assert parse_frep("2,0", cached_set_up_substitution("u2")) == (2, 0)
