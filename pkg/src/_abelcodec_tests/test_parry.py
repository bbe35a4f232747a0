import pytest
from _abelcodec.parry import (
    apply_morphism,
    apply_power,
    block_lengths,
    block_lengths_exceeding,
    fixed_point_prefix,
    parry_from_images,
    parse_rules,
    render_substitution,
    u_p_substitution,
    validate_parry,
)
from _abelcodec.shared import InvalidSubstitutionError, WordLengthLimitExceededError
from _abelcodec.words import parse_word

from _abelcodec_tests._helpers import SUBSTITUTION_NAMES, cached_set_up_substitution

TRIBONACCI_LENGTHS = [
    1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927, 1705, 3136, 5768, 10609, 19513
]  # fmt: skip


@pytest.mark.parametrize(
    "name, images",
    [
        ("tribonacci", ["01", "02", "0"]),
        ("simple_2_1_1", ["001", "02", "0"]),
        ("simple_1_0_0_1", ["01", "2", "3", "0"]),
        ("u2", ["001", "2", "01"]),
    ],
)
def test_images_of_registered_substitutions(name, images):
    phi = cached_set_up_substitution(name)
    assert phi.images == tuple(parse_word(image) for image in images)


@pytest.mark.parametrize(
    "kind, m, p, exponents",
    [
        ("simple", 3, None, (1, 1, 1)),
        ("Simple", 3, None, [2, 1, 1]),
        ("nonsimple", 1, 2, (2, 0, 1)),
        ("non-simple", 2, 1, (1, 1, 1)),
        ("non_simple", 1, 1, (3, 3)),
    ],
)
def test_validate_parry_accepts(kind, m, p, exponents):
    phi = validate_parry(kind, m, p, exponents)
    assert phi.exponents == tuple(exponents)
    assert phi.alphabet_size == len(exponents)


@pytest.mark.parametrize(
    "kind, m, p, exponents",
    [
        ("periodic", 3, None, (1, 1, 1)),
        ("simple", 3, None, (1, 1)),
        ("simple", 3, 2, (1, 1, 1)),
        ("simple", 1, None, (1,)),
        ("simple", 3, None, (0, 1, 1)),
        ("simple", 3, None, (1, 2, 1)),
        ("simple", 3, None, (1, 1, 0)),
        ("simple", 3, None, (1, -1, 1)),
        ("non-simple", 1, None, (2, 0, 1)),
        ("non-simple", 1, 0, (2,)),
        ("non-simple", 1, 2, (2, 1, 0, 0)),
        ("non-simple", 2, 1, (1, 1, 0)),
        ("simple", 0, None, ()),
        ("simple", 3, None, ("a", 1, 1)),
    ],
)
def test_validate_parry_rejects(kind, m, p, exponents):
    with pytest.raises(InvalidSubstitutionError):
        validate_parry(kind, m, p, exponents)


def test_invalid_substitution_error_is_a_value_error():
    with pytest.raises(ValueError):
        validate_parry("simple", 3, None, (1, 2, 1))


@pytest.mark.parametrize(
    "rules, kind, m, p, exponents",
    [
        ("0->01;1->02;2->0", "simple", 3, None, (1, 1, 1)),
        ("0->001; 1->2; 2->01;", "non-simple", 1, 2, (2, 0, 1)),
        ("0->01;1->2;2->3;3->0", "simple", 4, None, (1, 0, 0, 1)),
    ],
)
def test_parse_rules(rules, kind, m, p, exponents):
    phi = parse_rules(rules)
    assert (phi.kind, phi.m, phi.p, phi.exponents) == (kind, m, p, exponents)


@pytest.mark.parametrize(
    "rules",
    [
        "0->01;1->10;2->0",
        "0->01;1->02",
        "0->01;2->0",
        "0->01;0->02;1->0",
        "0->01;1->02;2->03",
        "0->01;1->02;2",
        "0->10;1->02;2->0",
        "0->;1->0",
    ],
)
def test_parse_rules_rejects_non_parry_rules(rules):
    with pytest.raises(InvalidSubstitutionError):
        parse_rules(rules)


@pytest.mark.parametrize("name", SUBSTITUTION_NAMES)
def test_render_substitution_is_parsed_back(name):
    phi = cached_set_up_substitution(name)
    assert parse_rules(render_substitution(phi)) == phi


def test_parry_from_images_recognizes_cycle_start():
    phi = parry_from_images([(0, 0, 1), (0, 2), (0, 1)])
    assert phi.kind == "non-simple"
    assert (phi.m, phi.p) == (1, 2)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_u_p_substitution(p):
    phi = u_p_substitution(p)
    assert phi.images == ((0,) * p + (1,), (2,), (0,) * (p - 1) + (1,))


@pytest.mark.parametrize("p", [1, 0, True, 2.0])
def test_u_p_substitution_rejects(p):
    with pytest.raises(InvalidSubstitutionError):
        u_p_substitution(p)


def test_substitutions_are_hashable_and_compare_by_parameters():
    a = validate_parry("simple", 3, None, (1, 1, 1))
    b = parse_rules("0->01;1->02;2->0")
    assert a == b
    assert hash(a) == hash(b)
    assert a != validate_parry("simple", 3, None, (2, 1, 1))


def test_apply_morphism():
    phi = cached_set_up_substitution("tribonacci")
    assert apply_morphism(phi, parse_word("0102")) == parse_word("0102010")
    assert apply_morphism(phi, ()) == ()


def test_apply_morphism_rejects_letters_outside_alphabet():
    phi = cached_set_up_substitution("tribonacci")
    with pytest.raises(ValueError):
        apply_morphism(phi, (0, 3))


def test_apply_morphism_respects_cap():
    phi = cached_set_up_substitution("u2")
    with pytest.raises(WordLengthLimitExceededError) as e:
        apply_morphism(phi, (0,) * 4_000, max_length=10**4)
    assert e.value.length == 12_000
    assert len(apply_morphism(phi, (0,) * 3_000, max_length=10**4)) == 9_000


@pytest.mark.parametrize(
    "k, expected",
    [
        (0, "0"),
        (1, "01"),
        (2, "0102"),
        (3, "0102010"),
        (4, "0102010010201"),
    ],
)
def test_apply_power_tribonacci(k, expected):
    phi = cached_set_up_substitution("tribonacci")
    assert apply_power(phi, k, (0,)) == parse_word(expected)


def test_apply_power_is_composition():
    phi = cached_set_up_substitution("u2")
    word = parse_word("0120")
    assert apply_power(phi, 3, word) == apply_morphism(
        phi, apply_morphism(phi, apply_morphism(phi, word))
    )


def test_apply_power_respects_cap():
    phi = cached_set_up_substitution("tribonacci")
    with pytest.raises(WordLengthLimitExceededError) as e:
        apply_power(phi, 20, (0,), max_length=10**4)
    assert e.value.max_length == 10**4
    assert e.value.length > 10**4


def test_apply_power_rejects_negative_power():
    phi = cached_set_up_substitution("tribonacci")
    with pytest.raises(ValueError):
        apply_power(phi, -1, (0,))


def test_block_lengths_tribonacci():
    phi = cached_set_up_substitution("tribonacci")
    table = block_lengths(phi, len(TRIBONACCI_LENGTHS) - 1)
    assert list(table) == TRIBONACCI_LENGTHS
    assert len(table) == len(TRIBONACCI_LENGTHS)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("u2", [1, 3, 7, 16]),
        ("simple_2_1_1", [1, 3, 8, 20]),
        ("simple_1_0_0_1", [1, 2, 3, 4, 5, 7]),
    ],
)
def test_block_lengths(name, expected):
    phi = cached_set_up_substitution(name)
    assert list(block_lengths(phi, len(expected) - 1)) == expected


@pytest.mark.parametrize("name", SUBSTITUTION_NAMES)
def test_block_lengths_match_materialized_words(name):
    phi = cached_set_up_substitution(name)
    table = block_lengths(phi, 8)
    assert [len(apply_power(phi, k, (0,))) for k in range(9)] == list(table)


@pytest.mark.parametrize("n", [0, 1, 6, 7, 12, 13, 10**6])
def test_block_lengths_exceeding(n):
    phi = cached_set_up_substitution("tribonacci")
    table = block_lengths_exceeding(phi, n)
    assert table[-1] > n
    assert len(table) == 1 or table[-2] <= n


def test_block_lengths_handle_huge_powers_without_words():
    phi = cached_set_up_substitution("tribonacci")
    assert block_lengths(phi, 300)[300] > 10**70


@pytest.mark.parametrize("name", SUBSTITUTION_NAMES)
def test_fixed_point_prefix_is_prefix_of_longer_prefix(name):
    phi = cached_set_up_substitution(name)
    long_prefix = fixed_point_prefix(phi, 500)
    assert len(long_prefix) == 500
    for length in [0, 1, 2, 17, 100]:
        assert fixed_point_prefix(phi, length) == long_prefix[:length]


def test_fixed_point_prefix_starts_with_image_of_zero():
    phi = cached_set_up_substitution("u2")
    assert fixed_point_prefix(phi, 7) == parse_word("0010012")


@pytest.mark.parametrize(
    "name, expected",
    [("tribonacci", 3), ("simple_1_0_0_1", 4), ("u2", 3)],
)
def test_synchronizing_power(name, expected):
    assert cached_set_up_substitution(name).synchronizing_power == expected


@pytest.mark.parametrize("name", SUBSTITUTION_NAMES)
def test_synchronizing_power_images_begin_with_zero(name):
    phi = cached_set_up_substitution(name)
    for letter in range(phi.alphabet_size):
        assert apply_power(phi, phi.synchronizing_power, (letter,))[0] == 0, letter


@pytest.mark.parametrize("name", SUBSTITUTION_NAMES)
def test_block_lengths_grow_by_less_than_alpha_0_plus_one(name):
    phi = cached_set_up_substitution(name)
    table = list(block_lengths(phi, 40))
    assert all(a < b for a, b in zip(table, table[1:]))
    assert table[1] == phi.alpha_0 + 1
    for k in range(len(table) - 1):
        assert table[k + 1] <= (phi.alpha_0 + 1) * table[k], k
        if k >= phi.synchronizing_power:
            assert table[k + 1] < (phi.alpha_0 + 1) * table[k], k


@pytest.mark.parametrize("name", SUBSTITUTION_NAMES)
def test_to_spec_and_str(name):
    phi = cached_set_up_substitution(name)
    assert str(phi) == phi.to_spec()
    assert phi.to_spec().startswith("simple" if phi.is_simple else "nonsimple")
