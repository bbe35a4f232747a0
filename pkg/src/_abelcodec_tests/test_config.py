import pytest
from _abelcodec import config
from _abelcodec.oracle import brute_ac
from _abelcodec.parry import apply_power
from _abelcodec.shared import WordLengthLimitExceededError

from _abelcodec_tests._helpers import cached_set_up_substitution


@pytest.fixture()
def restore_max_word_length():
    previous = config.MAX_WORD_LENGTH
    yield
    config.MAX_WORD_LENGTH = previous


def test_default_max_word_length():
    assert config.DEFAULT_MAX_WORD_LENGTH == 10**8
    assert config.resolve_max_length(None) == config.MAX_WORD_LENGTH
    assert config.resolve_max_length(123) == 123


@pytest.mark.usefixtures("restore_max_word_length")
def test_set_max_word_length():
    config.set_max_word_length(20_000)
    assert config.MAX_WORD_LENGTH == 20_000

    phi = cached_set_up_substitution("tribonacci")
    with pytest.raises(WordLengthLimitExceededError):
        apply_power(phi, 17, (0,))
    with pytest.raises(WordLengthLimitExceededError):
        brute_ac(5_000, phi)
    assert len(apply_power(phi, 17, (0,), max_length=10**5)) > 20_000


@pytest.mark.parametrize("max_length", [10**4 - 1, 0, -5, 1.5e6, "100000", True])
def test_set_max_word_length_rejects(max_length):
    with pytest.raises(ValueError):
        config.set_max_word_length(max_length)


def test_resource_dir_contains_registry():
    assert config.PATH_TO_SUBSTITUTIONS.exists()
    assert config.PATH_TO_SUBSTITUTIONS.parent.parent == config.RESOURCE_DIR
