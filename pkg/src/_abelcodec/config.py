from __future__ import annotations

from pathlib import Path

# Defaults
DEFAULT_MAX_WORD_LENGTH = 10**8
MIN_MAX_WORD_LENGTH = 10**4
MAX_WORD_LENGTH = DEFAULT_MAX_WORD_LENGTH


def set_max_word_length(max_length: int):
    """Set the maximal number of letters any operation may materialize.

    max_length (int): Must be an integer of at least ``MIN_MAX_WORD_LENGTH``.

    """
    if isinstance(max_length, bool) or not isinstance(max_length, int):
        raise ValueError(f"The word length cap must be an int but is {max_length!r}.")
    if max_length < MIN_MAX_WORD_LENGTH:
        raise ValueError(
            f"The word length cap must be at least {MIN_MAX_WORD_LENGTH} but is "
            f"{max_length}."
        )

    global MAX_WORD_LENGTH
    MAX_WORD_LENGTH = max_length


def resolve_max_length(max_length: int | None) -> int:
    """Return the per-call override if given, the global cap otherwise."""
    return MAX_WORD_LENGTH if max_length is None else max_length


# Obtain the root directory of the package.
RESOURCE_DIR = Path(__file__).parent.resolve()

PATH_TO_SUBSTITUTIONS = RESOURCE_DIR / "parameters" / "substitutions.yaml"

SUPPORTED_KINDS = ("simple", "non-simple")
SUPPORTED_METHODS = ("codec", "oracle", "both")
SUPPORTED_OUTPUT_FORMATS = ("text", "csv", "json")

# Alphabets up to this size render words as plain digit strings.
MAX_ALPHABET_SIZE_FOR_DIGIT_RENDERING = 10

EXIT_CODES = {
    "ok": 0,
    "usage": 2,
    "invalid_substitution": 3,
    "resource_cap": 4,
    "mismatch": 5,
}

DEFAULT_SUBSTITUTION = "tribonacci"
