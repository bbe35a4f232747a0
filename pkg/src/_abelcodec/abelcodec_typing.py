from typing import Union

import numpy

Word = tuple[int, ...]
ParikhVector = tuple[int, ...]
RelativeParikhVector = tuple[int, ...]
FDigits = tuple[int, ...]

WordLike = Union[Word, list[int], str, numpy.ndarray]


def check_word_has_expected_type(word) -> bool:
    """Checks whether a word is already in the internal representation.

    Parameters
    ----------
    word : object
        Word provided by the user.

    Returns
    -------
    Bool

    """
    return isinstance(word, tuple) and all(
        isinstance(letter, int) and not isinstance(letter, bool) and letter >= 0
        for letter in word
    )


def convert_to_word(word: WordLike, alphabet_size: int | None = None) -> Word:
    """Convert user input to the internal word representation, a tuple of ints.

    Strings are read as digit strings (``"0102"``) unless they contain commas, in which
    case they are read as comma-separated letters (``"0,10,2"``).

    Parameters
    ----------
    word : tuple, list, str or numpy.ndarray
        Some word.
    alphabet_size : int, optional
        If given, every letter must be smaller.

    Returns
    -------
    out : tuple of int

    """
    if check_word_has_expected_type(word):
        out = word
    else:
        basic_error_msg = f"Conversion of {word!r} to a word failed."
        if isinstance(word, str):
            stripped = word.strip()
            items = stripped.split(",") if "," in stripped else list(stripped)
        elif isinstance(word, numpy.ndarray):
            if word.ndim != 1 or not numpy.issubdtype(word.dtype, numpy.integer):
                raise ValueError(
                    basic_error_msg + " Only one-dimensional integer arrays are "
                    "supported."
                )
            items = word.tolist()
        elif isinstance(word, (list, tuple)):
            items = list(word)
        else:
            raise ValueError(basic_error_msg + f" Type {type(word)} is not supported.")

        try:
            out = tuple(int(str(item).strip()) for item in items)
        except ValueError as e:
            raise ValueError(basic_error_msg) from e
        if any(letter < 0 for letter in out):
            raise ValueError(basic_error_msg + " Letters must be non-negative.")

    if alphabet_size is not None and any(letter >= alphabet_size for letter in out):
        raise ValueError(
            f"The word {out!r} contains letters outside the alphabet "
            f"{{0, ..., {alphabet_size - 1}}}."
        )

    return out
