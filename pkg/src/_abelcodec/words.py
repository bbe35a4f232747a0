"""Word algebra on tuples of integer letters."""
from collections.abc import Iterable

from _abelcodec.abelcodec_typing import (
    ParikhVector,
    RelativeParikhVector,
    Word,
    convert_to_word,
)
from _abelcodec.config import MAX_ALPHABET_SIZE_FOR_DIGIT_RENDERING

EMPTY_WORD: Word = ()


def parikh(w: Word, alphabet_size: int) -> ParikhVector:
    """Count the occurrences of every letter of the alphabet in a word.

    Parameters
    ----------
    w : tuple of int
        Some word.
    alphabet_size : int
        Number of letters of the ambient alphabet.

    Returns
    -------
    tuple of int
        Component ``l`` is the number of occurrences of letter ``l`` in `w`.

    """
    counts = [0] * alphabet_size
    for letter in w:
        if not 0 <= letter < alphabet_size:
            raise ValueError(
                f"The word {render_word(w)!r} contains letters outside the alphabet "
                f"{{0, ..., {alphabet_size - 1}}}."
            )
        counts[letter] += 1
    return tuple(counts)


def relative_parikh(
    w: Word, reference: Word, alphabet_size: int
) -> RelativeParikhVector:
    """Parikh vector of `w` minus the Parikh vector of an equally long reference."""
    if len(w) != len(reference):
        raise ValueError(
            f"Relative Parikh vectors compare words of equal length, but "
            f"{render_word(w)!r} has length {len(w)} and {render_word(reference)!r} "
            f"has length {len(reference)}."
        )
    return tuple(
        a - b
        for a, b in zip(
            parikh(w, alphabet_size), parikh(reference, alphabet_size), strict=True
        )
    )


def concatenate(*words: Word) -> Word:
    return tuple(letter for w in words for letter in w)


def is_prefix(x: Word, v: Word) -> bool:
    return len(x) <= len(v) and v[: len(x)] == x


def is_suffix(x: Word, v: Word) -> bool:
    return len(x) <= len(v) and v[len(v) - len(x) :] == x


def left_cancel(x: Word, v: Word) -> Word:
    """Return the word ``x^{-1} v``, i.e. the unique `y` with ``x y = v``."""
    if not is_prefix(x, v):
        raise ValueError(
            f"Cannot cancel {render_word(x)!r} on the left of {render_word(v)!r}: it "
            "is not a prefix."
        )
    return v[len(x) :]


def right_cancel(v: Word, x: Word) -> Word:
    """Return the word ``v x^{-1}``, i.e. the unique `y` with ``y x = v``."""
    if not is_suffix(x, v):
        raise ValueError(
            f"Cannot cancel {render_word(x)!r} on the right of {render_word(v)!r}: it "
            "is not a suffix."
        )
    return v[: len(v) - len(x)]


def factors_of_length(w: Word, n: int) -> set[Word]:
    """Collect all distinct contiguous subwords of length `n`."""
    if n < 0:
        raise ValueError(f"Factor length must be non-negative but is {n}.")
    if n > len(w):
        return set()
    return {w[i : i + n] for i in range(len(w) - n + 1)}


def render_word(w: Iterable[int], alphabet_size: int | None = None) -> str:
    """Render a word as text.

    Words over alphabets with at most ten letters are rendered as digit strings, others
    as comma-separated integers. Without `alphabet_size` the largest letter decides.

    """
    w = tuple(w)
    if alphabet_size is None:
        alphabet_size = max(w, default=0) + 1
    if alphabet_size <= MAX_ALPHABET_SIZE_FOR_DIGIT_RENDERING:
        return "".join(str(letter) for letter in w)
    return ",".join(str(letter) for letter in w)


def parse_word(text: str, alphabet_size: int | None = None) -> Word:
    """Inverse of :func:`render_word`."""
    return convert_to_word(text, alphabet_size=alphabet_size)
