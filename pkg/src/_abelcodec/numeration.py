"""Greedy normal representations of integers in the base ``F_k = |phi^k(0)|``.

Digit sequences are stored most significant digit first, ``(d_N, ..., d_1, d_0)``.

"""
from __future__ import annotations

from collections.abc import Sequence

from _abelcodec.abelcodec_typing import FDigits, Word
from _abelcodec.parry import (
    ParrySubstitution,
    apply_power,
    block_lengths,
    block_lengths_exceeding,
    fail_if_word_too_long,
)
from _abelcodec.shared import InvalidRepresentationError, parse_to_tuple_of_ints


def to_normal_frep(n: int, phi: ParrySubstitution) -> FDigits:
    """Compute the normal F-representation of `n` by the greedy algorithm.

    Parameters
    ----------
    n : int
        A non-negative integer of arbitrary size.
    phi : ParrySubstitution
        The substitution defining the base.

    Returns
    -------
    tuple of int
        Digits without leading zeros; the empty tuple for ``n = 0``.

    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer but is {n!r}.")
    if n == 0:
        return ()

    table = block_lengths_exceeding(phi, n)
    top = len(table) - 2

    digits = []
    remainder = n
    for i in range(top, -1, -1):
        digit, remainder = divmod(remainder, table[i])
        digits.append(digit)

    return tuple(digits)


def frep_value(digits: Sequence[int], phi: ParrySubstitution) -> int:
    """Evaluate ``sum d_i F_i``; padded representations are accepted."""
    digits = validated_digits(digits, phi)
    if not digits:
        return 0
    table = block_lengths(phi, len(digits) - 1)
    return sum(d * table[i] for i, d in zip(range(len(digits) - 1, -1, -1), digits))


def prefix_from_frep(
    digits: Sequence[int], phi: ParrySubstitution, max_length: int | None = None
) -> Word:
    """Build the prefix ``u_[n] = (phi^N(0))^{d_N} ... (phi(0))^{d_1} 0^{d_0}``."""
    digits = normalize_frep(validated_digits(digits, phi))
    length = frep_value(digits, phi)
    fail_if_word_too_long(f"the prefix of length {length}", length, max_length)

    letters: list[int] = []
    for i, d in zip(range(len(digits) - 1, -1, -1), digits):
        if d:
            letters.extend(apply_power(phi, i, (0,), max_length=max_length) * d)
    return tuple(letters)


def normalize_frep(digits: Sequence[int]) -> FDigits:
    """Strip leading zeros."""
    digits = tuple(digits)
    for position, d in enumerate(digits):
        if d != 0:
            return digits[position:]
    return ()


def is_normal_frep(digits: Sequence[int], phi: ParrySubstitution) -> bool:
    """Whether `digits` is, up to leading zeros, the greedy representation of its value.

    Digits bounded by ``alpha_0`` are not enough for that, e.g. ``(1,1,1)`` is no normal
    representation for the Tribonacci substitution.

    """
    try:
        value = frep_value(digits, phi)
    except InvalidRepresentationError:
        return False
    return to_normal_frep(value, phi) == normalize_frep(digits)


def digits_from_pattern(
    block: Sequence[int], repetitions: int, tail: Sequence[int] = ()
) -> FDigits:
    """Digits ``(block^repetitions, tail)``, e.g. ``((1,0,0,0)^i, 1)``."""
    if repetitions < 0:
        raise ValueError(f"repetitions must be non-negative but is {repetitions}.")
    return tuple(block) * repetitions + tuple(tail)


def frep_sort_key(digits: Sequence[int]) -> tuple[int, FDigits]:
    """Length-then-lexicographic key; it orders normal representations like integers."""
    normalized = normalize_frep(digits)
    return len(normalized), normalized


def render_frep(digits: Sequence[int]) -> str:
    return "(" + ",".join(str(d) for d in digits) + ")"


def parse_frep(text: str, phi: ParrySubstitution | None = None) -> FDigits:
    """Parse ``"(1,0,1)"`` or ``"1,0,1"``; digits are checked against `phi` if given."""
    try:
        digits = parse_to_tuple_of_ints(text, "digits")
    except ValueError as e:
        raise InvalidRepresentationError(str(e)) from e
    if phi is not None:
        validated_digits(digits, phi)
    return digits


def validated_digits(digits: Sequence[int], phi: ParrySubstitution) -> FDigits:
    digits = tuple(digits)
    for d in digits:
        if isinstance(d, bool) or not isinstance(d, int):
            raise InvalidRepresentationError(f"The digit {d!r} is not an integer.")
    invalid = sorted({d for d in digits if not 0 <= d <= phi.alpha_0})
    if invalid:
        raise InvalidRepresentationError(
            f"Digits must lie between 0 and alpha_0 = {phi.alpha_0}, but the digits "
            f"{invalid} do not."
        )
    return digits
