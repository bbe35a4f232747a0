"""Brute force relative Parikh sets by sliding a window over the covering prefix."""
from __future__ import annotations

import functools
from collections.abc import Sequence
from dataclasses import dataclass

import numpy

from _abelcodec.abelcodec_typing import RelativeParikhVector
from _abelcodec.codecomp import compute_R, covering_prefix_length
from _abelcodec.parry import (
    ParrySubstitution,
    apply_power,
    block_lengths,
    fail_if_word_too_long,
)


@dataclass(frozen=True)
class BalanceProfile:
    """Largest ``|count_l(w) - count_l(u_[n])|`` per letter over all scanned ``n``."""

    max_imbalance: tuple[int, ...]
    n_max: int

    @property
    def c(self) -> int:
        return max(self.max_imbalance)


@functools.lru_cache(maxsize=16)
def _power_of_zero_as_array(phi: ParrySubstitution, k: int) -> numpy.ndarray:
    # Callers check the length against the cap.
    word = apply_power(phi, k, (0,), max_length=block_lengths(phi, k)[k])
    out = numpy.asarray(word, dtype=numpy.int64)
    out.setflags(write=False)
    return out


def covering_prefix_as_array(
    n: int, phi: ParrySubstitution, max_length: int | None = None
) -> numpy.ndarray:
    """The covering prefix ``phi^{k+R}(0) u_[n]`` as an integer array."""
    k, length = covering_prefix_length(n, phi)
    fail_if_word_too_long(f"the covering prefix for n={n}", length, max_length)
    top = _power_of_zero_as_array(phi, k + compute_R(phi))
    # n <= F_k, so u_[n] is a prefix of phi^{k+R}(0).
    return numpy.concatenate([top, top[:n]])


def _relative_window_counts(
    word: Sequence[int] | numpy.ndarray, n: int, alphabet_size: int
) -> numpy.ndarray:
    """Parikh vectors of all length `n` windows minus the one of the first window.

    Window counts are differences of cumulative letter counts, so every window costs
    constant work per letter independent of `n`.

    """
    word = numpy.asarray(word, dtype=numpy.int64)
    if n > len(word):
        return numpy.zeros((0, alphabet_size), dtype=numpy.int64)

    counts = numpy.zeros((len(word) + 1, alphabet_size), dtype=numpy.int64)
    if len(word):
        one_hot = numpy.eye(alphabet_size, dtype=numpy.int64)[word]
        counts[1:] = numpy.cumsum(one_hot, axis=0)

    windows = counts[n:] - counts[: len(word) - n + 1]
    return windows - windows[0]


def rel_parikh_set_of_word(
    word: Sequence[int] | numpy.ndarray, n: int, alphabet_size: int
) -> frozenset[RelativeParikhVector]:
    """Relative Parikh vectors of the length `n` factors of a finite word.

    Vectors are taken relative to the prefix of length `n` of `word`, so `word` has to
    be a prefix of the fixed point for the result to be ``P^rel(n)``.

    """
    if n < 0:
        raise ValueError(f"n must be non-negative but is {n}.")
    rows = numpy.unique(_relative_window_counts(word, n, alphabet_size), axis=0)
    return frozenset(tuple(int(x) for x in row) for row in rows)


def brute_rel_parikh_set(
    n: int, phi: ParrySubstitution, max_length: int | None = None
) -> frozenset[RelativeParikhVector]:
    """Relative Parikh set of all length `n` factors of the fixed point.

    Parameters
    ----------
    n : int
        Factor length.
    phi : ParrySubstitution
        The substitution.
    max_length : int, optional
        Overrides the word length cap for this call.

    Returns
    -------
    frozenset of tuple of int

    """
    if n == 0:
        return frozenset({(0,) * phi.alphabet_size})
    word = covering_prefix_as_array(n, phi, max_length=max_length)
    return rel_parikh_set_of_word(word, n, phi.alphabet_size)


def brute_ac(n: int, phi: ParrySubstitution, max_length: int | None = None) -> int:
    return len(brute_rel_parikh_set(n, phi, max_length=max_length))


def balance_profile(
    phi: ParrySubstitution, n_max: int, max_length: int | None = None
) -> BalanceProfile:
    """Per-letter maxima of |delta| over the relative Parikh sets for n <= n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive but is {n_max}.")

    maxima = numpy.zeros(phi.alphabet_size, dtype=numpy.int64)
    for n in range(1, n_max + 1):
        word = covering_prefix_as_array(n, phi, max_length=max_length)
        deltas = _relative_window_counts(word, n, phi.alphabet_size)
        maxima = numpy.maximum(maxima, numpy.abs(deltas).max(axis=0))

    return BalanceProfile(max_imbalance=tuple(int(x) for x in maxima), n_max=n_max)
