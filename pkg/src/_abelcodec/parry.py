"""Simple and non-simple Parry substitutions, their powers and block lengths.

Letters are the integers ``0, ..., A - 1``. A simple substitution with parameters
``m`` and exponents ``alpha`` maps

    l -> 0^alpha_l (l + 1)   for l < m - 1,
    m - 1 -> 0^alpha_{m-1},

and a non-simple one with parameters ``m``, ``p`` maps

    l -> 0^alpha_l (l + 1)   for l < m + p - 1,
    m + p - 1 -> 0^alpha_{m+p-1} m.

"""
from __future__ import annotations

import functools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from _abelcodec import config
from _abelcodec.abelcodec_typing import Word
from _abelcodec.shared import (
    InvalidSubstitutionError,
    WordLengthLimitExceededError,
    format_errors_and_warnings,
)
from _abelcodec.words import concatenate, parse_word, render_word

_KIND_ALIASES = {
    "simple": "simple",
    "non-simple": "non-simple",
    "nonsimple": "non-simple",
    "non_simple": "non-simple",
}


@dataclass(frozen=True)
class ParrySubstitution:
    """A validated Parry substitution.

    Instances are immutable and hashable, which lets the power and length caches key
    on them.

    """

    kind: str
    m: int
    p: int | None
    exponents: tuple[int, ...]
    images: tuple[Word, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _fail_if_parameters_are_invalid(self.kind, self.m, self.p, self.exponents)
        images = _build_images(self.kind, self.m, self.exponents)
        object.__setattr__(self, "images", images)

    @property
    def alphabet_size(self) -> int:
        return len(self.exponents)

    @property
    def alpha_0(self) -> int:
        return self.exponents[0]

    @property
    def is_simple(self) -> bool:
        return self.kind == "simple"

    @property
    def synchronizing_power(self) -> int:
        """Power after which the image of every letter begins with 0."""
        return self.m if self.is_simple else self.m + self.p

    def to_spec(self) -> str:
        alpha = ",".join(str(a) for a in self.exponents)
        if self.is_simple:
            return f"simple m={self.m} alpha={alpha}"
        return f"nonsimple m={self.m} p={self.p} alpha={alpha}"

    def __str__(self) -> str:
        return self.to_spec()


@dataclass(frozen=True)
class LengthTable:
    """Block lengths ``F_k = |phi^k(0)|`` for ``k = 0, ..., K``."""

    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


def validate_parry(
    kind: str, m: int, p: int | None = None, exponents: Sequence[int] = ()
) -> ParrySubstitution:
    """Validate parameters and build the Parry substitution they describe.

    Parameters
    ----------
    kind : str
        Either "simple" or "non-simple" ("nonsimple" is accepted as well).
    m : int
        Alphabet size of a simple substitution, index of the first letter of the cycle
        of a non-simple one.
    p : int, optional
        Length of the cycle. Required for non-simple substitutions, must be omitted
        for simple ones.
    exponents : sequence of int
        The exponents ``alpha_0, ..., alpha_{A-1}``.

    Returns
    -------
    ParrySubstitution

    """
    normalized_kind = _KIND_ALIASES.get(str(kind).strip().lower())
    if normalized_kind is None:
        raise InvalidSubstitutionError(
            f"The kind of a Parry substitution must be 'simple' or 'non-simple' but is "
            f"{kind!r}."
        )
    try:
        exponents = tuple(int(a) for a in exponents)
    except (TypeError, ValueError) as e:
        raise InvalidSubstitutionError(
            f"The exponents must be integers but are {exponents!r}."
        ) from e

    return ParrySubstitution(kind=normalized_kind, m=m, p=p, exponents=exponents)


def _fail_if_parameters_are_invalid(kind, m, p, exponents):
    if kind not in config.SUPPORTED_KINDS:
        raise InvalidSubstitutionError(f"Unknown kind of Parry substitution {kind!r}.")
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidSubstitutionError(f"m must be a positive integer but is {m!r}.")

    if kind == "simple":
        if p is not None:
            raise InvalidSubstitutionError(
                "Simple Parry substitutions have no cycle, so p must not be given."
            )
        if m < 2:
            raise InvalidSubstitutionError(
                "Simple Parry substitutions need an alphabet of at least two letters."
            )
        expected_size = m
    else:
        if isinstance(p, bool) or not isinstance(p, int) or p < 1:
            raise InvalidSubstitutionError(
                f"Non-simple Parry substitutions need a positive cycle length p, got "
                f"{p!r}."
            )
        expected_size = m + p

    if len(exponents) != expected_size:
        raise InvalidSubstitutionError(
            f"A {kind} Parry substitution with m={m}"
            + ("" if kind == "simple" else f" and p={p}")
            + f" needs {expected_size} exponents but {len(exponents)} were given."
        )
    if any(a < 0 for a in exponents):
        raise InvalidSubstitutionError(
            f"The exponents must be non-negative but are {exponents}."
        )
    if exponents[0] < 1:
        raise InvalidSubstitutionError("The exponent alpha_0 must be at least 1.")

    too_large = [letter for letter, a in enumerate(exponents) if a > exponents[0]]
    if too_large:
        raise InvalidSubstitutionError(
            format_errors_and_warnings(
                f"""
                Every exponent must be at most alpha_0 = {exponents[0]}, but the
                exponents of the letters {too_large} exceed it.
                """
            )
        )

    if kind == "simple" and exponents[-1] == 0:
        raise InvalidSubstitutionError(
            f"The exponent of the last letter {m - 1} must be positive, otherwise its "
            "image is empty."
        )
    if kind == "non-simple" and not any(exponents[m:]):
        raise InvalidSubstitutionError(
            f"At least one letter of the cycle {{{m}, ..., {m + p - 1}}} needs a "
            "positive exponent."
        )


def _build_images(kind: str, m: int, exponents: tuple[int, ...]) -> tuple[Word, ...]:
    last = len(exponents) - 1
    images = []
    for letter, alpha in enumerate(exponents):
        if letter < last:
            successor: Word = (letter + 1,)
        elif kind == "simple":
            successor = ()
        else:
            successor = (m,)
        images.append((0,) * alpha + successor)
    return tuple(images)


def parry_from_images(images: Sequence[Sequence[int]]) -> ParrySubstitution:
    """Recognize a Parry substitution from the images of its letters.

    Every image has to be of the form ``0^a`` followed by at most one other letter. All
    letters except the last one must map to ``0^a (l + 1)``; the last letter decides
    between the simple (``0^a``) and the non-simple (``0^a m``) form.

    """
    images = tuple(tuple(image) for image in images)
    size = len(images)
    if size < 2:
        raise InvalidSubstitutionError(
            "A Parry substitution needs an alphabet of at least two letters."
        )

    exponents = []
    tails = []
    for letter, image in enumerate(images):
        if not image:
            raise InvalidSubstitutionError(f"The image of letter {letter} is empty.")
        leading_zeros = len(image) - len(tuple(_drop_leading_zeros(image)))
        exponents.append(leading_zeros)
        tails.append(image[leading_zeros:])

    for letter, tail in enumerate(tails[:-1]):
        if tail != (letter + 1,):
            raise InvalidSubstitutionError(
                f"The image {render_word(images[letter])!r} of letter {letter} is not "
                f"of the form 0...0{letter + 1}."
            )

    last_tail = tails[-1]
    if last_tail == ():
        return validate_parry("simple", size, None, exponents)
    if len(last_tail) == 1 and 1 <= last_tail[0] < size:
        m = last_tail[0]
        return validate_parry("non-simple", m, size - m, exponents)
    raise InvalidSubstitutionError(
        f"The image {render_word(images[-1])!r} of the last letter {size - 1} is "
        "neither of the form 0...0 nor 0...0m with a letter m of the alphabet."
    )


def _drop_leading_zeros(word: Word) -> Iterator[int]:
    it = iter(word)
    for letter in it:
        if letter != 0:
            yield letter
            break
    yield from it


def parse_rules(text: str) -> ParrySubstitution:
    """Parse raw rules like ``"0->01;1->02;2->0"`` into a Parry substitution."""
    rules = {}
    for raw_rule in text.strip().strip(";").split(";"):
        if "->" not in raw_rule:
            raise InvalidSubstitutionError(
                f"The rule {raw_rule.strip()!r} is not of the form 'letter->image'."
            )
        raw_letter, raw_image = raw_rule.split("->", 1)
        try:
            letter = int(raw_letter.strip())
            image = parse_word(raw_image)
        except ValueError as e:
            raise InvalidSubstitutionError(
                f"The rule {raw_rule.strip()!r} could not be parsed."
            ) from e
        if letter in rules:
            raise InvalidSubstitutionError(f"Letter {letter} has more than one rule.")
        rules[letter] = image

    if sorted(rules) != list(range(len(rules))):
        raise InvalidSubstitutionError(
            f"Rules must be given for the letters 0, ..., {len(rules) - 1} but are "
            f"given for {sorted(rules)}."
        )

    return parry_from_images([rules[letter] for letter in range(len(rules))])


def render_substitution(phi: ParrySubstitution) -> str:
    return ";".join(
        f"{letter}->{render_word(image, phi.alphabet_size)}"
        for letter, image in enumerate(phi.images)
    )


def u_p_substitution(p: int) -> ParrySubstitution:
    """The substitution ``L -> L^p S, S -> M, M -> L^{p-1} S`` on letters 0, 1, 2."""
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        raise InvalidSubstitutionError(f"The family is defined for p >= 2, got {p!r}.")
    return validate_parry("non-simple", 1, 2, (p, 0, p - 1))


def apply_morphism(
    phi: ParrySubstitution, w: Sequence[int], max_length: int | None = None
) -> Word:
    """Apply the substitution once, letter by letter, subject to the length cap."""
    return apply_power(phi, 1, w, max_length=max_length)


def apply_power(
    phi: ParrySubstitution, k: int, w: Sequence[int], max_length: int | None = None
) -> Word:
    """Apply the substitution `k` times.

    The images of single letters are memoized, so repeated calls cost time linear in
    the output. The output length is computed beforehand and compared to the word
    length cap.

    """
    if k < 0:
        raise ValueError(f"The power must be non-negative but is {k}.")
    _fail_if_letters_outside_alphabet(phi, w)
    w = tuple(w)
    if k == 0:
        return w

    lengths = _letter_lengths(phi, k)[k]
    length = sum(lengths[letter] for letter in w)
    fail_if_word_too_long(f"phi^{k} of a word of length {len(w)}", length, max_length)

    return concatenate(*(_power_of_letter(phi, k, letter) for letter in w))


@functools.lru_cache(maxsize=4096)
def _power_of_letter(phi: ParrySubstitution, k: int, letter: int) -> Word:
    if k == 0:
        return (letter,)
    if k == 1:
        return phi.images[letter]
    return concatenate(*(_power_of_letter(phi, k - 1, x) for x in phi.images[letter]))


@functools.lru_cache(maxsize=64)
def _letter_lengths(phi: ParrySubstitution, k: int) -> tuple[tuple[int, ...], ...]:
    """Lengths ``|phi^j(l)|`` for ``j = 0, ..., k`` and every letter ``l``."""
    rows = [(1,) * phi.alphabet_size]
    for _ in range(k):
        previous = rows[-1]
        rows.append(tuple(sum(previous[x] for x in image) for image in phi.images))
    return tuple(rows)


def block_lengths(phi: ParrySubstitution, K: int) -> LengthTable:  # noqa: N803
    """Compute ``F_0, ..., F_K`` without materializing any word.

    Parameters
    ----------
    phi : ParrySubstitution
        The substitution.
    K : int
        Largest exponent.

    Returns
    -------
    LengthTable

    """
    if K < 0:
        raise ValueError(f"K must be non-negative but is {K}.")
    return LengthTable(values=tuple(row[0] for row in _letter_lengths(phi, K)))


def block_lengths_exceeding(phi: ParrySubstitution, n: int) -> LengthTable:
    """Shortest table ``F_0, ..., F_K`` whose last entry is larger than `n`."""
    K = 8  # noqa: N806
    table = block_lengths(phi, K)
    while table[-1] <= n:
        K *= 2  # noqa: N806
        table = block_lengths(phi, K)
    last = next(k for k, value in enumerate(table) if value > n)
    return LengthTable(values=table.values[: last + 1])


def fixed_point_prefix(
    phi: ParrySubstitution, L: int, max_length: int | None = None  # noqa: N803
) -> Word:
    """The first `L` letters of the fixed point ``u = lim phi^k(0)``.

    The prefix is cut from the shortest ``phi^k(0)`` with at least `L` letters; the cap
    applies to that word.

    """
    if L < 0:
        raise ValueError(f"The prefix length must be non-negative but is {L}.")
    if L == 0:
        return ()
    table = block_lengths_exceeding(phi, L - 1)
    k = len(table) - 1
    return apply_power(phi, k, (0,), max_length=max_length)[:L]


def _fail_if_letters_outside_alphabet(phi: ParrySubstitution, w: Sequence[int]):
    outside = sorted({letter for letter in w if not 0 <= letter < phi.alphabet_size})
    if outside:
        raise ValueError(
            f"The letters {outside} are not in the alphabet "
            f"{{0, ..., {phi.alphabet_size - 1}}} of the substitution {phi}."
        )


def fail_if_word_too_long(what: str, length: int, max_length: int | None):
    cap = config.resolve_max_length(max_length)
    if length > cap:
        raise WordLengthLimitExceededError(what, length, cap)
