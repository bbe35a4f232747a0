"""Abelian co-decompositions and the digit-driven recursion of Z-sets.

For ``n`` with normal representation ``(d_{k-1}, ..., d_0)``, the Z-set of ``n`` is
built from the leading digit by :func:`z_base` and then extended by one digit at a time
with :func:`z_step`. The relative Parikh vectors of length ``n`` factors are read off
the prefixes of its block pairs, so ``AC(n)`` never requires the prefix ``u_[n]``.

"""
from __future__ import annotations

import warnings
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field

from _abelcodec.abelcodec_typing import FDigits, RelativeParikhVector, Word
from _abelcodec.numeration import (
    digits_from_pattern,
    is_normal_frep,
    normalize_frep,
    prefix_from_frep,
    render_frep,
    to_normal_frep,
    validated_digits,
)
from _abelcodec.parry import (
    ParrySubstitution,
    apply_morphism,
    apply_power,
    block_lengths,
    block_lengths_exceeding,
    fail_if_word_too_long,
    fixed_point_prefix,
)
from _abelcodec.shared import (
    CoarseDecompositionWarning,
    InapplicableStepError,
    InvalidRepresentationError,
    InvalidSubstitutionError,
    format_errors_and_warnings,
)
from _abelcodec.words import concatenate, is_prefix, left_cancel, render_word

Predicate = Callable[[Word], bool]


@dataclass(frozen=True, order=True)
class BlockPair:
    """Two non-empty blocks with equal Parikh vectors."""

    z: Word
    z_tilde: Word

    def __post_init__(self):
        if not self.z or not self.z_tilde:
            raise ValueError("Blocks of a co-decomposition must be non-empty.")
        if sorted(self.z) != sorted(self.z_tilde):
            raise ValueError(
                f"The blocks {render_word(self.z)!r} and {render_word(self.z_tilde)!r} "
                "have different Parikh vectors."
            )

    def render(self, alphabet_size: int | None = None) -> str:
        return (
            f"{render_word(self.z, alphabet_size)} | "
            f"{render_word(self.z_tilde, alphabet_size)}"
        )


@dataclass(frozen=True)
class CoDecomposition:
    """Aligned factorization of two abelian equivalent rows into block pairs.

    `admissible` tells whether every z_tilde block satisfies the predicate the
    decomposition was computed with. It is False only for the whole-pair fallback.

    """

    ordered_pairs: tuple[BlockPair, ...]
    admissible: bool = True

    @property
    def canonical_set(self) -> tuple[BlockPair, ...]:
        return tuple(sorted(set(self.ordered_pairs)))

    @property
    def rows(self) -> tuple[Word, Word]:
        return (
            concatenate(*(pair.z for pair in self.ordered_pairs)),
            concatenate(*(pair.z_tilde for pair in self.ordered_pairs)),
        )


@dataclass(frozen=True)
class ZSet:
    """Deduplicated, sorted set of block pairs.

    Equality only compares the pairs, not the digits the set was computed for.

    """

    pairs: tuple[BlockPair, ...]
    alphabet_size: int = field(compare=False)
    provenance: FDigits = field(default=(), compare=False)

    @classmethod
    def from_pairs(cls, pairs, alphabet_size: int, provenance: Sequence[int] = ()):
        return cls(
            pairs=tuple(sorted(set(pairs))),
            alphabet_size=alphabet_size,
            provenance=tuple(provenance),
        )

    def __iter__(self) -> Iterator[BlockPair]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def to_dict(self) -> dict:
        return {
            "digits": list(self.provenance),
            "pairs": [
                [
                    render_word(pair.z, self.alphabet_size),
                    render_word(pair.z_tilde, self.alphabet_size),
                ]
                for pair in self.pairs
            ],
        }


@dataclass(frozen=True)
class StabilizationReport:
    """Outcome of iterating the Z-recursion along ``(block^i, tail)``.

    Attributes
    ----------
    block, tail : tuple of int
        The digit pattern.
    i_max : int
        Largest number of repetitions tried.
    stabilized_at : int or None
        Smallest ``i`` with ``Z(block^i) = Z(block^{i+1})``; None if not found.
    stable_ac : int or None
        ``AC(n_i)`` for all ``i >= stabilized_at``.
    stable_rel_set : tuple of tuple of int
        The common relative Parikh set, sorted.
    oracle_only : bool
        True if some step was inapplicable; no conclusion about infinitely many ``n``
        is drawn then.
    ac_by_repetition : tuple of (int, int)
        ``(i, AC(n_i))`` for every ``i`` the recursion reached.

    """

    block: FDigits
    tail: FDigits
    i_max: int
    stabilized_at: int | None
    stable_ac: int | None
    stable_rel_set: tuple[RelativeParikhVector, ...]
    oracle_only: bool
    ac_by_repetition: tuple[tuple[int, int], ...]
    stable_zset: ZSet | None = field(default=None, compare=False, repr=False)

    @property
    def stabilized(self) -> bool:
        return self.stabilized_at is not None

    def to_dict(self) -> dict:
        return {
            "pattern": {"block": list(self.block), "tail": list(self.tail)},
            "i_max": self.i_max,
            "stabilized_at": self.stabilized_at,
            "stable_ac": self.stable_ac,
            "stable_rel_set": [list(vector) for vector in self.stable_rel_set],
            "oracle_only": self.oracle_only,
            "ac_by_repetition": {str(i): ac for i, ac in self.ac_by_repetition},
        }


def compute_R(phi: ParrySubstitution) -> int:  # noqa: N802
    """Exponent ``R`` such that ``phi^R(0) 0`` is a prefix of the fixed point and
    ``phi^{k+R}(0) u_[n]`` covers all factors of length ``n <= F_k``.

    Parameters
    ----------
    phi : ParrySubstitution
        The substitution.

    Returns
    -------
    int

    """
    alpha = phi.exponents
    if phi.is_simple:
        if phi.alpha_0 >= 2:
            return phi.m - 1
        ell = next((ell for ell in range(1, phi.m) if alpha[ell] >= 1), None)
        if ell is None:
            raise InvalidSubstitutionError(
                f"No letter l >= 1 of {phi} has a positive exponent."
            )
        return phi.m + ell - 1

    h = next(ell for ell in range(phi.m, phi.alphabet_size) if alpha[ell] >= 1)
    if phi.alpha_0 >= 2:
        return h + phi.p
    return h + phi.m + phi.p - 1


def covering_prefix_length(n: int, phi: ParrySubstitution) -> tuple[int, int]:
    """Return ``(k, B(n))`` with ``k`` minimal such that ``n <= F_k``."""
    _fail_if_not_positive(n)
    k = len(block_lengths_exceeding(phi, n - 1)) - 1
    power = k + compute_R(phi)
    return k, block_lengths(phi, power)[power] + n


def covering_prefix(
    n: int, phi: ParrySubstitution, max_length: int | None = None
) -> Word:
    """The prefix ``phi^{k+R}(0) u_[n]`` of the fixed point.

    It contains every factor of length `n` and begins and ends with ``u_[n]``.

    """
    k, length = covering_prefix_length(n, phi)
    fail_if_word_too_long(f"the covering prefix for n={n}", length, max_length)
    return concatenate(
        apply_power(phi, k + compute_R(phi), (0,), max_length=max_length),
        fixed_point_prefix(phi, n, max_length=max_length),
    )


def co_decompose(
    v: Sequence[int], w: Sequence[int], admissible: Predicate | None = None
) -> CoDecomposition:
    """Finest abelian co-decomposition of two rows with equal Parikh vectors.

    Cuts are placed at positions where the prefixes of both rows have the same Parikh
    vector. Among all partitions whose z_tilde blocks satisfy `admissible`, the one
    with the most blocks is returned; ties go to the earliest cut. `admissible` must be
    closed under extending a block to the right. If no partition qualifies, the whole
    pair is returned as a single, non-admissible block.

    Parameters
    ----------
    v, w : sequence of int
        Upper and lower row.
    admissible : callable, optional
        Predicate on z_tilde blocks. None admits every block.

    Returns
    -------
    CoDecomposition

    """
    v, w = tuple(v), tuple(w)
    if sorted(v) != sorted(w):
        raise ValueError(
            f"Rows {render_word(v)!r} and {render_word(w)!r} have different Parikh "
            "vectors and cannot be co-decomposed."
        )

    cuts = _equal_parikh_cuts(v, w)
    if admissible is None:
        chosen = cuts
    else:
        chosen = _finest_admissible_cuts(w, cuts, admissible)
        if chosen is None:
            whole = (BlockPair(v, w),) if v else ()
            return CoDecomposition(ordered_pairs=whole, admissible=False)

    return CoDecomposition(
        ordered_pairs=tuple(
            BlockPair(v[start:end], w[start:end])
            for start, end in zip(chosen[:-1], chosen[1:])
        )
    )


def _equal_parikh_cuts(v: Word, w: Word) -> list[int]:
    difference: dict[int, int] = {}
    unbalanced = 0
    cuts = [0]
    for position, (a, b) in enumerate(zip(v, w), start=1):
        if a != b:
            for letter, change in ((a, 1), (b, -1)):
                before = difference.get(letter, 0)
                after = before + change
                difference[letter] = after
                if before == 0:
                    unbalanced += 1
                elif after == 0:
                    unbalanced -= 1
        if unbalanced == 0:
            cuts.append(position)
    return cuts


def _finest_admissible_cuts(
    w: Word, cuts: list[int], admissible: Predicate
) -> list[int] | None:
    last = len(cuts) - 1
    # best[j]: maximal number of blocks covering w[cuts[j]:], None if impossible.
    best: list[int | None] = [None] * (last + 1)
    best[last] = 0
    # Suffix maximum of best over indices >= j, with the earliest index on ties.
    suffix_best: list[int | None] = [None] * (last + 2)
    suffix_arg: list[int | None] = [None] * (last + 2)
    suffix_best[last], suffix_arg[last] = 0, last
    choice: list[int | None] = [None] * (last + 1)

    for j in range(last - 1, -1, -1):
        first_end = _first_admissible_end(w, cuts, j, admissible)
        if first_end is not None and suffix_best[first_end] is not None:
            best[j] = suffix_best[first_end] + 1
            choice[j] = suffix_arg[first_end]

        if best[j] is not None and (
            suffix_best[j + 1] is None or best[j] >= suffix_best[j + 1]
        ):
            suffix_best[j], suffix_arg[j] = best[j], j
        else:
            suffix_best[j], suffix_arg[j] = suffix_best[j + 1], suffix_arg[j + 1]

    if best[0] is None:
        return None

    chosen = [0]
    j = 0
    while j != last:
        j = choice[j]
        chosen.append(j)
    return [cuts[j] for j in chosen]


def _first_admissible_end(
    w: Word, cuts: list[int], j: int, admissible: Predicate
) -> int | None:
    """Smallest cut index e > j such that ``w[cuts[j]:cuts[e]]`` is admissible.

    Admissibility is closed under extending a block to the right, so the admissible
    ends form a suffix of the cut indices. Predicates with a ``prefix_length`` only
    look at that many letters of a block, which bounds the work per start.

    """
    start, last = cuts[j], len(cuts) - 1
    window = getattr(admissible, "prefix_length", None)
    if window is not None:
        for e in range(j + 1, last + 1):
            if admissible(w[start : min(cuts[e], start + window)]):
                return e
            if cuts[e] - start >= window:
                return None
        return None

    if not admissible(w[start:]):
        return None
    low, high = j + 1, last
    while low < high:
        middle = (low + high) // 2
        if admissible(w[start : cuts[middle]]):
            high = middle
        else:
            low = middle + 1
    return low


def image_starts_with_zeros(phi: ParrySubstitution, word: Word, count: int) -> bool:
    """Whether ``phi(word)`` begins with ``0^count``, without building the image."""
    if count <= 0:
        return True
    seen = 0
    for letter in word:
        for x in phi.images[letter]:
            if x != 0:
                return False
            seen += 1
            if seen == count:
                return True
    return False


@dataclass(frozen=True)
class LeadingZeros:
    """Predicate "phi(z_tilde) begins with 0^count".

    Every image is non-empty, so only the first `count` letters of a block matter.

    """

    phi: ParrySubstitution
    count: int

    @property
    def prefix_length(self) -> int:
        return self.count

    def __call__(self, word: Word) -> bool:
        return image_starts_with_zeros(self.phi, word, self.count)


def leading_zeros_predicate(phi: ParrySubstitution, count: int) -> Predicate | None:
    """Predicate "phi(z_tilde) begins with 0^count"; None if it admits everything."""
    if count <= 0:
        return None
    return LeadingZeros(phi, count)


def _decompose_rows(
    v: Word, w: Word, phi: ParrySubstitution, next_digit: int | None
) -> tuple[BlockPair, ...]:
    """Co-decompose a pair of rows inside the recursion.

    The blocks should allow appending any digit, i.e. ``phi(z_tilde)`` should begin
    with ``0^alpha_0``. If that is impossible, they only need to allow the next digit.
    The whole pair is the last resort. Only cuts that restrict a following non-zero
    digit are reported.

    """
    strict = co_decompose(v, w, leading_zeros_predicate(phi, phi.alpha_0))
    if strict.admissible:
        return strict.ordered_pairs

    if not next_digit:
        # The last digit or a zero follows; every cut allows it.
        return co_decompose(v, w).ordered_pairs

    if next_digit < phi.alpha_0:
        relaxed = co_decompose(v, w, leading_zeros_predicate(phi, next_digit))
        if relaxed.admissible:
            warnings.warn(
                format_errors_and_warnings(
                    f"""
                    Some blocks of a co-decomposition for {phi} only allow appending
                    digits up to {next_digit}.
                    """
                ),
                category=CoarseDecompositionWarning,
                stacklevel=3,
            )
            return relaxed.ordered_pairs

    warnings.warn(
        format_errors_and_warnings(
            f"""
            A co-decomposition for {phi} fell back to the whole pair of rows.
            """
        ),
        category=CoarseDecompositionWarning,
        stacklevel=3,
    )
    return strict.ordered_pairs


def z_base(d: int, phi: ParrySubstitution, next_digit: int | None = None) -> ZSet:
    """Z-set of the one-digit number `d`, from the rows ``phi^{1+R}(0)`` and
    ``0^{-d} phi^{1+R}(0) 0^d``.

    Parameters
    ----------
    d : int
        Leading digit, ``0 <= d <= alpha_0``.
    phi : ParrySubstitution
        The substitution.
    next_digit : int, optional
        The digit the recursion appends next, if any.

    Returns
    -------
    ZSet

    """
    (d,) = validated_digits((d,), phi)
    top = apply_power(phi, 1 + compute_R(phi), (0,))
    zeros = (0,) * d
    pairs = _decompose_rows(top, left_cancel(zeros, top) + zeros, phi, next_digit)
    return ZSet.from_pairs(pairs, phi.alphabet_size, provenance=(d,))


def z_step(
    z_prev: ZSet, d: int, phi: ParrySubstitution, next_digit: int | None = None
) -> ZSet:
    """Append the digit `d` to the number whose Z-set is `z_prev`.

    Every pair ``(z, z_tilde)`` is replaced by the co-decomposition of ``phi(z)`` and
    ``0^{-d} phi(z_tilde) 0^d``. This requires ``phi(z_tilde)`` to begin with ``0^d``,
    which is checked for every pair.

    """
    (d,) = validated_digits((d,), phi)
    zeros = (0,) * d
    pairs: list[BlockPair] = []
    for pair in z_prev:
        image_tilde = apply_morphism(phi, pair.z_tilde)
        if not is_prefix(zeros, image_tilde):
            raise InapplicableStepError(
                render_word(pair.z, phi.alphabet_size),
                render_word(pair.z_tilde, phi.alphabet_size),
                (d,),
            )
        pairs.extend(
            _decompose_rows(
                apply_morphism(phi, pair.z), image_tilde[d:] + zeros, phi, next_digit
            )
        )
    return ZSet.from_pairs(
        pairs, phi.alphabet_size, provenance=(*z_prev.provenance, d)
    )


def z_stroke(
    z_prev: ZSet,
    digits: Sequence[int],
    phi: ParrySubstitution,
    next_digit: int | None = None,
) -> ZSet:
    """Append several digits at once.

    With ``k = len(digits)`` and ``q`` the value of `digits`, every pair is replaced by
    the co-decomposition of ``phi^k(z)`` and ``u_[q]^{-1} phi^k(z_tilde) u_[q]``, which
    requires ``phi^k(z_tilde)`` to begin with ``u_[q]``.

    """
    digits = validated_digits(digits, phi)
    if not digits:
        return z_prev
    k = len(digits)
    prefix_q = prefix_from_frep(digits, phi)
    pairs: list[BlockPair] = []
    for pair in z_prev:
        image_tilde = apply_power(phi, k, pair.z_tilde)
        if not is_prefix(prefix_q, image_tilde):
            raise InapplicableStepError(
                render_word(pair.z, phi.alphabet_size),
                render_word(pair.z_tilde, phi.alphabet_size),
                digits,
            )
        pairs.extend(
            _decompose_rows(
                apply_power(phi, k, pair.z),
                image_tilde[len(prefix_q) :] + prefix_q,
                phi,
                next_digit,
            )
        )
    return ZSet.from_pairs(
        pairs, phi.alphabet_size, provenance=(*z_prev.provenance, *digits)
    )


def z_set(n: int, phi: ParrySubstitution) -> ZSet:
    """Z-set of a positive integer `n`."""
    _fail_if_not_positive(n)
    return z_set_from_digits(to_normal_frep(n, phi), phi)


def z_set_from_digits(digits: Sequence[int], phi: ParrySubstitution) -> ZSet:
    """Z-set of the integer with normal representation `digits`.

    The value is never computed, so `digits` may describe astronomically large
    numbers.

    """
    digits = normalize_frep(validated_digits(digits, phi))
    if not digits:
        raise InvalidRepresentationError("The Z-set is defined for n >= 1 only.")
    if not is_normal_frep(digits, phi):
        raise InvalidRepresentationError(
            f"{render_frep(digits)} is not a normal F-representation for {phi}."
        )
    return _fold_digits(None, digits, phi, following=None)


def _fold_digits(
    z: ZSet | None,
    digits: FDigits,
    phi: ParrySubstitution,
    following: int | None,
) -> ZSet:
    """Apply the recursion digit by digit; `z` None starts from the leading digit."""
    for position, d in enumerate(digits):
        next_digit = digits[position + 1] if position + 1 < len(digits) else following
        if z is None:
            z = z_base(d, phi, next_digit=next_digit)
        else:
            z = z_step(z, d, phi, next_digit=next_digit)
    return z


def rel_parikh_set(z: ZSet) -> frozenset[RelativeParikhVector]:
    """Relative Parikh vectors ``Psi(s) - Psi(r)`` for equally long prefixes ``r`` of
    ``z`` and ``s`` of ``z_tilde``, over all pairs, empty prefixes included.

    """
    size = z.alphabet_size
    vectors = {(0,) * size}
    for pair in z:
        delta = [0] * size
        for a, b in zip(pair.z, pair.z_tilde):
            delta[a] -= 1
            delta[b] += 1
            vectors.add(tuple(delta))
    return frozenset(vectors)


def codec_ac(n: int, phi: ParrySubstitution) -> int:
    return len(rel_parikh_set(z_set(n, phi)))


def codec_ac_from_digits(digits: Sequence[int], phi: ParrySubstitution) -> int:
    return len(rel_parikh_set(z_set_from_digits(digits, phi)))


def detect_stabilization(
    block: Sequence[int],
    tail: Sequence[int],
    i_max: int,
    phi: ParrySubstitution,
) -> StabilizationReport:
    """Search for a fixed point of the Z-recursion along a repeated digit block.

    Let ``Q_i = (block^i)`` and ``n_i = (block^i, tail)``. If ``Z(Q_i) = Z(Q_{i+1})``,
    the recursion returns the same set for every further repetition, hence the
    relative Parikh set and the abelian complexity of ``n_i`` are the same for all
    ``i >= i_0``.

    Parameters
    ----------
    block : sequence of int
        Repeated digits; the first one must be positive.
    tail : sequence of int
        Digits after the repetitions.
    i_max : int
        Largest number of repetitions tried.
    phi : ParrySubstitution
        The substitution.

    Returns
    -------
    StabilizationReport

    """
    block = validated_digits(block, phi)
    tail = validated_digits(tail, phi)
    if not block or block[0] == 0:
        raise InvalidRepresentationError(
            f"The repeated block {render_frep(block)} must start with a positive digit."
        )
    if i_max < 1:
        raise ValueError(f"i_max must be at least 1 but is {i_max}.")

    history: list[tuple[int, int]] = []
    stabilized_at = None
    stable_tail_set = None
    oracle_only = False
    try:
        _fail_if_pattern_is_not_normal(block, tail, 1, phi)
        current = _fold_digits(None, block, phi, following=block[0])
        for i in range(1, i_max + 1):
            with_tail = _fold_digits(current, tail, phi, following=None)
            history.append((i, len(rel_parikh_set(with_tail))))

            _fail_if_pattern_is_not_normal(block, tail, i + 1, phi)
            following = _fold_digits(current, block, phi, following=block[0])
            if following == current:
                stabilized_at = i
                stable_tail_set = with_tail
                break
            current = following
    except InapplicableStepError as e:
        warnings.warn(
            format_errors_and_warnings(
                f"""
                The recursion along {render_frep(block)} with tail {render_frep(tail)}
                stopped: {e}

                No statement about infinitely many n is possible.
                """
            ),
            category=CoarseDecompositionWarning,
            stacklevel=2,
        )
        oracle_only = True

    if stable_tail_set is None:
        return StabilizationReport(
            block=block,
            tail=tail,
            i_max=i_max,
            stabilized_at=None,
            stable_ac=None,
            stable_rel_set=(),
            oracle_only=oracle_only,
            ac_by_repetition=tuple(history),
        )

    stable_rel_set = rel_parikh_set(stable_tail_set)
    return StabilizationReport(
        block=block,
        tail=tail,
        i_max=i_max,
        stabilized_at=stabilized_at,
        stable_ac=len(stable_rel_set),
        stable_rel_set=tuple(sorted(stable_rel_set)),
        oracle_only=False,
        ac_by_repetition=tuple(history),
        stable_zset=stable_tail_set,
    )


def _fail_if_pattern_is_not_normal(
    block: FDigits, tail: FDigits, repetitions: int, phi: ParrySubstitution
):
    digits = digits_from_pattern(block, repetitions, tail)
    if not is_normal_frep(digits, phi):
        raise InvalidRepresentationError(
            f"{render_frep(digits)} is not a normal F-representation for {phi}."
        )


def render_zset(z: ZSet) -> str:
    return "\n".join(pair.render(z.alphabet_size) for pair in z)


def _fail_if_not_positive(n: int):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer but is {n!r}.")
