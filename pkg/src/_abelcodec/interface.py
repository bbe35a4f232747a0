from __future__ import annotations

import warnings
from collections.abc import Sequence
from dataclasses import dataclass

import pandas as pd

from _abelcodec.abelcodec_typing import FDigits, RelativeParikhVector
from _abelcodec.codecomp import rel_parikh_set, z_set_from_digits
from _abelcodec.config import SUPPORTED_METHODS
from _abelcodec.numeration import (
    frep_value,
    is_normal_frep,
    normalize_frep,
    render_frep,
    to_normal_frep,
)
from _abelcodec.oracle import brute_rel_parikh_set
from _abelcodec.shared import (
    InapplicableStepError,
    InvalidRepresentationError,
    MethodMismatchError,
    OracleFallbackWarning,
    format_errors_and_warnings,
)
from _abelcodec.substitution_environment import set_up_substitution


@dataclass(frozen=True)
class AbelianComplexityResult:
    """Abelian complexity of one ``n`` together with how it was obtained.

    `fallback` is True if the co-decomposition was inapplicable and the oracle
    answered. `agree` is only set for ``method="both"`` when the co-decomposition
    answered.

    """

    n: int
    digits: FDigits
    ac: int
    method: str
    rel_parikh_set: frozenset[RelativeParikhVector]
    fallback: bool = False
    agree: bool | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "digits": list(self.digits),
            "ac": self.ac,
            "method": self.method,
            "fallback": self.fallback,
            "agree": self.agree,
        }


def compute_abelian_complexity(
    n: int | None = None,
    substitution="tribonacci",
    method: str = "codec",
    digits: Sequence[int] | None = None,
    max_length: int | None = None,
) -> AbelianComplexityResult:
    """Compute the abelian complexity ``AC(n)`` of a Parry word.

    Parameters
    ----------
    n : int, optional
        Factor length. Either `n` or `digits` must be given.
    substitution : ParrySubstitution, str, pathlib.Path or dict, default "tribonacci"
        Anything :func:`set_up_substitution` accepts.
    method : {"codec", "oracle", "both"}, default "codec"
        "codec" uses the co-decomposition, "oracle" enumerates all factors of the
        covering prefix, "both" computes both and raises if they disagree.
    digits : sequence of int, optional
        Normal F-representation of `n`. Lets the codec path handle numbers too large
        to write down in another way.
    max_length : int, optional
        Overrides the word length cap for this call.

    Returns
    -------
    AbelianComplexityResult

    """
    phi = set_up_substitution(substitution)
    _fail_if_method_not_supported(method)
    n, digits = _resolve_n_and_digits(n, digits, phi)

    fallback = False
    agree = None
    if method == "oracle":
        vectors = brute_rel_parikh_set(n, phi, max_length=max_length)
    else:
        try:
            vectors = rel_parikh_set(z_set_from_digits(digits, phi))
        except InapplicableStepError:
            warnings.warn(
                format_errors_and_warnings(
                    f"""
                    The co-decomposition method is inapplicable for some n with {phi};
                    the oracle computed AC(n) instead.
                    """
                ),
                category=OracleFallbackWarning,
                stacklevel=2,
            )
            vectors = brute_rel_parikh_set(n, phi, max_length=max_length)
            fallback = True

        if method == "both" and not fallback:
            oracle_vectors = brute_rel_parikh_set(n, phi, max_length=max_length)
            if vectors != oracle_vectors:
                raise MethodMismatchError(n, len(vectors), len(oracle_vectors))
            agree = True

    return AbelianComplexityResult(
        n=n,
        digits=digits,
        ac=len(vectors),
        method=method,
        rel_parikh_set=vectors,
        fallback=fallback,
        agree=agree,
    )


def abelian_complexity(n: int, substitution="tribonacci", method: str = "codec") -> int:
    """Number of distinct Parikh vectors of the factors of length `n`."""
    return compute_abelian_complexity(n, substitution, method=method).ac


def scan(a: int, b: int, substitution="tribonacci", method: str = "codec"):
    """Abelian complexity for every ``n`` in ``a, ..., b``.

    Returns
    -------
    pandas.DataFrame
        Columns "n", "ac", "method" and "fallback", one row per ``n``.

    """
    phi = set_up_substitution(substitution)
    _fail_if_method_not_supported(method)
    if a < 1 or b < a:
        raise ValueError(f"The range {a}..{b} must satisfy 1 <= a <= b.")

    rows = []
    for n in range(a, b + 1):
        result = compute_abelian_complexity(n, phi, method=method)
        rows.append(
            {"n": n, "ac": result.ac, "method": method, "fallback": result.fallback}
        )

    return pd.DataFrame(rows, columns=["n", "ac", "method", "fallback"])


def verify(max_n: int, substitution="tribonacci", min_n: int = 1):
    """Compare the co-decomposition with the oracle for every ``n <= max_n``.

    Rows where the co-decomposition was inapplicable have a missing "codec" value and
    "fallback" set; they count as agreeing.

    Returns
    -------
    pandas.DataFrame
        Columns "n", "codec", "oracle", "agree" and "fallback".

    """
    phi = set_up_substitution(substitution)
    if min_n < 1 or max_n < min_n:
        raise ValueError(
            f"The range {min_n}..{max_n} must satisfy 1 <= min_n <= max_n."
        )

    rows = []
    for n in range(min_n, max_n + 1):
        oracle_vectors = brute_rel_parikh_set(n, phi)
        try:
            z = z_set_from_digits(to_normal_frep(n, phi), phi)
            codec_vectors = rel_parikh_set(z)
        except InapplicableStepError:
            codec_vectors = None
        rows.append(
            {
                "n": n,
                "codec": pd.NA if codec_vectors is None else len(codec_vectors),
                "oracle": len(oracle_vectors),
                "agree": codec_vectors is None or codec_vectors == oracle_vectors,
                "fallback": codec_vectors is None,
            }
        )

    out = pd.DataFrame(rows, columns=["n", "codec", "oracle", "agree", "fallback"])
    out["codec"] = out["codec"].astype("Int64")
    return out


def _resolve_n_and_digits(n, digits, phi) -> tuple[int, FDigits]:
    if n is None and digits is None:
        raise ValueError("Either n or digits must be given.")

    if digits is None:
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ValueError(f"n must be a positive integer but is {n!r}.")
        return n, to_normal_frep(n, phi)

    value = frep_value(digits, phi)
    digits = normalize_frep(digits)
    if not is_normal_frep(digits, phi):
        raise InvalidRepresentationError(
            f"{render_frep(digits)} is not a normal F-representation for {phi}."
        )
    if value < 1:
        raise InvalidRepresentationError("The digits must describe some n >= 1.")
    if n is not None and n != value:
        raise InvalidRepresentationError(
            f"The digits {render_frep(digits)} describe {value}, not n = {n}."
        )
    return value, digits


def _fail_if_method_not_supported(method: str):
    if method not in SUPPORTED_METHODS:
        raise ValueError(
            f"The method must be one of {list(SUPPORTED_METHODS)} but is {method!r}."
        )
