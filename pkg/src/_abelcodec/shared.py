import textwrap
from collections.abc import Iterable


class InvalidSubstitutionError(ValueError):
    """Raised when a substitution is not of simple or non-simple Parry form."""


class InvalidRepresentationError(ValueError):
    """Raised when a digit sequence is no admissible F-representation."""


class WordLengthLimitExceededError(RuntimeError):
    """Raised before materializing a word longer than the configured cap."""

    def __init__(self, what: str, length: int, max_length: int):
        self.length = length
        self.max_length = max_length
        super().__init__(
            format_errors_and_warnings(
                f"""
                Materializing {what} requires {length} letters, but the word length
                cap is {max_length}.

                Raise the cap with `set_max_word_length` or `--max-length`, or use
                the co-decomposition method which never materializes u_[n].
                """
            )
        )


class InapplicableStepError(ValueError):
    """Raised when the image of a block pair violates the prefix hypothesis of a step.

    The step appends the digits `digits` and needs ``phi^k(z_tilde)`` to begin with the
    prefix ``u_[q]`` for every pair, where ``<q>_F = digits``.

    """

    def __init__(self, z: str, z_tilde: str, digits: tuple[int, ...]):
        self.z = z
        self.z_tilde = z_tilde
        self.digits = digits
        rendered_digits = ",".join(str(d) for d in digits)
        super().__init__(
            f"The block pair ({z} | {z_tilde}) does not allow appending the digits "
            f"({rendered_digits}): the image of {z_tilde!r} lacks the required prefix."
        )


class MethodMismatchError(AssertionError):
    """Raised when the co-decomposition and the brute-force oracle disagree."""

    def __init__(self, n: int, codec_ac: int, oracle_ac: int):
        self.n = n
        self.codec_ac = codec_ac
        self.oracle_ac = oracle_ac
        super().__init__(
            f"AC({n}) differs between methods: codec gives {codec_ac}, oracle gives "
            f"{oracle_ac}."
        )


class OracleFallbackWarning(UserWarning):
    """The co-decomposition was inapplicable and the oracle answered instead."""


class CoarseDecompositionWarning(UserWarning):
    """A co-decomposition had to relax the admissibility of its blocks."""


def format_list_linewise(list_: Iterable[str]) -> str:
    formatted_list = '",\n    "'.join(list_)
    return textwrap.dedent(
        """
        [
            "{formatted_list}",
        ]
        """
    ).format(formatted_list=formatted_list)


def format_errors_and_warnings(text, width=79):
    """Format our own exception messages and warnings by dedenting paragraphs and
    wrapping at the specified width.

    Parameters
    ----------
    text : str
        The text which can include multiple paragraphs separated by two newlines.
    width : int
        The text will be wrapped by `width` characters.

    Returns
    -------
    formatted_text : str
        Correctly dedented, wrapped text.

    """
    text = text.lstrip("\n")
    paragraphs = text.split("\n\n")
    wrapped_paragraphs = []
    for paragraph in paragraphs:
        dedented_paragraph = textwrap.dedent(paragraph)
        wrapped_paragraph = textwrap.fill(dedented_paragraph, width=width)
        wrapped_paragraphs.append(wrapped_paragraph)

    return "\n\n".join(wrapped_paragraphs)


def parse_to_tuple_of_ints(user_input, name: str) -> tuple[int, ...]:
    """Parse a comma-separated string or a sequence of integers to a tuple of ints.

    Surrounding parentheses and whitespace are ignored, so ``"(1,0,1)"``, ``"1, 0, 1"``
    and ``[1, 0, 1]`` all give ``(1, 0, 1)``. The empty string and ``"()"`` give ``()``.

    """
    if isinstance(user_input, str):
        stripped = user_input.strip().removeprefix("(").removesuffix(")").strip()
        items = [item.strip() for item in stripped.split(",")] if stripped else []
    else:
        try:
            items = list(user_input)
        except TypeError as e:
            raise ValueError(
                f"{name!r} needs to be a string or a sequence of integers."
            ) from e

    out = []
    for item in items:
        try:
            value = int(item)
        except (TypeError, ValueError) as e:
            raise ValueError(f"{name!r} contains the non-integer item {item!r}.") from e
        if value < 0:
            raise ValueError(f"{name!r} contains the negative integer {value}.")
        out.append(value)

    return tuple(out)
