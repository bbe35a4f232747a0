from __future__ import annotations

import functools
import re
from collections.abc import Mapping
from pathlib import Path

import yaml

from _abelcodec.config import PATH_TO_SUBSTITUTIONS
from _abelcodec.parry import ParrySubstitution, parse_rules, validate_parry
from _abelcodec.shared import (
    InvalidSubstitutionError,
    format_errors_and_warnings,
    format_list_linewise,
    parse_to_tuple_of_ints,
)

_SPEC_PATTERN = re.compile(
    r"^\s*(?P<kind>simple|non-?simple|non_simple)"
    r"(?P<fields>(\s+[a-z]+\s*=\s*[^\s]+)*)\s*$",
    flags=re.IGNORECASE,
)
_FIELD_PATTERN = re.compile(r"([a-z]+)\s*=\s*([^\s]+)", flags=re.IGNORECASE)

_KNOWN_FIELDS = {"kind", "m", "p", "alpha", "name", "description", "reference"}


def set_up_substitution(source) -> ParrySubstitution:
    """Set up a Parry substitution from any of the supported sources.

    Parameters
    ----------
    source : ParrySubstitution, str, pathlib.Path or mapping
        Either a substitution, the name of a registered substitution, a spec string
        like ``"simple m=3 alpha=1,1,1"`` or ``"0->01;1->02;2->0"``, the path to a YAML
        file, or a mapping with the keys ``kind``, ``m``, ``p`` (non-simple only) and
        ``alpha``.

    Returns
    -------
    ParrySubstitution

    """
    if isinstance(source, ParrySubstitution):
        out = source
    elif isinstance(source, Mapping):
        out = substitution_from_dict(source)
    elif isinstance(source, Path):
        out = load_substitution_file(source)
    elif isinstance(source, str):
        text = source.strip()
        if text in _load_registry():
            out = substitution_from_dict(_load_registry()[text], name=text)
        elif text.lower().endswith((".yaml", ".yml")):
            out = load_substitution_file(Path(text))
        else:
            out = parse_substitution_spec(text)
    else:
        raise InvalidSubstitutionError(
            f"Cannot set up a substitution from an object of type {type(source)}."
        )

    return out


def parse_substitution_spec(text: str) -> ParrySubstitution:
    """Parse ``simple m=<int> alpha=<csv>``, ``nonsimple m=<int> p=<int> alpha=<csv>``
    or raw rules ``0-><word>;1-><word>;...``.
    """
    if "->" in text:
        return parse_rules(text)

    match = _SPEC_PATTERN.match(text)
    if match is None:
        raise InvalidSubstitutionError(
            format_errors_and_warnings(
                f"""
                The substitution spec {text!r} is malformed.

                Use 'simple m=<int> alpha=<csv>', 'nonsimple m=<int> p=<int>
                alpha=<csv>', raw rules like '0->01;1->02;2->0' or one of the
                registered names:
                """
            )
            + format_list_linewise(available_substitutions())
        )

    fields = {
        key.lower(): value for key, value in _FIELD_PATTERN.findall(match["fields"])
    }
    return substitution_from_dict({"kind": match["kind"], **fields})


def substitution_from_dict(data: Mapping, name: str | None = None) -> ParrySubstitution:
    """Build a substitution from the fields ``kind``, ``m``, ``p`` and ``alpha``."""
    where = f" of {name!r}" if name else ""
    unknown = sorted(set(data) - _KNOWN_FIELDS)
    if unknown:
        raise InvalidSubstitutionError(
            f"Unknown fields{where}: {unknown}. Expected kind, m, p and alpha."
        )
    missing = [key for key in ("kind", "m", "alpha") if key not in data]
    if missing:
        raise InvalidSubstitutionError(f"Missing fields{where}: {missing}.")

    try:
        m = int(data["m"])
        p = None if data.get("p") is None else int(data["p"])
        alpha = parse_to_tuple_of_ints(data["alpha"], "alpha")
    except (TypeError, ValueError) as e:
        raise InvalidSubstitutionError(
            f"The fields{where} could not be parsed: {e}"
        ) from e

    return validate_parry(data["kind"], m, p, alpha)


def load_substitution_file(path: Path) -> ParrySubstitution:
    """Load a substitution from a YAML document with the fields of the registry."""
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise InvalidSubstitutionError(f"Cannot read {path}: {e}") from e
    except yaml.YAMLError as e:
        raise InvalidSubstitutionError(f"{path} is no valid YAML: {e}") from e

    if not isinstance(data, Mapping):
        raise InvalidSubstitutionError(f"{path} must contain a mapping of fields.")
    return substitution_from_dict(data, name=str(path))


def available_substitutions() -> list[str]:
    return sorted(_load_registry())


def describe_substitution(name: str) -> str:
    """English description of a registered substitution."""
    entry = _load_registry()[name]
    return " ".join(entry.get("description", {}).get("en", "").split())


@functools.lru_cache(maxsize=1)
def _load_registry(yaml_path: Path = PATH_TO_SUBSTITUTIONS) -> dict:
    """Load the registry of named substitutions.

    Parameters
    ----------
    yaml_path : path
        Path to the yaml file. (Used for testing of this function).

    Returns
    -------
    dict
        Raw entries keyed by name.

    """
    return yaml.safe_load(yaml_path.read_text(encoding="utf-8"))
