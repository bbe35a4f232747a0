from __future__ import annotations

from functools import lru_cache

import yaml
from _abelcodec.parry import ParrySubstitution
from _abelcodec.substitution_environment import set_up_substitution

from _abelcodec_tests import TEST_DATA_DIR

SUBSTITUTION_NAMES = ["tribonacci", "simple_2_1_1", "simple_1_0_0_1", "u2"]


@lru_cache(maxsize=100)
def cached_set_up_substitution(name: str) -> ParrySubstitution:
    return set_up_substitution(name)


@lru_cache(maxsize=10)
def load_test_data(name: str) -> dict:
    return yaml.safe_load((TEST_DATA_DIR / f"{name}.yaml").read_text(encoding="utf-8"))


def as_pairs(raw_pairs: list[list[str]]) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Convert ``[["01", "10"], ...]`` to a set of pairs of letter tuples."""
    return {
        (tuple(int(c) for c in z), tuple(int(c) for c in z_tilde))
        for z, z_tilde in raw_pairs
    }


def as_vectors(raw_vectors: list[list[int]]) -> frozenset[tuple[int, ...]]:
    return frozenset(tuple(v) for v in raw_vectors)
