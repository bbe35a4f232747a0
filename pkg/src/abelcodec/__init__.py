"""This module contains the main namespace of abelcodec."""
from __future__ import annotations

try:
    # Import the version from _version.py which is dynamically created by
    # setuptools-scm upon installing the project with pip.
    # Do not put it under version control!
    from _abelcodec._version import version as __version__
except ImportError:
    __version__ = "unknown"


import itertools
import warnings

import pytest
from _abelcodec import abelcodec_typing, config, shared
from _abelcodec.codecomp import (
    BlockPair,
    CoDecomposition,
    StabilizationReport,
    ZSet,
    co_decompose,
    compute_R,
    covering_prefix,
    covering_prefix_length,
    detect_stabilization,
    rel_parikh_set,
    render_zset,
    z_base,
    z_set,
    z_set_from_digits,
    z_step,
    z_stroke,
)
from _abelcodec.config import set_max_word_length
from _abelcodec.interface import (
    AbelianComplexityResult,
    abelian_complexity,
    compute_abelian_complexity,
    scan,
    verify,
)
from _abelcodec.numeration import (
    digits_from_pattern,
    frep_value,
    prefix_from_frep,
    to_normal_frep,
)
from _abelcodec.oracle import (
    BalanceProfile,
    balance_profile,
    brute_ac,
    brute_rel_parikh_set,
)
from _abelcodec.parry import (
    LengthTable,
    ParrySubstitution,
    apply_morphism,
    apply_power,
    block_lengths,
    fixed_point_prefix,
    u_p_substitution,
    validate_parry,
)
from _abelcodec.shared import (
    InapplicableStepError,
    InvalidRepresentationError,
    InvalidSubstitutionError,
    MethodMismatchError,
    WordLengthLimitExceededError,
)
from _abelcodec.substitution_environment import (
    available_substitutions,
    set_up_substitution,
)
from _abelcodec.words import (
    factors_of_length,
    left_cancel,
    parikh,
    relative_parikh,
    right_cancel,
)
from _abelcodec_tests import TEST_DIR

COUNTER_TEST_EXECUTIONS = itertools.count()


def test(*args):
    n_test_executions = next(COUNTER_TEST_EXECUTIONS)

    if n_test_executions == 0:
        pytest.main([str(TEST_DIR), "--noconftest", *args])
    else:
        warnings.warn(
            "Repeated execution of the test suite is not possible. Start a new Python "
            "session or restart the kernel in a Jupyter/IPython notebook to re-run the "
            "tests."
        )


__all__ = [
    "__version__",
    "AbelianComplexityResult",
    "BalanceProfile",
    "BlockPair",
    "CoDecomposition",
    "InapplicableStepError",
    "InvalidRepresentationError",
    "InvalidSubstitutionError",
    "LengthTable",
    "MethodMismatchError",
    "ParrySubstitution",
    "StabilizationReport",
    "WordLengthLimitExceededError",
    "ZSet",
    "abelcodec_typing",
    "abelian_complexity",
    "apply_morphism",
    "apply_power",
    "available_substitutions",
    "balance_profile",
    "block_lengths",
    "brute_ac",
    "brute_rel_parikh_set",
    "co_decompose",
    "compute_R",
    "compute_abelian_complexity",
    "config",
    "covering_prefix",
    "covering_prefix_length",
    "detect_stabilization",
    "digits_from_pattern",
    "factors_of_length",
    "fixed_point_prefix",
    "frep_value",
    "left_cancel",
    "parikh",
    "prefix_from_frep",
    "rel_parikh_set",
    "relative_parikh",
    "render_zset",
    "right_cancel",
    "scan",
    "set_max_word_length",
    "set_up_substitution",
    "shared",
    "to_normal_frep",
    "u_p_substitution",
    "validate_parry",
    "verify",
    "z_base",
    "z_set",
    "z_set_from_digits",
    "z_step",
    "z_stroke",
]
