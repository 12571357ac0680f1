#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
from .splitmix import SplitMix64, derive_seed, mix64
from .spec import THEOREM_NAMES, DEFAULT_BOUND, DEFAULT_SEED, FuzzSpec, validate_fuzz_spec, validate_config, \
    validate_config_base
from .trials import THEOREMS, TheoremCheck, TrialRecord, FuzzSummary, run_trial, run_fuzz

__all__ = [
    'SplitMix64', 'derive_seed', 'mix64', 'THEOREM_NAMES', 'DEFAULT_BOUND', 'DEFAULT_SEED', 'FuzzSpec',
    'validate_fuzz_spec', 'validate_config', 'validate_config_base', 'THEOREMS', 'TheoremCheck', 'TrialRecord',
    'FuzzSummary', 'run_trial', 'run_fuzz',
]
