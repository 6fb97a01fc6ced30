"""Organization dynamics, the even Collatz map, and their rewriting system."""

from ._orglab import (
    FUEL_DEFAULT,
    MAX_DAYS_DEFAULT,
    check_bisimulation,
    collatz_f,
    collatz_g,
    day_step,
    day_step_traced,
    decode,
    digit_of,
    encode,
    export_tpdb_srs,
    export_tpdb_trs,
    f_g_consistency,
    g_trajectory,
    generate_srs,
    is_bankrupt,
    normalize,
    normalize_word,
    run_until_bankrupt,
    state_of_digit,
    step_employee,
    summarize,
    verify_range,
)

__all__ = [
    "FUEL_DEFAULT",
    "MAX_DAYS_DEFAULT",
    "check_bisimulation",
    "collatz_f",
    "collatz_g",
    "day_step",
    "day_step_traced",
    "decode",
    "digit_of",
    "encode",
    "export_tpdb_srs",
    "export_tpdb_trs",
    "f_g_consistency",
    "g_trajectory",
    "generate_srs",
    "is_bankrupt",
    "normalize",
    "normalize_word",
    "run_until_bankrupt",
    "state_of_digit",
    "step_employee",
    "summarize",
    "verify_range",
]
