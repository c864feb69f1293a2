"""junctionlab: exact digit-sum dynamics in any base.

Generators of u are the v with v + s(v) = u (s = base-b digit sum).  The
package computes generator sets and counts by recurrence with independent
brute-force oracles, streams self and junction numbers, and builds the full
hierarchy of smallest-numbers-with-n-generators on an exact
tower-of-exponentials integer type, so rows remain comparable long after
their values stop fitting in memory as digits.
"""

from .digits import complement, digit_sum, digits_of, generator_window, step
from .inverse import (
    CanonicalRep,
    StructuredHit,
    canonical_rep,
    count_generators,
    enum_with_count,
    generators,
    generators_bruteforce,
    set_cache_cap,
    smallest_with_count_scan,
    smallest_with_count_structured,
    stream_by_count,
)
from .kaprekar import (
    KTable,
    QuasiRep,
    base_pair_equivalent,
    conjectured_height,
    fast_path,
    index_set,
    quasi_rep,
    quasi_value,
    tau_sequence,
    toy_sequence_a,
)
from .towerint import (
    OVERFLOW,
    TowerInt,
    TowerParseError,
    add,
    compare,
    divide_exact,
    from_natural,
    height_of,
    parse,
    power_of_base,
    render,
    residue_mod_bm1,
    scale_by_natural,
    to_natural,
)

__version__ = "0.1.0"
