"""seqlab: integer sequence families, digit-map dynamics, and
arithmetic function probes, with a CLI for b-file and JSON export."""

from .addon import (
    GeneratorSpec,
    ScanHit,
    ScanReport,
    concat_stream,
    g_addon,
    membership_scan,
    power_and_2p_scan,
    prime_digital_stream,
    prime_rank_scan,
    term_digit_count,
)
from .analysis import (
    Convergent,
    MetallicSpec,
    expression_cycle,
    expression_prime_search,
    fs_theta,
    lipschitz_probe,
    lucky_cancellations,
    metallic_convergents,
    product_of_factorials,
    s_family,
)
from .bfile import parse_bfile, read_bfile, render_bfile, write_bfile
from .digits import DigitString, concat_decimal, digit_count, digital_root, reverse_fixed
from .dynamics import (
    CensusReport,
    CycleClass,
    MapSpec,
    OrbitReport,
    census,
    closure_histogram,
    orbit,
    step,
)
from .factor import (
    Factorization,
    factorize,
    integer_nth_root,
    is_perfect_power,
    largest_prime_factor,
    smarandache_S,
    smarandache_S_prime_power,
)
from .primes import DEFAULT_ROUNDS, DEFAULT_SEED, PrimalityVerdict, is_prime, primes, primes_up_to
from .sieves import (
    DEFAULT_SCHEDULE,
    SieveSchedule,
    erdos_smarandache,
    nap_sequence,
    nary_sieve,
    representation_count,
)
from .spds import (
    SegmentPartition,
    consecutive_spds_runs,
    is_spds_member,
    pattern_search,
    power_chain_check,
    spds_enumerate,
    square_partitions,
)
from .verify import VerifySuiteResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "CensusReport",
    "Convergent",
    "CycleClass",
    "DEFAULT_ROUNDS",
    "DEFAULT_SCHEDULE",
    "DEFAULT_SEED",
    "DigitString",
    "Factorization",
    "GeneratorSpec",
    "MapSpec",
    "MetallicSpec",
    "OrbitReport",
    "PrimalityVerdict",
    "ScanHit",
    "ScanReport",
    "SegmentPartition",
    "SieveSchedule",
    "VerifySuiteResult",
    "census",
    "closure_histogram",
    "concat_decimal",
    "concat_stream",
    "consecutive_spds_runs",
    "digit_count",
    "digital_root",
    "erdos_smarandache",
    "expression_cycle",
    "expression_prime_search",
    "factorize",
    "fs_theta",
    "g_addon",
    "integer_nth_root",
    "is_perfect_power",
    "is_prime",
    "is_spds_member",
    "largest_prime_factor",
    "lipschitz_probe",
    "lucky_cancellations",
    "membership_scan",
    "metallic_convergents",
    "nap_sequence",
    "nary_sieve",
    "orbit",
    "parse_bfile",
    "pattern_search",
    "power_and_2p_scan",
    "power_chain_check",
    "prime_digital_stream",
    "prime_rank_scan",
    "primes",
    "primes_up_to",
    "product_of_factorials",
    "read_bfile",
    "render_bfile",
    "representation_count",
    "reverse_fixed",
    "run_suite",
    "s_family",
    "smarandache_S",
    "smarandache_S_prime_power",
    "spds_enumerate",
    "square_partitions",
    "step",
    "term_digit_count",
    "write_bfile",
]
