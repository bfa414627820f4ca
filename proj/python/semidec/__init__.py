"""Binary quasiorder and semilattice decomposition of finite semigroups."""

from ._semidec import (
    Error,
    Semigroup,
    analyze,
    binary_quasiorder,
    build_witness,
    catalog,
    check_witness,
    count_semigroups,
    decompose,
    idempotents,
    least_semilattice_congruence,
    oracle,
    prime_coideals,
    up_class,
)

__all__ = [
    "Error",
    "Semigroup",
    "analyze",
    "binary_quasiorder",
    "build_witness",
    "catalog",
    "check_witness",
    "count_semigroups",
    "decompose",
    "idempotents",
    "least_semilattice_congruence",
    "oracle",
    "prime_coideals",
    "up_class",
]
