"""Exact rational and symbolic powers of monomial ideals.

Thin string-oriented wrappers over the C++ core: rings are comma-separated
variable lists ("x,y,z"), ideals are generator lists ("x*y, y*z"), and
exponents are rational literals ("4/3").  All arithmetic is exact.
"""

from ._ratpow import (
    __version__,
    associated_primes,
    check_containment,
    closure,
    differential_power,
    minimal_primes,
    newton_polyhedron,
    primary_decomposition,
    rational_power,
    rational_symbolic_power,
    rational_symbolic_power_json,
    saturated_power,
    stability_denominator,
    standard_suite,
    symbolic_polyhedron,
    waldschmidt,
)

__all__ = [
    "__version__",
    "associated_primes",
    "check_containment",
    "closure",
    "differential_power",
    "minimal_primes",
    "newton_polyhedron",
    "primary_decomposition",
    "rational_power",
    "rational_symbolic_power",
    "rational_symbolic_power_json",
    "saturated_power",
    "stability_denominator",
    "standard_suite",
    "symbolic_polyhedron",
    "waldschmidt",
]
