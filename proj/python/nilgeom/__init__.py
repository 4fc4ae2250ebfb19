"""Exact construction and verification of metric germs with parallel structures."""

from ._nilgeom import (
    NilgeomError,
    cartan_test,
    classify,
    commutant_dim,
    forge,
    roundtrip,
    trunc_mul,
)

__all__ = ["NilgeomError", "cartan_test", "classify", "commutant_dim", "forge", "roundtrip", "trunc_mul"]
