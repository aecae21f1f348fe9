"""Multigraded Poincare series and resolutions over monomial quotient rings."""

from ._core import (
    Ideal,
    InputError,
    InternalError,
    Series,
    betti,
    candidate_terms,
    denominator,
    deviations,
    eagon_check,
    eagon_rank_formula,
    golod_denominator,
    homology,
    is_golod,
    is_golod_generic,
    lattice_isomorphisms,
    poincare_series,
    polarization_transport,
    polarize,
    ranks,
    run,
    verify_lcm,
)

__all__ = [name for name in dir() if not name.startswith("_")]
