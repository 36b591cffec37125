"""Bifurcation braid monodromy of Brieskorn-Pham and plane-curve families."""

from __future__ import annotations

from .braids import (
    BandGenerator,
    BraidWord,
    band_prime_to_word,
    band_to_word,
    braids_equal,
    compose,
    expand_band,
    exponent_sum,
    inverse,
    parse_braid,
    permutation_image,
)
from .config import RunConfig, load_config
from .hurwitz import HurwitzTuple, hurwitz_act, orbit_bfs, periodic_tuple, stabilizes
from .permutations import Permutation
from .polynomials import (
    ComplexPolynomial,
    PolynomialFamily,
    bp_discriminant_family,
    degeneracy_check_bp,
    discriminant_in_x,
    plane_discriminant_family,
    roots,
    sylvester_resultant,
)
from .theorems import (
    GeneratorSet,
    anbraids_generators,
    theorem1_generators,
    theorem2_generators,
    verify_delta_conjugation,
    verify_pipeline_bp,
    verify_redundancy,
    verify_stabilization,
)
from .tracking import LoopPath, TrackedBraid, geometric_basis_bp, geometric_basis_plane, track_loop

__version__ = "0.1.0"
