from __future__ import annotations

import hypothesis.strategies as st

from gacalc import Multivector, Signature

SMALL_SIGNATURES = [
    Signature(1, 0),
    Signature(2, 0),
    Signature(3, 0),
    Signature(1, 1),
    Signature(0, 2),
]

# bounded coefficients keep absolute tolerances meaningful
tame_coeff = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)
wild_coeff = st.floats(allow_nan=False, allow_infinity=False, width=64)


def multivectors(sig: Signature, coeff=tame_coeff, grades=None):
    """Strategy for sparse multivectors over sig, optionally grade-limited."""
    blades = [
        b for b in range(1 << sig.dim) if grades is None or b.bit_count() in grades
    ]
    return st.dictionaries(st.sampled_from(blades), coeff, max_size=len(blades)).map(
        lambda terms: Multivector(sig, terms)
    )


def vectors(sig: Signature, coeff=tame_coeff):
    return st.lists(coeff, min_size=sig.dim, max_size=sig.dim).map(
        lambda comps: Multivector.vector(sig, comps)
    )
