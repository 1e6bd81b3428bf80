from fractions import Fraction

import hypothesis.strategies as st

from goldmanab.abelian import ModuleElement, Monomial
from goldmanab.symplectic import SurfaceSignature
from goldmanab.words import reduce_word


def raw_letters(n=3, max_len=8, max_exp=3):
    return st.lists(
        st.tuples(st.integers(1, n), st.integers(-max_exp, max_exp)),
        max_size=max_len,
    )


def words(n=3, max_len=8, max_exp=3):
    return raw_letters(n, max_len, max_exp).map(lambda raw: reduce_word(raw, n))


def monomials(n, radius=6):
    return st.lists(
        st.integers(-radius, radius), min_size=n, max_size=n
    ).map(lambda exps: Monomial(tuple(exps)))


def int_coeffs(bound=9):
    return st.integers(-bound, bound).filter(bool)


def rational_coeffs(bound=9):
    return st.builds(
        Fraction, st.integers(-bound, bound).filter(bool), st.integers(1, bound)
    )


def elements(n, ring="Z", max_terms=4, radius=5):
    coeff = int_coeffs() if ring == "Z" else rational_coeffs()
    return st.lists(
        st.tuples(monomials(n, radius), coeff), max_size=max_terms
    ).map(lambda terms: ModuleElement(ring, terms))


SIGNATURES = [
    SurfaceSignature.closed(1),
    SurfaceSignature.closed(2),
    SurfaceSignature.with_boundary(0, 2),
    SurfaceSignature.with_boundary(1, 2),
    SurfaceSignature.with_boundary(1, 3),
]


def signatures():
    return st.sampled_from(SIGNATURES)
