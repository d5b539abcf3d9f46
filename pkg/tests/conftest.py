import random

from hypothesis import strategies as st

import sparsepoly as sp

BACKENDS = (sp.Backend.ORDERED, sp.Backend.HASHED)


@st.composite
def polys(draw, arity=None, min_exp=-3, max_exp=3, max_terms=6, backend=None, min_coeff=-9, max_coeff=9):
    """Random small Laurent polynomial with integer coefficients (so ring
    identities hold exactly in floats)."""
    if arity is None:
        arity = draw(st.integers(1, 3))
    n = draw(st.integers(0, max_terms))
    rows = draw(
        st.lists(
            st.tuples(*[st.integers(min_exp, max_exp)] * arity),
            min_size=n,
            max_size=n,
        )
    )
    values = draw(
        st.lists(
            st.integers(min_coeff, max_coeff).map(float), min_size=n, max_size=n
        )
    )
    if backend is None:
        backend = draw(st.sampled_from(BACKENDS))
    return sp.new_spray(rows, values, arity=arity, backend=backend)


@st.composite
def poly_pairs(draw, **kwargs):
    arity = draw(st.integers(1, 3))
    return draw(polys(arity=arity, **kwargs)), draw(polys(arity=arity, **kwargs))


@st.composite
def poly_triples(draw, **kwargs):
    arity = draw(st.integers(1, 3))
    return (
        draw(polys(arity=arity, **kwargs)),
        draw(polys(arity=arity, **kwargs)),
        draw(polys(arity=arity, **kwargs)),
    )


def no_stored_zeros(p):
    return all(c != 0.0 for _, c in p.items())


def random_poly(rng: random.Random, arity, max_terms=6, min_exp=-3, max_exp=3,
                backend=sp.Backend.HASHED):
    """Seeded (non-hypothesis) generator for the big deterministic sweeps."""
    n = rng.randint(0, max_terms)
    rows = [tuple(rng.randint(min_exp, max_exp) for _ in range(arity)) for _ in range(n)]
    values = [float(rng.randint(-9, 9)) for _ in range(n)]
    return sp.new_spray(rows, values, arity=arity, backend=backend)
