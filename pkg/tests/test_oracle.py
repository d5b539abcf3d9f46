import random

import pytest
from hypothesis import given, settings

import sparsepoly as sp
from sparsepoly import oracle
from conftest import poly_pairs, polys, random_poly

S1 = sp.new_spray(
    [(0, 0, 1), (0, 1, 0), (0, 0, 2), (1, 0, 0), (6, -7, 8)],
    [-3, -3, 13, -3, 17],
)
S2 = sp.new_spray([(6, -7, 8), (0, 0, 2), (1, 1, 3)], [17, 11, -4])


def test_round_trip_worked_example():
    assert oracle.from_dense(oracle.to_dense(S1)) == S1


def test_to_dense_offsets():
    d = oracle.to_dense(S1)
    assert d.offsets == (0, -7, 0)
    assert d.extents == (7, 9, 9)
    assert d.data[0, 0 - d.offsets[1], 1] == -3  # the (0, 0, 1) term


def test_zero_maps_to_single_cell():
    d = oracle.to_dense(sp.zero(2))
    assert d.extents == (1, 1)
    assert d.offsets == (0, 0)
    assert not d.data.any()
    assert oracle.from_dense(d) == sp.zero(2)


def test_capacity_limit():
    wide = sp.new_spray([(0, 0, 0), (100, 100, 100)], [1.0, 1.0])
    with pytest.raises(sp.CapacityError):
        oracle.to_dense(wide)


def test_dense_multiply_against_sparse_product():
    got = oracle.from_dense(oracle.dense_multiply(oracle.to_dense(S1), oracle.to_dense(S2)))
    assert got == S1 * S2


def test_dense_multiply_matches_printed_expansion():
    got = oracle.from_dense(oracle.dense_multiply(oracle.to_dense(S1), oracle.to_dense(S2)))
    assert got == sp.parse(
        "+12*x^2*y*z^3 -51*x^7*y^-7*z^8 +289*x^12*y^-14*z^16 -68*x^7*y^-6*z^11 "
        "-33*y*z^2 -52*x*y*z^5 +143*z^4 +12*x*y*z^4 +12*x*y^2*z^3 "
        "+408*x^6*y^-7*z^10 -51*x^6*y^-6*z^8 -33*x*z^2 -33*z^3 -51*x^6*y^-7*z^9",
        3,
    )


def test_dense_multiply_by_unit():
    u = oracle.to_dense(sp.unit(3))
    assert oracle.from_dense(oracle.dense_multiply(oracle.to_dense(S1), u)) == S1


def test_dense_multiply_capacity():
    p = sp.new_spray([(0, 0, 0), (70, 70, 70)], [1.0, 1.0])
    d = oracle.to_dense(p)
    with pytest.raises(sp.CapacityError):
        oracle.dense_multiply(d, d)


@given(polys())
def test_round_trip_random(p):
    assert oracle.from_dense(oracle.to_dense(p)) == p


@settings(max_examples=60)
@given(poly_pairs())
def test_multiply_matches_oracle(pq):
    p, q = pq
    via_oracle = oracle.from_dense(
        oracle.dense_multiply(oracle.to_dense(p), oracle.to_dense(q))
    )
    assert via_oracle == p * q


def test_dense_walk_paper_config():
    cfg = sp.WalkConfig(
        d=2,
        n=17,
        kernel=sp.walk_kernel(2),
        initial=(10, 10),
        traps=((2, 3), (3, 5)),
        steps=100,
    )
    dense = oracle.dense_walk(cfg)
    assert dense == pytest.approx(0.9006642, abs=1e-7)
    _, sparse = sp.run_walk(cfg)
    assert dense == pytest.approx(sparse, abs=1e-10)


def test_dense_walk_zero_steps():
    cfg = sp.WalkConfig(d=2, n=5, kernel=sp.walk_kernel(2), initial=(1, 1), steps=0)
    assert oracle.dense_walk(cfg) == 1.0


def test_dense_walk_capacity():
    cfg = sp.WalkConfig(d=3, n=101, kernel=sp.walk_kernel(3), initial=(0, 0, 0))
    with pytest.raises(sp.CapacityError):
        oracle.dense_walk(cfg)


def test_dense_walk_random_configs_agree():
    rng = random.Random(555)
    for _ in range(10):
        d = rng.choice((1, 2))
        n = rng.randint(4, 8)
        steps = rng.randint(1, 20)
        initial = tuple(rng.randrange(n) for _ in range(d))
        n_traps = rng.randint(0, 2)
        traps = tuple(
            tuple(rng.randrange(n) for _ in range(d)) for _ in range(n_traps)
        )
        cfg = sp.WalkConfig(
            d=d, n=n, kernel=sp.walk_kernel(d), initial=initial, traps=traps, steps=steps
        )
        _, sparse = sp.run_walk(cfg)
        assert oracle.dense_walk(cfg) == pytest.approx(sparse, abs=1e-10)


def test_random_laurent_round_trips_seeded():
    rng = random.Random(20240818)
    for _ in range(1000):
        p = random_poly(rng, rng.randint(1, 3))
        assert oracle.from_dense(oracle.to_dense(p)) == p
