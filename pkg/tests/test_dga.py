from collections import Counter

import pytest

from confcoh.closedform import build_Q, mixed_table
from confcoh.dga import (
    Genus0N1Unsupported,
    Monomial,
    basis_count_series,
    blocks,
    cohomology_dims,
    cohomology_reps,
    cohomology_weights,
    differential_block,
    differential_monomial,
    dump_blocks,
    enumerate_basis,
    mono_degrees,
    mono_weight,
)
from confcoh.linalg import read_matrix_market
from confcoh.reps import Character, RepLabel, VirtualRep

INSTANCES = [
    (0, 4, "A"),
    (0, 4, "B"),
    (1, 5, "A"),
    (1, 4, "B"),
    (2, 4, "A"),
    (2, 3, "B"),
    (3, 3, "A"),
]


def one(g):
    return Monomial(0, 0, 0, 0, (0,) * (2 * g))


# --- generators and basis ----------------------------------------------------


def test_generator_degrees_match_table():
    g = 2
    z = (0,) * 4
    # a_1, b_2, p, s1, sa_1, sb_2 probed through single-generator monomials
    assert mono_degrees(g, Monomial(1, 0, 0, 0, z)) == (1, 0, 1)
    assert mono_degrees(g, Monomial(8, 0, 0, 0, z)) == (1, 0, 1)
    assert mono_degrees(g, Monomial(0, 0, 1, 0, z)) == (2, 0, 1)
    assert mono_degrees(g, Monomial(0, 1, 0, 0, z)) == (0, 1, 2)
    assert mono_degrees(g, Monomial(0, 0, 0, 1, z)) == (2, 1, 2)
    assert mono_degrees(g, Monomial(0, 0, 0, 0, (1, 0, 0, 0))) == (1, 1, 2)
    assert mono_degrees(g, Monomial(0, 0, 0, 0, (0, 0, 0, 1))) == (1, 1, 2)


def test_degree_formulas_consistent():
    # deg1, deg2, deg3 of a monomial from its exponents
    for g, n, model in INSTANCES:
        for m in enumerate_basis(g, n, model):
            ext_bits = bin(m.ext).count("1")
            sym = sum(m.sym)
            d1, d2, d3 = mono_degrees(g, m)
            assert d1 == ext_bits + 2 * m.p + 2 * m.sp + sym
            assert d2 == m.s1 + m.sp + sym
            assert d3 == ext_bits + m.p + 2 * m.s1 + 2 * m.sp + 2 * sym


def test_basis_examples():
    basis = enumerate_basis(1, 1, "A")
    assert len(basis) == 4  # 1, a1, b1, p
    assert len(enumerate_basis(0, 2, "A")) == 3  # 1, p, s1
    assert len(enumerate_basis(1, 2, "B")) == 12


def test_basis_counts_match_generating_function():
    for g, n, model in INSTANCES:
        counts = Counter(mono_degrees(g, m)[2] for m in enumerate_basis(g, n, model))
        series = basis_count_series(g, model, n)
        assert [counts.get(k, 0) for k in range(n + 1)] == series


def test_basis_deterministic():
    assert enumerate_basis(2, 4, "A") == enumerate_basis(2, 4, "A")
    assert list(enumerate_basis(2, 4, "A")) == sorted(enumerate_basis(2, 4, "A"))


# --- the differential ---------------------------------------------------------


def test_d_of_s1():
    g = 1
    m = Monomial(0, 1, 0, 0, (0, 0))
    terms = dict(
        ((mono, c) for c, mono in differential_monomial(g, "A", m))
    )
    assert terms == {
        Monomial(0, 0, 1, 0, (0, 0)): 1,  # p
        Monomial(3, 0, 0, 0, (0, 0)): -1,  # a1 b1
    }


def test_d_of_sa1():
    g = 1
    m = Monomial(0, 0, 0, 0, (1, 0))
    assert differential_monomial(g, "A", m) == [
        (1, Monomial(1, 0, 1, 0, (0, 0)))  # a1 p
    ]


def test_d_of_sa1_times_p_vanishes_in_A():
    g = 1
    m = Monomial(0, 0, 1, 0, (1, 0))
    assert differential_monomial(g, "A", m) == []
    # but survives in model B as a1 p^2
    assert differential_monomial(g, "B", m) == [(1, Monomial(1, 0, 2, 0, (0, 0)))]


def test_d_of_sp():
    g = 1
    m = Monomial(0, 0, 0, 1, (0, 0))
    assert differential_monomial(g, "B", m) == [(1, Monomial(0, 0, 2, 0, (0, 0)))]


def test_d_squared_is_zero():
    for g, n, model in INSTANCES:
        for m in enumerate_basis(g, n, model):
            acc = {}
            for c1, m1 in differential_monomial(g, model, m):
                for c2, m2 in differential_monomial(g, model, m1):
                    acc[m2] = acc.get(m2, 0) + c1 * c2
            assert not any(acc.values()), (g, n, model, m)


def test_d_is_bidegree_homogeneous():
    for g, n, model in INSTANCES:
        for m in enumerate_basis(g, n, model):
            d1, d2, d3 = mono_degrees(g, m)
            for _, image in differential_monomial(g, model, m):
                e1, e2, e3 = mono_degrees(g, image)
                assert (e1, e2) == (d1 + 2, d2 - 1)
                assert e3 <= d3  # the filtration is preserved


def test_d_preserves_torus_weight():
    for g, n, model in INSTANCES:
        if g == 0:
            continue
        for m in enumerate_basis(g, n, model):
            w = mono_weight(g, m)
            for _, image in differential_monomial(g, model, m):
                assert mono_weight(g, image) == w


def test_block_matrix_shift_and_composition():
    g, n, model = 1, 4, "A"
    for block in sorted(blocks(g, n, model)):
        bm = differential_block(g, n, model, block)
        assert bm.matrix.n_cols == len(bm.source)
        assert bm.matrix.n_rows == len(bm.target)
        nxt = differential_block(g, n, model, (block[0] + 2, block[1] - 1))
        # compose: every column of d followed by d gives zero
        index = {m: r for r, m in enumerate(nxt.target)}
        for col, mono in enumerate(bm.source):
            acc = [0] * len(nxt.target)
            for r, c, v in bm.matrix.entries():
                if c != col:
                    continue
                for r2, c2, v2 in nxt.matrix.entries():
                    if c2 == r:
                        acc[r2] += v2 * v
            assert not any(acc)


# --- cohomology ---------------------------------------------------------------


def test_cohomology_torus_n1():
    assert cohomology_dims(1, 1) == {(0, 0): 1, (1, 0): 2, (2, 0): 1}


def test_cohomology_genus0():
    assert cohomology_dims(0, 2) == {(0, 0): 1}
    dims = cohomology_dims(0, 3)
    betti = {}
    for (d1, d2), d in dims.items():
        betti[d1 + d2] = betti.get(d1 + d2, 0) + d
    assert betti == {0: 1, 3: 1}


def test_cohomology_genus0_n1_unsupported():
    with pytest.raises(Genus0N1Unsupported):
        cohomology_dims(0, 1)


def test_cohomology_g1_n3_regraded():
    dims = cohomology_dims(1, 3)
    betti = {}
    for (d1, d2), d in dims.items():
        betti[d1 + d2] = betti.get(d1 + d2, 0) + d
    assert [betti.get(k, 0) for k in range(5)] == [1, 2, 3, 4, 2]


def test_models_agree():
    # the quotient ideal is acyclic, so both models compute the same dims
    for g in (0, 1, 2):
        for n in range(0, 7):
            if g == 0 and n == 1:
                continue
            assert cohomology_dims(g, n, "A") == cohomology_dims(g, n, "B"), (g, n)


def test_euler_bookkeeping():
    # alternating sum of cohomology equals alternating sum of the basis
    for g, n, model in INSTANCES:
        if g == 0 and n == 1:
            continue
        chi_basis = 0
        for m in enumerate_basis(g, n, model):
            d1, d2, _ = mono_degrees(g, m)
            chi_basis += (-1) ** (d1 + d2)
        chi_cohom = sum(
            (-1) ** (d1 + d2) * d for (d1, d2), d in cohomology_dims(g, n, model).items()
        )
        assert chi_basis == chi_cohom


def test_cohomology_weights_torus():
    weights = cohomology_weights(1, 1)
    assert weights[(1, 0)] == Character({(1,): 1, (-1,): 1})
    assert weights[(0, 0)] == Character({(0,): 1})


def test_weights_mass_matches_dims():
    for g, n in ((1, 4), (2, 3)):
        dims = cohomology_dims(g, n)
        weights = cohomology_weights(g, n)
        assert set(weights) == set(dims)
        for block, char in weights.items():
            assert char.mass() == dims[block]


def test_cohomology_reps_torus():
    table = cohomology_reps(1, 1)
    assert table.entries == {
        (0, 0): VirtualRep.unit(),
        (1, 1): VirtualRep.single(RepLabel(0, 1)),
        (2, 2): VirtualRep.unit(),
    }


def test_cohomology_reps_match_closed_form():
    for g, n in ((1, 3), (1, 5), (2, 2), (2, 4), (3, 2), (3, 3)):
        assert cohomology_reps(g, n) == mixed_table(g, n), (g, n)


def test_reps_cross_check_u_slice():
    table = cohomology_reps(2, 2)
    slice2 = build_Q(2, 2).coeff_u(2)
    want = {(t + s, t + 2 * s): rep for (t, s), rep in slice2.items()}
    assert table.entries == want


def test_thread_pool_gives_identical_results(monkeypatch):
    from confcoh import dga

    want = cohomology_dims(2, 4, "A")
    monkeypatch.setenv("CONFCOH_THREADS", "4")
    dga._cohomology_by_weight.cache_clear()
    try:
        assert cohomology_dims(2, 4, "A") == want
    finally:
        dga._cohomology_by_weight.cache_clear()


def test_dump_blocks(tmp_path):
    written = dump_blocks(1, 2, "A", tmp_path)
    assert written
    for path in written:
        read_matrix_market(path)  # parses back
    bm = differential_block(1, 2, "A", (0, 1))
    again = read_matrix_market(
        tmp_path / "g1_n2_A_d0_1.mtx"
    )
    assert again == bm.matrix
