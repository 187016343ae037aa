import pytest
from hypothesis import given, strategies as st

from hitstab.combinat import enumerate_omega, enumerate_partitions
from hitstab.functor_eval import s_basis
from hitstab.steenrod import (
    digit_weight,
    filtration_basis,
    graded_piece,
    hit_quotient,
    induced_sq_on_gr,
    kernel_dim,
    monomial_weight,
    q_level_dims,
    q_subquotient,
    qa_character,
    qa_character_coeff,
    qa_dim,
    qa_space,
    sq_on_monomial,
    square_generators,
    weight_vector,
)

exponents = st.lists(st.integers(0, 9), min_size=1, max_size=3).map(tuple)


def total_square_expansion(a):
    """Product of (x_j + x_j^2)^(a_j) as an F_2 polynomial by degree."""
    poly = {tuple(0 for _ in a): 1}
    for j, e in enumerate(a):
        for _ in range(e):
            nxt = {}
            for mono in poly:
                for bump in (1, 2):
                    key = list(mono)
                    key[j] += bump
                    key = tuple(key)
                    nxt[key] = nxt.get(key, 0) ^ 1
            poly = {m: 1 for m, c in nxt.items() if c}
    return poly


@given(exponents)
def test_sq_matches_total_square(a):
    n = sum(a)
    expansion = total_square_expansion(a)
    for s in range(0, n + 2):
        expect = {m for m in expansion if sum(m) == n + s}
        assert sq_on_monomial(s, a) == frozenset(expect)


@given(exponents)
def test_sq_top_and_beyond(a):
    n = sum(a)
    assert sq_on_monomial(0, a) == frozenset({a})
    assert sq_on_monomial(n, a) == frozenset({tuple(2 * e for e in a)})
    assert sq_on_monomial(n + 1, a) == frozenset()


@given(exponents, st.integers(1, 8))
def test_sq_never_raises_weight(a, s):
    w = weight_vector(a)
    for m in sq_on_monomial(s, a):
        assert all(x <= y for x, y in zip(weight_vector(m), w))


@given(st.tuples(exponents, exponents).filter(lambda ab: len(ab[0]) == len(ab[1])), st.integers(0, 6))
def test_cartan_formula(ab, s):
    a, b = ab
    product = tuple(x + y for x, y in zip(a, b))
    lhs = sq_on_monomial(s, product)
    rhs: set = set()
    for i in range(s + 1):
        for ma in sq_on_monomial(i, a):
            for mb in sq_on_monomial(s - i, b):
                m = tuple(x + y for x, y in zip(ma, mb))
                rhs ^= {m}
    assert lhs == frozenset(rhs)


def test_weight_helpers():
    assert digit_weight(0) == 0
    assert digit_weight(7) == 3
    assert weight_vector((6, 1)) == (2, 1)
    assert monomial_weight((6, 1)) == 3
    with pytest.raises(ValueError):
        digit_weight(-1)


def test_square_generators():
    assert square_generators(1) == []
    assert square_generators(2) == [1]
    assert square_generators(7) == [1, 2, 4]
    assert square_generators(8) == [1, 2, 4]
    assert square_generators(9) == [1, 2, 4, 8]


def test_filtration_partitions_ambient():
    n, k = 6, 3
    full = s_basis(n, k)
    counts = {}
    for a in full:
        counts[monomial_weight(a)] = counts.get(monomial_weight(a), 0) + 1
    seen = 0
    for d in sorted(counts):
        comp = filtration_basis(n, k, d)
        seen += counts[d]
        assert len(comp.monomials) == seen
        assert len(comp.graded) == counts[d]


def test_graded_piece_matches_omega_census():
    for n, k in [(4, 2), (5, 2), (6, 3), (7, 2)]:
        for d in range(1, n + 1):
            piece = graded_piece(n, d, k)
            expect = 0
            for omega in enumerate_omega(d, n):
                size = 1
                for w in omega:
                    size *= _binom(k, w)
                expect += size
            assert len(piece) == expect
            for a, (omega, masks) in piece.items():
                assert sum(omega) == d
                assert sum(w * 2**i for i, w in enumerate(omega)) == n
                assert all(m.bit_count() == w for m, w in zip(masks, omega))


def _binom(n, r):
    import math

    return math.comb(n, r) if 0 <= r <= n else 0


def test_induced_sq_small_case():
    # degree 3, weight 2, two variables: Sq^1 sends xy to x^2 y + x y^2
    m = induced_sq_on_gr(1, 3, 2, 2)
    targets = filtration_basis(3, 2, 2).graded
    sources = filtration_basis(2, 2, 2).graded
    assert sources == ((1, 1),)
    col = [m.entry(i, 0) for i in range(m.nrows)]
    assert sum(col) == 2
    assert col[targets.index((2, 1))] == 1
    assert col[targets.index((1, 2))] == 1


def test_hit_quotient_rank_one():
    # single variable: x^n survives exactly when n is one less than a 2-power
    for n in range(1, 17):
        expect = 1 if (n + 1) & n == 0 else 0
        assert hit_quotient(n, 1).dim == expect


def test_hit_generators_agree():
    for n in range(1, 9):
        for k in (1, 2, 3):
            assert hit_quotient(n, k).dim == hit_quotient(n, k, generators="all").dim


def test_level_dims_sum_to_quotient():
    for n in range(1, 9):
        for k in (1, 2, 3):
            dims = q_level_dims(n, k)
            assert sum(dims.values()) == hit_quotient(n, k).dim
            assert all(v >= 0 for v in dims.values())


def test_subquotient_accumulates():
    n, k = 7, 3
    dims = q_level_dims(n, k)
    running = 0
    for d in range(1, n + 1):
        running += dims.get(d, 0)
        upto, at = q_subquotient(n, d, k)
        assert upto == running
        assert at == dims.get(d, 0)


def test_qa_space_small():
    pres = qa_space(3, 2, 2)
    assert len(pres.ambient_basis) == 4
    assert pres.dim == 3
    assert len(pres.coset_reps) == 3


def test_qa_dim_matches_character_dims():
    for n in range(1, 9):
        for d in range(1, n + 1):
            chi = qa_character(n, d)
            for k in (1, 2, 3):
                assert qa_dim(n, d, k) == chi.dim_at(k), (n, d, k)


def test_qa_character_blocks_match_space():
    # block count at an exact weight vector equals the rank drop there
    assert qa_character_coeff(3, 2, (2,)) == 1
    assert qa_character_coeff(3, 2, (1, 1)) == 1
    assert qa_character(3, 2).coeffs == {(2,): 1, (1, 1): 1}


def test_kernel_dim_known_anomaly():
    # the (7, 3) comparison kernel grows as C(k, 2)
    for k in range(1, 4):
        assert kernel_dim(7, 3, k) == k * (k - 1) // 2


def test_kernel_dim_zero_cases():
    for (n, d) in [(5, 4), (6, 4), (7, 5), (8, 6)]:
        for k in range(1, 4):
            assert kernel_dim(n, d, k) == 0


def test_qa_characters_n8_sample():
    # weight layers filter the degree: empty above n or when no sequences fit
    assert qa_character(8, 8).coeffs == {(1,) * 8: 1}
    assert qa_character(1, 1).coeffs == {(1,): 1}
    # the (4, 3) layer is a single simple with character m_21 + 2 m_111
    assert qa_character(4, 3).coeffs == {(2, 1): 1, (1, 1, 1): 2}
