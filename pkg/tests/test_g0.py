"""Decomposition, transport, and report-level checks."""

import itertools
import json
import math
import warnings

import pytest
from hypothesis import given, strategies as st

from hitstab.combinat import enumerate_partitions, p_adic_compose, stability_modulus
from hitstab.functor_eval import Character, simple_character
from hitstab.steenrod import qa_dim
from hitstab.g0 import (
    NegativeMultiplicityError,
    concat_class,
    conjecture_report,
    decompose_character,
    g0_diagram_check,
    iso_criterion,
    periodicity_check,
    qa_factors,
    reproduce_table_n8,
    steinberg_reduce,
)

# Factor multiplicities of every nonzero graded subquotient with n <= 8.
# Independently frozen; the suite must reproduce every cell exactly and
# produce nothing at any other bidegree.
TABLE_N8 = {
    (1, 1): {(1,): 1},
    (2, 2): {(1, 1): 1},
    (3, 2): {(2,): 1, (1, 1): 1},
    (3, 3): {(1, 1, 1): 1},
    (4, 3): {(2, 1): 1},
    (4, 4): {(1, 1, 1, 1): 1},
    (5, 4): {(2, 1, 1): 1, (1, 1, 1, 1): 1},
    (5, 5): {(1, 1, 1, 1, 1): 1},
    (6, 4): {(2, 2): 1, (2, 1, 1): 1},
    (6, 5): {(2, 1, 1, 1): 1},
    (6, 6): {(1, 1, 1, 1, 1, 1): 1},
    (7, 3): {(3,): 1, (1, 1, 1): 1},
    (7, 4): {(1, 1, 1, 1): 1},
    (7, 5): {(2, 2, 1): 1, (1, 1, 1, 1, 1): 1},
    (7, 6): {(2, 1, 1, 1, 1): 1, (1, 1, 1, 1, 1, 1): 1},
    (7, 7): {(1, 1, 1, 1, 1, 1, 1): 1},
    (8, 4): {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 1},
    (8, 5): {(2, 1, 1, 1): 1},
    (8, 6): {(2, 2, 1, 1): 1, (2, 1, 1, 1, 1): 1, (1, 1, 1, 1, 1, 1): 1},
    (8, 7): {(2, 1, 1, 1, 1, 1): 1},
    (8, 8): {(1, 1, 1, 1, 1, 1, 1, 1): 1},
}

SMALL = [lam for d in range(7) for lam in enumerate_partitions(d)]


def test_steinberg_reduce_examples():
    assert steinberg_reduce((1,)) == ((1,),)
    assert steinberg_reduce((2,)) == ((), (1,))
    assert steinberg_reduce((4,)) == ((), (), (1,))
    assert steinberg_reduce((3, 1)) == ((1, 1), (1,))
    assert steinberg_reduce((2, 2)) == ((), (1, 1))
    assert steinberg_reduce((5, 2, 1)) == ((3, 2, 1), (1,))


@given(st.sampled_from(SMALL))
def test_steinberg_reduce_roundtrip(lam):
    assert p_adic_compose(steinberg_reduce(lam)) == lam


def test_concat_class():
    factors = {(2, 1): 2, (1, 1): 1}
    assert concat_class(factors, 2) == {(2, 1, 1, 1): 2, (1, 1, 1, 1): 1}
    assert concat_class(factors, 0) == factors


def test_decompose_single_simples():
    for lam in [(2,), (1, 1), (2, 1), (2, 2), (3, 1)]:
        assert decompose_character(simple_character(lam)) == {lam: 1}


@given(st.data())
def test_decompose_mixture_roundtrip(data):
    d = data.draw(st.integers(min_value=1, max_value=5))
    parts = list(enumerate_partitions(d))
    mults = data.draw(
        st.lists(st.integers(0, 2), min_size=len(parts), max_size=len(parts))
    )
    coeffs = {}
    for lam, m in zip(parts, mults):
        if not m:
            continue
        for mu, c in simple_character(lam).coeffs.items():
            coeffs[mu] = coeffs.get(mu, 0) + m * c
    chi = Character(d, coeffs)
    expected = {lam: m for lam, m in zip(parts, mults) if m}
    assert decompose_character(chi) == expected


def test_decompose_negative_raises():
    with pytest.raises(NegativeMultiplicityError):
        decompose_character(Character(3, {(2, 1): 1}))


def test_table_n8_exact():
    assert reproduce_table_n8() == TABLE_N8


def test_qa_factors_zero_cell():
    assert qa_factors(6, 3) == {}
    assert qa_factors(8, 3) == {}


def test_periodicity_verified():
    report = periodicity_check(5, 4, 8)
    assert report.status == "VERIFIED"
    assert report.modulus == 2
    assert report.rows
    for _lam, src, dst in report.rows:
        assert src == dst


def test_periodicity_not_applicable():
    report = periodicity_check(7, 5, 7)  # shift 2 not divisible by 4
    assert report.status == "NOT_APPLICABLE"
    assert report.modulus == 4
    assert report.rows == ()
    assert periodicity_check(5, 2, 7).status == "NOT_APPLICABLE"  # unstable


def test_periodicity_congruent_shift():
    report = periodicity_check(7, 5, 9)
    assert report.status == "VERIFIED"
    transported = {lam: src for lam, src, _dst in report.rows if src}
    assert transported == {(2, 2, 1, 1, 1, 1, 1): 1, (1,) * 9: 1}


def test_periodicity_identity_shift():
    assert periodicity_check(6, 4, 4).status == "VERIFIED"


def test_g0_diagram_check_main_route():
    assert g0_diagram_check((3, 1), 4, 2, 8) is True
    assert g0_diagram_check((2, 1, 1), 4, 2, 8) is True
    assert g0_diagram_check((2, 1, 1), 4, 1, 8) is True


def test_g0_diagram_check_boundary_warns():
    with pytest.warns(RuntimeWarning):
        assert g0_diagram_check((2, 2), 4, 2, 8) is True


def test_g0_diagram_check_rejects():
    with pytest.raises(ValueError):
        g0_diagram_check((3, 1), 5, 2, 9)  # not a partition of 5
    with pytest.raises(ValueError):
        g0_diagram_check((4,), 4, 2, 8)  # too few parts
    with pytest.raises(ValueError):
        g0_diagram_check((3, 1), 4, 2, 6)  # shift 2 not divisible by 4


def test_g0_diagram_check_sweep():
    # every stable congruent shift of a small factor label transports
    for d in range(1, 7):
        for lam in enumerate_partitions(d):
            for t in range(max(0, d - len(lam)), d // 2 + 1):
                step = stability_modulus(t)
                for e in (d + step, d + 2 * step):
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore", RuntimeWarning)
                        assert g0_diagram_check(lam, d, t, e) is True


def test_iso_criterion_guaranteed():
    res = iso_criterion(6, 4)
    assert res.status == "GUARANTEED"
    assert res.witnesses == ()
    assert res.pairs == ((5, 5),)
    assert iso_criterion(8, 6).status == "GUARANTEED"


def test_iso_criterion_unknown_witness():
    res = iso_criterion(7, 3)
    assert res.status == "UNKNOWN"
    assert res.witnesses == ((6, 4, (2, 2)),)


def test_iso_criterion_single_column_witness():
    # (8, 2) sees the bidegree (7, 3) whose factor (3) is not 2-restricted
    res = iso_criterion(8, 2)
    assert res.status == "UNKNOWN"
    assert (7, 3, (3,)) in res.witnesses
    assert (6, 4, (2, 2)) in res.witnesses


def test_iso_criterion_large_boundary_witness():
    # co-weight 6 sits just outside the guaranteed zone; the obstruction
    # candidate lands one degree down with a long one-column tail
    res = iso_criterion(19, 13)
    assert res.status == "UNKNOWN"
    assert res.witnesses == ((18, 14, (3,) + (1,) * 11),)


def test_conjecture_identity_shift():
    report = conjecture_report(9, 4, 4)
    assert report.status == "PROVED_EQUAL"
    assert report.kernels == ()


def test_conjecture_gate():
    with pytest.raises(ValueError):
        conjecture_report(7, 5, 7)  # shift not divisible by the modulus
    with pytest.raises(ValueError):
        conjecture_report(8, 4, 8)  # not stable
    with pytest.raises(ValueError):
        conjecture_report(6, 4, 8)  # stable but not strictly


def test_conjecture_proved_equal():
    report = conjecture_report(7, 5, 9, max_rank=3)
    assert report.status == "PROVED_EQUAL"
    assert all(s == "GUARANTEED" for _i, s in report.source_certificates)
    assert all(s == "GUARANTEED" for _j, s in report.target_certificates)
    assert report.kernels
    assert all(dim == 0 for *_rest, dim in report.kernels)
    assert all(s == "VERIFIED" for _i, _j, s in report.transports)


def _elementary_product_character(omega):
    # character of the exterior-power tensor product, expanded at sum(omega) vars
    d = sum(omega)
    k = d
    poly = {(0,) * k: 1}
    for w in omega:
        if w == 0:
            continue
        masks = [
            tuple(1 if i in chosen else 0 for i in range(k))
            for chosen in itertools.combinations(range(k), w)
        ]
        grown = {}
        for expo, c in poly.items():
            for mask in masks:
                key = tuple(a + b for a, b in zip(expo, mask))
                grown[key] = grown.get(key, 0) + c
        poly = grown
    coeffs = {}
    for mu in enumerate_partitions(d, max_length=k):
        c = poly.get(mu + (0,) * (k - len(mu)), 0)
        if c:
            coeffs[mu] = c
    return Character(d, coeffs)


def test_exterior_products_decompose():
    seen = set()
    for omega in itertools.product(range(7), repeat=3):
        if not 1 <= sum(omega) <= 6:
            continue
        while omega and omega[-1] == 0:
            omega = omega[:-1]
        if omega in seen:
            continue
        seen.add(omega)
        k = sum(omega)
        dec = decompose_character(_elementary_product_character(omega))
        total = sum(m * simple_character(lam).dim_at(k) for lam, m in dec.items())
        assert total == math.prod(math.comb(k, w) for w in omega)


def test_factor_length_bound():
    for n in range(1, 9):
        for d in range(1, n + 1):
            for lam in qa_factors(n, d):
                assert len(lam) >= 2 * d - n


def test_concat_class_additive_injective():
    a = {(2, 1): 1, (1, 1, 1): 2}
    b = {(2, 1): 3, (3,): 1}
    total = {(2, 1): 4, (1, 1, 1): 2, (3,): 1}
    merged = concat_class(total, 3)
    pieces = concat_class(a, 3), concat_class(b, 3)
    recombined = dict(pieces[0])
    for lam, m in pieces[1].items():
        recombined[lam] = recombined.get(lam, 0) + m
    assert merged == recombined
    assert len(merged) == len(total)  # distinct labels stay distinct


def test_sum_rule_matches_graded_dimension():
    for n in range(1, 8):
        for d in range(1, n + 1):
            factors = qa_factors(n, d)
            for k in range(1, 4):
                total = sum(
                    m * simple_character(lam).dim_at(k) for lam, m in factors.items()
                )
                assert total == qa_dim(n, d, k)


def test_reports_serialize():
    blobs = [
        periodicity_check(5, 4, 8).to_dict(),
        iso_criterion(7, 3).to_dict(),
        conjecture_report(9, 4, 4).to_dict(),
    ]
    text = json.dumps(blobs)
    assert "VERIFIED" in text
    assert "2,2" in text
