"""Mod-2 Steenrod squares on polynomials, the digit-weight filtration,
hit problem quotients, and graded subquotient characters.

Monomials are exponent tuples.  The weight of x^a is the total number of
binary digits of the exponents; squares never raise it, so spans of
monomials of weight <= d filter the polynomial algebra compatibly with
the Steenrod action.  Degree-d characters of the graded subquotients are
computed blockwise per digit-weight vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .combinat import Partition, check_partition, enumerate_partitions
from .functor_eval import Character, s_basis
from .gf2 import BitMatrix, EchelonBasis, coset_representatives


def digit_weight(a: int) -> int:
    if a < 0:
        raise ValueError("exponent must be >= 0")
    return a.bit_count()


def weight_vector(exponents: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(digit_weight(a) for a in exponents)


def monomial_weight(exponents: tuple[int, ...]) -> int:
    return sum(weight_vector(exponents))


def square_generators(n: int) -> list[int]:
    """The two-power degrees 2^i < n; these generate the relevant squares."""
    out = []
    s = 1
    while s < n:
        out.append(s)
        s *= 2
    return out


def sq_on_monomial(s: int, a: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """Terms of Sq^s(x^a) mod 2.

    Cartan expansion: sum over per-variable splits t <= a bitwise (the
    binomial C(a_j, t_j) is odd exactly then) with sum(t) = s, each term
    x^(a + t).  Distinct splits give distinct terms, so no cancellation.
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    k = len(a)
    out = []

    def rec(j: int, left: int, prefix: list[int]) -> None:
        if j == k:
            if left == 0:
                out.append(tuple(prefix))
            return
        t = a[j]
        while True:
            if t <= left:
                prefix.append(a[j] + t)
                rec(j + 1, left - t, prefix)
                prefix.pop()
            if t == 0:
                break
            t = (t - 1) & a[j]

    rec(0, s, [])
    return frozenset(out)


# ---------------------------------------------------------------------------
# weight filtration


@dataclass(frozen=True)
class FilteredComponent:
    """Monomial bases of the weight-<= d layer of degree n in k variables."""

    n: int
    k: int
    d: int
    monomials: tuple[tuple[int, ...], ...]
    graded: tuple[tuple[int, ...], ...]


def filtration_basis(n: int, k: int, d: int) -> FilteredComponent:
    low, exact = [], []
    for a in s_basis(n, k):
        w = monomial_weight(a)
        if w <= d:
            low.append(a)
            if w == d:
                exact.append(a)
    return FilteredComponent(n, k, d, tuple(low), tuple(exact))


def graded_piece(n: int, d: int, k: int) -> dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]]:
    """Identify weight-d monomials with wedge basis elements.

    x^a maps to (omega, masks): omega counts variables using binary digit
    i, masks[i] records which variables those are.  This is the bijection
    between the graded piece and the direct sum of Lambda^omega factors.
    """
    out = {}
    for a in filtration_basis(n, k, d).graded:
        levels = max(e.bit_length() for e in a) if a else 0
        omega = []
        masks = []
        for i in range(levels):
            mask = 0
            for j, e in enumerate(a):
                if (e >> i) & 1:
                    mask |= 1 << j
            omega.append(mask.bit_count())
            masks.append(mask)
        while omega and omega[-1] == 0:
            omega.pop()
            masks.pop()
        out[a] = (tuple(omega), tuple(masks))
    return out


def induced_sq_on_gr(s: int, n: int, d: int, k: int) -> BitMatrix:
    """Matrix of Sq^s from the weight-d layer of degree n-s to that of n.

    Rows index weight-d monomials of degree n, columns those of degree
    n-s; entries take the weight-exactly-d part of the square.  Terms of
    weight above d would break the filtration and raise.
    """
    sources = filtration_basis(n - s, k, d).graded
    targets = filtration_basis(n, k, d).graded
    index = {a: i for i, a in enumerate(targets)}
    rows = [0] * len(targets)
    for col, b in enumerate(sources):
        for m in sq_on_monomial(s, b):
            w = monomial_weight(m)
            if w > d:
                raise RuntimeError(f"square raised weight: {b} -> {m}")
            if w == d:
                rows[index[m]] |= 1 << col
    return BitMatrix(tuple(rows), len(sources))


# ---------------------------------------------------------------------------
# hit quotients


@dataclass(frozen=True)
class QuotientPresentation:
    """Ambient monomial basis, relation rows over it, and the quotient."""

    ambient_basis: tuple[tuple[int, ...], ...]
    relations: BitMatrix
    dim: int
    coset_reps: tuple[tuple[int, ...], ...]


def _relation_rows(n: int, k: int, degrees: list[int], index: dict) -> list[int]:
    rows = []
    for s in degrees:
        if n - s < 0:
            continue
        for b in s_basis(n - s, k):
            row = 0
            for m in sq_on_monomial(s, b):
                row |= 1 << index[m]
            if row:
                rows.append(row)
    return rows


def hit_quotient(n: int, k: int, generators: str = "powers") -> QuotientPresentation:
    """Degree-n polynomials in k variables modulo hit elements.

    generators="powers" uses only the two-power squares; "all" uses every
    positive square.  The spans agree since the squares are generated by
    the two-power ones.
    """
    if generators not in ("powers", "all"):
        raise ValueError(f"unknown generators {generators!r}")
    ambient = s_basis(n, k)
    index = {a: i for i, a in enumerate(ambient)}
    degrees = square_generators(n) if generators == "powers" else list(range(1, n))
    rows = _relation_rows(n, k, degrees, index)
    ech = EchelonBasis.from_rows(rows)
    reps = coset_representatives(len(ambient), rows)
    return QuotientPresentation(
        ambient_basis=ambient,
        relations=BitMatrix(tuple(rows), len(ambient)),
        dim=len(ambient) - ech.rank,
        coset_reps=tuple(ambient[r.bit_length() - 1] for r in reps),
    )


@lru_cache(maxsize=None)
def _level_dims(n: int, k: int) -> tuple[tuple[int, int], ...]:
    ambient = s_basis(n, k)
    index = {a: i for i, a in enumerate(ambient)}
    ech = EchelonBasis.from_rows(_relation_rows(n, k, square_generators(n), index))
    by_weight: dict[int, list[int]] = {}
    for i, a in enumerate(ambient):
        by_weight.setdefault(monomial_weight(a), []).append(i)
    dims = []
    for d in sorted(by_weight):
        new = sum(1 for i in by_weight[d] if ech.add(1 << i))
        dims.append((d, new))
    return tuple(dims)


def q_level_dims(n: int, k: int) -> dict[int, int]:
    """Dimensions of the weight-graded layers of the hit quotient.

    One sweep: reduce the hit relations once, then adjoin monomials in
    weight order; the new pivots at weight d count the degree-(n, d)
    layer.  Missing weights mean zero.
    """
    return dict(_level_dims(n, k))


def q_subquotient(n: int, d: int, k: int) -> tuple[int, int]:
    """(dimension up to weight d, dimension of the weight-d layer)."""
    dims = _level_dims(n, k)
    upto = sum(v for w, v in dims if w <= d)
    at = sum(v for w, v in dims if w == d)
    return upto, at


# ---------------------------------------------------------------------------
# graded quotient by induced squares


def qa_space(n: int, d: int, k: int) -> QuotientPresentation:
    """Weight-d layer of degree n modulo the induced two-power squares."""
    ambient = filtration_basis(n, k, d).graded
    index = {a: i for i, a in enumerate(ambient)}
    rows = []
    for s in square_generators(n):
        for b in filtration_basis(n - s, k, d).graded:
            row = 0
            for m in sq_on_monomial(s, b):
                w = monomial_weight(m)
                if w > d:
                    raise RuntimeError(f"square raised weight: {b} -> {m}")
                if w == d:
                    row |= 1 << index[m]
            if row:
                rows.append(row)
    ech = EchelonBasis.from_rows(rows)
    reps = coset_representatives(len(ambient), rows)
    return QuotientPresentation(
        ambient_basis=ambient,
        relations=BitMatrix(tuple(rows), len(ambient)),
        dim=len(ambient) - ech.rank,
        coset_reps=tuple(ambient[r.bit_length() - 1] for r in reps),
    )


def qa_dim(n: int, d: int, k: int) -> int:
    return qa_space(n, d, k).dim


def kernel_dim(n: int, d: int, k: int) -> int:
    """Dimension of the kernel of the graded comparison map at rank k.

    The graded quotient surjects onto the weight-d layer of the hit
    quotient; this is the difference of their dimensions.
    """
    excess = qa_dim(n, d, k) - q_subquotient(n, d, k)[1]
    if excess < 0:
        raise RuntimeError(f"impossible negative kernel at n={n}, d={d}, k={k}")
    return excess


# ---------------------------------------------------------------------------
# blockwise characters


def _monomials_with_weight_vector(total: int, mu: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Exponent tuples of degree total whose j-th digit weight is mu[j]."""
    k = len(mu)
    min_rest = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        min_rest[j] = min_rest[j + 1] + (1 << mu[j]) - 1
    out: list[tuple[int, ...]] = []

    def rec(j: int, left: int, prefix: list[int]) -> None:
        if j == k:
            if left == 0:
                out.append(tuple(prefix))
            return
        cap = left - min_rest[j + 1]
        if cap < (1 << mu[j]) - 1:
            return
        for bits in combinations(range(cap.bit_length()), mu[j]):
            val = sum(1 << b for b in bits)
            if val <= cap:
                prefix.append(val)
                rec(j + 1, left - val, prefix)
                prefix.pop()

    rec(0, total, [])
    return out


@lru_cache(maxsize=None)
def qa_character_coeff(n: int, d: int, mu: Partition) -> int:
    """Coefficient of m_mu in the degree-d character of the graded quotient.

    The induced squares preserve per-variable digit weights (each one can
    only drop, and their sum is fixed), so the relations are block
    diagonal over digit-weight vectors and the coefficient is computed in
    len(mu) variables from the single block at vector mu.
    """
    mu = check_partition(mu)
    if sum(mu) != d:
        raise ValueError(f"{mu} is not a partition of {d}")
    monomials = _monomials_with_weight_vector(n, mu)
    if not monomials:
        return 0
    index = {a: i for i, a in enumerate(monomials)}
    ech = EchelonBasis()
    for s in square_generators(n):
        for b in _monomials_with_weight_vector(n - s, mu):
            row = 0
            for m in sq_on_monomial(s, b):
                wv = weight_vector(m)
                total = sum(wv)
                if total > d:
                    raise RuntimeError(f"square raised weight: {b} -> {m}")
                if total == d:
                    if wv != mu:
                        raise RuntimeError(f"digit weights moved: {b} -> {m}")
                    row |= 1 << index[m]
            if row:
                ech.add(row)
    return len(monomials) - ech.rank


@lru_cache(maxsize=None)
def qa_character(n: int, d: int) -> Character:
    """Degree-d character of the graded quotient at bidegree (n, d)."""
    if d < 0 or n < 0:
        raise ValueError("n and d must be >= 0")
    coeffs = {}
    for mu in enumerate_partitions(d):
        if sum((1 << p) - 1 for p in mu) > n:
            continue
        c = qa_character_coeff(n, d, mu)
        if c:
            coeffs[mu] = c
    return Character(d, coeffs)
