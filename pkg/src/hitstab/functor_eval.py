"""Polynomial functor toolkit over F_2: divided, exterior and symmetric
powers, their structure maps, Weyl modules, and simple characters.

Basis elements are explicit: exponent tuples for S^d and Gamma^d, 0/1
exponent tuples for Lambda^d, index sequences for tensor powers.  Formal
characters are expressed in the monomial symmetric basis m_mu.

Simple characters come from the composite Gamma^lam -> Lambda^lam' ->
S^lam (divided power comultiplied into the diagram rows, columns wedged,
then multiplied back along rows).  The image of the first map is the Weyl
module; the image of the whole composite is the simple module L_lam.
Both maps have matrix entries counting diagram fillings mod 2, which is
what the block engine below enumerates.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import product

from .combinat import (
    Partition,
    check_partition,
    conjugate,
    enumerate_partitions,
    p_adic_decompose,
)
from .gf2 import BitMatrix, EchelonBasis


class CompositeZero(Exception):
    """Weyl composite vanished despite having enough variables."""


# ---------------------------------------------------------------------------
# bases


@lru_cache(maxsize=None)
def s_basis(d: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples of the degree-d monomials in k variables,
    first coordinate largest first."""
    if d < 0 or k < 0:
        raise ValueError("d and k must be >= 0")
    if k == 0:
        return ((),) if d == 0 else ()
    out = []

    def rec(pos: int, left: int, prefix: list[int]) -> None:
        if pos == k - 1:
            prefix.append(left)
            out.append(tuple(prefix))
            prefix.pop()
            return
        for v in range(left, -1, -1):
            prefix.append(v)
            rec(pos + 1, left - v, prefix)
            prefix.pop()

    rec(0, d, [])
    return tuple(out)


@lru_cache(maxsize=None)
def lambda_basis(d: int, k: int) -> tuple[tuple[int, ...], ...]:
    """0/1 exponent tuples with d ones: basis of the d-th exterior power."""
    if d < 0 or k < 0:
        raise ValueError("d and k must be >= 0")
    if d > k:
        return ()
    if k == 0:
        return ((),)
    out = []

    def rec(pos: int, left: int, prefix: list[int]) -> None:
        if k - pos < left:
            return
        if pos == k:
            out.append(tuple(prefix))
            return
        for v in (1, 0) if left else (0,):
            prefix.append(v)
            rec(pos + 1, left - v, prefix)
            prefix.pop()

    rec(0, d, [])
    return tuple(out)


def gamma_basis(d: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Divided power basis; indexed exactly like s_basis."""
    return s_basis(d, k)


@lru_cache(maxsize=None)
def t_basis(d: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Index sequences for the d-fold tensor power of F_2^k."""
    if d < 0 or k < 0:
        raise ValueError("d and k must be >= 0")
    return tuple(product(range(k), repeat=d))


def lambda_omega_basis(omega: tuple[int, ...], k: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Basis of Lambda^{omega_0} (x) Lambda^{omega_1} (x) ... in k variables."""
    factors = [lambda_basis(w, k) for w in omega]
    return tuple(product(*factors))


# ---------------------------------------------------------------------------
# structure maps


def _submasks(x: int):
    s = x
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & x


def _mask(exponents: tuple[int, ...]) -> int:
    m = 0
    for j, e in enumerate(exponents):
        if e:
            m |= 1 << j
    return m


def structure_map(kind: str, family: str, bidegree: tuple[int, int], k: int) -> BitMatrix:
    """Multiplication or comultiplication in bidegree (i, j).

    multiply:    family^i (x) family^j -> family^{i+j}
    comultiply:  family^{i+j} -> family^i (x) family^j

    Rows are indexed by the codomain basis, columns by the domain basis;
    tensor bases are indexed by (left index, right index) in row-major
    order.  Entries are the F_2 structure constants: symmetric powers
    multiply freely and comultiply with binomial parities, divided powers
    do the opposite, exterior powers multiply disjoint supports and
    comultiply over support splits.
    """
    if family not in ("S", "Lambda", "Gamma"):
        raise ValueError(f"unknown family {family!r}")
    if kind not in ("multiply", "comultiply"):
        raise ValueError(f"unknown kind {kind!r}")
    i, j = bidegree
    if i < 0 or j < 0:
        raise ValueError("bidegree must be nonnegative")
    single_basis = lambda_basis if family == "Lambda" else s_basis
    left, right, total = single_basis(i, k), single_basis(j, k), single_basis(i + j, k)
    total_index = {a: idx for idx, a in enumerate(total)}
    pair_index = {
        (a, b): ia * len(right) + ib
        for ia, a in enumerate(left)
        for ib, b in enumerate(right)
    }

    def pairs_with_coeff(c: tuple[int, ...]):
        """Splittings of c into (a, b) with odd structure constant."""
        if family == "S":
            # binomial parity: per-variable submasks
            choices = [list(_submasks(e)) for e in c]
        elif family == "Gamma":
            choices = [list(range(e + 1)) for e in c]
        else:
            choices = [[0, 1] if e else [0] for e in c]
        for a in product(*choices):
            if sum(a) == i:
                b = tuple(x - y for x, y in zip(c, a))
                yield a, b

    if kind == "comultiply":
        rows = [0] * len(pair_index)
        for cidx, c in enumerate(total):
            for a, b in pairs_with_coeff(c):
                rows[pair_index[(a, b)]] |= 1 << cidx
        return BitMatrix(tuple(rows), len(total))

    rows = [0] * len(total)
    for (a, b), pidx in pair_index.items():
        if family == "Lambda" and any(x and y for x, y in zip(a, b)):
            continue
        if family == "Gamma":
            # gamma_a gamma_b = prod C(a+b, a) gamma_{a+b}; odd iff no carries
            if any(x & y for x, y in zip(a, b)):
                continue
        c = tuple(x + y for x, y in zip(a, b))
        rows[total_index[c]] |= 1 << pidx
    return BitMatrix(tuple(rows), len(pair_index))


# ---------------------------------------------------------------------------
# tableau counts


def _strip_range(lam: Partition) -> list[tuple[int, int]]:
    padded = lam + (0,)
    return [(padded[r + 1], padded[r]) for r in range(len(lam))]


@lru_cache(maxsize=None)
def _strip_predecessors(lam: Partition, size: int) -> tuple[Partition, ...]:
    """Subshapes nu with lam/nu a horizontal strip of the given size."""
    bounds = _strip_range(lam)
    out = []

    def rec(r: int, left: int, prefix: list[int]) -> None:
        if r == len(bounds):
            if left == 0:
                out.append(tuple(x for x in prefix if x > 0))
            return
        lo, hi = bounds[r]
        for v in range(hi, lo - 1, -1):
            if lam[r] - v > left:
                break
            prefix.append(v)
            rec(r + 1, left - (lam[r] - v), prefix)
            prefix.pop()

    rec(0, size, [])
    return tuple(out)


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    return _kostka_rec(lam, mu)


@lru_cache(maxsize=None)
def _kostka_rec(lam: Partition, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    return sum(_kostka_rec(nu, mu[:-1]) for nu in _strip_predecessors(lam, mu[-1]))


@lru_cache(maxsize=None)
def weyl_dim(lam: Partition, k: int) -> int:
    """Dimension of the Weyl module: semistandard tableaux with entries <= k."""
    lam = check_partition(lam)
    if not lam:
        return 1
    if k <= 0:
        return 0
    total = 0
    bounds = _strip_range(lam)
    for choice in product(*[range(lo, hi + 1) for lo, hi in bounds]):
        nu = tuple(x for x in choice if x > 0)
        total += weyl_dim(nu, k - 1)
    return total


# ---------------------------------------------------------------------------
# characters


def _arrangements(mu: Partition, k: int) -> int:
    """Number of distinct k-variable monomials with exponent multiset mu."""
    if len(mu) > k:
        return 0
    counts: dict[int, int] = {}
    for a in mu:
        counts[a] = counts.get(a, 0) + 1
    denom = math.prod(math.factorial(c) for c in counts.values())
    denom *= math.factorial(k - len(mu))
    return math.factorial(k) // denom


class Character:
    """Symmetric function with nonnegative integer coefficients on m_mu."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: dict[Partition, int]):
        self.degree = degree
        clean = {}
        for mu, c in coeffs.items():
            mu = check_partition(mu)
            if sum(mu) != degree:
                raise ValueError(f"{mu} is not a partition of {degree}")
            if c < 0:
                raise ValueError(f"negative coefficient at {mu}")
            if c:
                clean[mu] = int(c)
        self.coeffs = clean

    def coeff(self, mu: Partition) -> int:
        return self.coeffs.get(check_partition(mu), 0)

    def support(self) -> list[Partition]:
        return sorted(self.coeffs, reverse=True)

    def dim_at(self, k: int) -> int:
        return sum(c * _arrangements(mu, k) for mu, c in self.coeffs.items())

    def expand_at(self, k: int, twist: int = 1) -> dict[tuple[int, ...], int]:
        """Monomial expansion in k variables, exponents scaled by twist."""
        out: dict[tuple[int, ...], int] = {}
        for mu, c in self.coeffs.items():
            if len(mu) > k:
                continue
            padded = mu + (0,) * (k - len(mu))
            for arrangement in set(_permutations_of(padded)):
                key = tuple(twist * e for e in arrangement)
                out[key] = out.get(key, 0) + c
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Character)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        terms = " + ".join(
            (f"{c}*" if c != 1 else "") + f"m{mu}" for mu, c in sorted(self.coeffs.items(), reverse=True)
        )
        return f"Character({self.degree}: {terms or '0'})"


def _permutations_of(t: tuple[int, ...]):
    from itertools import permutations

    return permutations(t)


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
    return out


# ---------------------------------------------------------------------------
# filling engine


def _row_content_options(length: int, remaining: list[int]) -> list[tuple[int, ...]]:
    """Exponent vectors <= remaining with total = length, descending lex."""
    k = len(remaining)
    out: list[tuple[int, ...]] = []

    def rec(pos: int, left: int, prefix: list[int]) -> None:
        if pos == k:
            if left == 0:
                out.append(tuple(prefix))
            return
        for v in range(min(left, remaining[pos]), -1, -1):
            prefix.append(v)
            rec(pos + 1, left - v, prefix)
            prefix.pop()

    rec(0, length, [])
    return out


def _iter_reps(lam: Partition, mu: Partition):
    """Row-content tuples, one per orbit of permutations of equal-length rows.

    Canonical form: within a run of equal row lengths the content vectors
    weakly decrease lexicographically.
    """
    k = len(mu)
    nrows = len(lam)
    remaining = list(mu)
    rows: list[tuple[int, ...]] = [()] * nrows

    def rec(r: int):
        if r == nrows:
            yield tuple(rows)
            return
        prev = rows[r - 1] if r > 0 and lam[r] == lam[r - 1] else None
        for c in _row_content_options(lam[r], remaining):
            if prev is not None and c > prev:
                continue
            rows[r] = c
            for m in range(k):
                remaining[m] -= c[m]
            yield from rec(r + 1)
            for m in range(k):
                remaining[m] += c[m]

    yield from rec(0)


def _block_row_bits(lam: Partition, rows_content: tuple[tuple[int, ...], ...], col_index: dict) -> int:
    """Parity row of the fillings matrix for one row-content tuple.

    Enumerates fillings of the diagram whose r-th row has content
    rows_content[r] and whose columns have distinct entries; toggles the
    parity of each resulting tuple of column masks.  Column tuples index
    bits lazily through col_index.
    """
    ncols = lam[0] if lam else 0
    k = len(rows_content[0]) if rows_content else 0
    colmasks = [0] * ncols
    parity: dict[tuple[int, ...], int] = {}

    def fill_row(r: int) -> None:
        if r == len(lam):
            key = tuple(colmasks)
            parity[key] = parity.get(key, 0) ^ 1
            return
        counts = list(rows_content[r])
        width = lam[r]

        def place(pos: int) -> None:
            if pos == width:
                fill_row(r + 1)
                return
            cm = colmasks[pos]
            for v in range(k):
                if counts[v] and not (cm >> v) & 1:
                    counts[v] -= 1
                    colmasks[pos] = cm | (1 << v)
                    place(pos + 1)
                    counts[v] += 1
            colmasks[pos] = cm

        place(0)

    fill_row(0)
    bits = 0
    for key, odd in parity.items():
        if odd:
            idx = col_index.setdefault(key, len(col_index))
            bits |= 1 << idx
    return bits


@lru_cache(maxsize=None)
def simple_coeff(lam: Partition, mu: Partition) -> int:
    """Coefficient of m_mu in the character of the simple module L_lam.

    Computed as the rank of the content-mu block of the Weyl composite.
    The block matrix N has one row per orbit representative (rows of the
    full matrix repeat along orbits, and the orbit inclusion matrix has
    full column rank, so collapsing preserves the Gram rank).  With W an
    echelon row basis of N, rank(N N^T) = rank(W W^T) because N = E W for
    some E of full column rank.  The rank of N itself is the Weyl weight
    space dimension, checked against the Kostka number every time.
    """
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    if not lam:
        return 1
    full = kostka(lam, mu)
    if full == 0:
        return 0
    col_index: dict = {}
    ech = EchelonBasis()
    for rep in _iter_reps(lam, mu):
        ech.add(_block_row_bits(lam, rep, col_index))
    if ech.rank != full:
        raise RuntimeError(
            f"weight block rank {ech.rank} != tableau count {full} at lam={lam}, mu={mu}"
        )
    basis = ech.rows()
    gram = EchelonBasis()
    for wi in basis:
        row = 0
        for j, wj in enumerate(basis):
            if (wi & wj).bit_count() & 1:
                row |= 1 << j
        gram.add(row)
    return gram.rank


@lru_cache(maxsize=None)
def simple_character(lam: Partition, k: int | None = None) -> Character:
    """Character of L_lam; k caps the number of variables (default |lam|)."""
    lam = check_partition(lam)
    d = sum(lam)
    kk = d if k is None else k
    coeffs = {}
    for mu in enumerate_partitions(d, max_part=lam[0] if lam else None, max_length=kk):
        c = simple_coeff(lam, mu)
        if c:
            coeffs[mu] = c
    return Character(d, coeffs)


def steinberg_product_check(
    lam: Partition, k: int | None = None, chi: "Character | None" = None
) -> bool:
    """Verify the character factors through the 2-adic layers of lam.

    chi(L_lam)(x) must equal prod_i chi(L_{lam[i]})(x^(2^i)) where lam[i]
    are the 2-restricted layers; compared as polynomials in k variables.
    Pass chi to test a candidate character instead of the computed one.
    """
    lam = check_partition(lam)
    d = sum(lam)
    if k is None:
        k = min(d, 6) if d else 1
    lhs = (simple_character(lam) if chi is None else chi).expand_at(k)
    rhs: dict[tuple[int, ...], int] = {(0,) * k: 1}
    for i, layer in enumerate(p_adic_decompose(lam)):
        rhs = _poly_mul(rhs, simple_character(layer).expand_at(k, twist=2**i))
    return lhs == rhs


# ---------------------------------------------------------------------------
# Weyl composite as an explicit matrix


def _gamma_tuple_basis(lam: Partition, k: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    return tuple(product(*[s_basis(r, k) for r in lam]))


def _lambda_tuple_index(lam: Partition, k: int) -> dict[tuple[int, ...], int]:
    cols = conjugate(lam)
    factors = [tuple(_mask(e) for e in lambda_basis(c, k)) for c in cols]
    return {masks: idx for idx, masks in enumerate(product(*factors))}


def weyl_half(lam: Partition, k: int) -> BitMatrix:
    """Matrix of Gamma^lam -> Lambda^lam' in k variables.

    Rows are indexed by tuples of column masks (product order over the
    exterior factors), columns by tuples of row exponent vectors.
    """
    lam = check_partition(lam)
    if k < 0:
        raise ValueError("k must be >= 0")
    domain = _gamma_tuple_basis(lam, k)
    codomain_index = _lambda_tuple_index(lam, k)
    rows = [0] * len(codomain_index)
    for aidx, rows_content in enumerate(domain):
        col_index: dict = {}
        bits = _block_row_bits(lam, rows_content, col_index)
        for key, pos in col_index.items():
            if (bits >> pos) & 1:
                rows[codomain_index[key]] |= 1 << aidx
    return BitMatrix(tuple(rows), len(domain))


def weyl_composite(lam: Partition, k: int) -> BitMatrix:
    """Matrix of the full composite Gamma^lam -> Lambda^lam' -> S^lam.

    Rows index the S^lam basis, columns the Gamma^lam basis (both are the
    row exponent tuples).  Raises CompositeZero if the composite vanishes
    even though k >= l(lam), which the highest weight vector rules out.
    """
    lam = check_partition(lam)
    half = weyl_half(lam, k)
    comp = half.transpose().compose(half)
    if sum(lam) and k >= len(lam) and all(r == 0 for r in comp.rows):
        raise CompositeZero(f"composite vanished for lam={lam}, k={k}")
    return comp
