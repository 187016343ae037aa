"""Composition factors of the graded hit subquotients and their stability.

Characters decompose greedily against simple characters along descending
lex order, which refines dominance, so the multiplicity at each step is
already final.  Transport between bidegrees appends ones to every factor;
the reports below check where that transport is exact, certify kernel
vanishing levelwise, and package the evidence.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

from .combinat import (
    Partition,
    check_partition,
    concat_ones,
    dominance_leq,
    enumerate_omega,
    enumerate_partitions,
    format_partition,
    is_p_restricted,
    p_adic_decompose,
    stability,
)
from .functor_eval import Character, simple_character, simple_coeff
from .steenrod import kernel_dim, qa_character, qa_character_coeff


class NegativeMultiplicityError(Exception):
    """A character failed to decompose with nonnegative multiplicities."""


def decompose_character(chi: Character, simple=simple_character) -> dict[Partition, int]:
    """Multiplicities of the simple characters summing to chi.

    Walks partitions of the degree in descending lex order (compatible
    with dominance, so each residual coefficient is the multiplicity).
    simple may be swapped for a cache-backed lookup; values never change.
    """
    residual = dict(chi.coeffs)
    out: dict[Partition, int] = {}
    for lam in enumerate_partitions(chi.degree):
        mult = residual.pop(lam, 0)
        if mult < 0:
            raise NegativeMultiplicityError(f"multiplicity {mult} at {lam}")
        if mult == 0:
            continue
        out[lam] = mult
        for mu, c in simple(lam).coeffs.items():
            if mu == lam:
                continue
            residual[mu] = residual.get(mu, 0) - mult * c
    leftover = {mu: c for mu, c in residual.items() if c}
    if leftover:
        raise NegativeMultiplicityError(f"undecomposable remainder {leftover}")
    return out


def steinberg_reduce(lam: Partition) -> tuple[Partition, ...]:
    """2-adic layers of a simple as a tuple; () layers pad interior gaps."""
    return tuple(p_adic_decompose(check_partition(lam)))


def concat_class(factors: dict[Partition, int], m: int) -> dict[Partition, int]:
    """Append m ones to every factor label."""
    return {concat_ones(lam, m): mult for lam, mult in factors.items()}


@lru_cache(maxsize=None)
def _qa_factors_cached(n: int, d: int) -> tuple[tuple[Partition, int], ...]:
    factors = decompose_character(qa_character(n, d))
    return tuple(sorted(factors.items(), reverse=True))


def qa_factors(n: int, d: int) -> dict[Partition, int]:
    """Simple multiplicities of the graded quotient at bidegree (n, d)."""
    return dict(_qa_factors_cached(n, d))


def reproduce_table_n8() -> dict[tuple[int, int], dict[Partition, int]]:
    """Factor multiplicities for every bidegree with 1 <= d <= n <= 8."""
    table = {}
    for n in range(1, 9):
        for d in range(1, n + 1):
            factors = qa_factors(n, d)
            if factors:
                table[(n, d)] = factors
    return table


# ---------------------------------------------------------------------------
# periodicity


@dataclass(frozen=True)
class StabilityReport:
    n: int
    d: int
    e: int
    status: str
    modulus: int
    rows: tuple[tuple[Partition, int, int], ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "e": self.e,
            "status": self.status,
            "modulus": self.modulus,
            "rows": [
                {
                    "partition": format_partition(lam),
                    "transported": src,
                    "target": dst,
                }
                for lam, src, dst in self.rows
            ],
        }


def periodicity_check(n: int, d: int, e: int) -> StabilityReport:
    """Compare transported factors of (n, d) with the factors of (n', e).

    n' = n + e - d.  Applicable when (d, n - d, e) is stable and the shift
    is divisible by the stability modulus; otherwise NOT_APPLICABLE.
    VERIFIED means exact multiset equality after appending ones.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if e < d:
        raise ValueError(f"need e >= d, got e={e}, d={d}")
    t = n - d
    info = stability(d, t, e)
    if not (info["stable"] and info["congruent"]):
        return StabilityReport(n, d, e, "NOT_APPLICABLE", info["modulus"], ())
    shift = e - d
    transported = concat_class(qa_factors(n, d), shift)
    target = qa_factors(n + shift, e)
    rows = []
    for lam in sorted(set(transported) | set(target), reverse=True):
        rows.append((lam, transported.get(lam, 0), target.get(lam, 0)))
    status = "VERIFIED" if transported == target else "FAILED"
    return StabilityReport(n, d, e, status, info["modulus"], tuple(rows))


def g0_diagram_check(lam: Partition, d: int, t: int, e: int) -> bool:
    """Check transport commutes with splitting off the first 2-adic layer.

    Appending e - d ones to lam must decompose as (head layer with ones
    appended, remaining layers unchanged).  Preconditions: lam is a
    partition of d with at least d - t parts and (d, t, e) is stable and
    congruent.  An empty head layer forces lam = (2, ..., 2) at the
    stability boundary; that case is flagged with a warning.
    """
    lam = check_partition(lam)
    if sum(lam) != d:
        raise ValueError(f"{lam} is not a partition of {d}")
    if len(lam) < d - t:
        raise ValueError(f"{lam} has fewer than {d - t} parts")
    info = stability(d, t, e)
    if not (info["stable"] and info["congruent"]) or e < d:
        raise ValueError(f"(d={d}, t={t}, e={e}) is not a stable congruent shift")
    layers = list(p_adic_decompose(lam))
    if not layers or not layers[0]:
        # all parts even: forces the boundary d = 2t and lam = (2^t)
        if lam != (2,) * t:
            raise RuntimeError(f"empty head layer for unexpected {lam}")
        warnings.warn(
            f"head layer of {lam} is empty; transport follows the exceptional twist",
            RuntimeWarning,
            stacklevel=2,
        )
        return True
    shifted = p_adic_decompose(concat_ones(lam, e - d))
    expected = [concat_ones(layers[0], e - d)] + layers[1:]
    return shifted == expected


# ---------------------------------------------------------------------------
# kernel certificates


@dataclass(frozen=True)
class IsoCriterionResult:
    n: int
    d: int
    status: str
    witnesses: tuple[tuple[int, int, Partition], ...]
    pairs: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "status": self.status,
            "witnesses": [
                {"m": m, "e": e, "partition": format_partition(nu)}
                for m, e, nu in self.witnesses
            ],
            "pairs": [list(p) for p in self.pairs],
        }


def _max_levels(e: int, m: int) -> int:
    best = 0
    for omega in enumerate_omega(e, m):
        best = max(best, sum(1 for w in omega if w))
    return best


def _cone_multiplicities(m: int, e: int, max_part: int) -> dict[Partition, int]:
    """Multiplicities of the non-restricted factors at bidegree (m, e).

    Every factor has at most max_part columns, so the triangular system
    restricted to the dominance up-closure of the non-restricted
    candidates inside that world is closed: supports of simple characters
    only reach downward.
    """
    candidates = [
        nu
        for nu in enumerate_partitions(e, max_part=max_part)
        if not is_p_restricted(nu)
    ]
    if not candidates:
        return {}
    cone = [
        sigma
        for sigma in enumerate_partitions(e, max_part=max_part)
        if any(dominance_leq(nu, sigma) for nu in candidates)
    ]
    mults: dict[Partition, int] = {}
    for sigma in cone:  # descending lex refines dominance
        val = qa_character_coeff(m, e, sigma)
        for tau, mt in mults.items():
            if mt and dominance_leq(sigma, tau):
                val -= mt * simple_coeff(tau, sigma)
        if val < 0:
            raise NegativeMultiplicityError(f"multiplicity {val} at {sigma}")
        mults[sigma] = val
    return {nu: mults[nu] for nu in candidates if mults.get(nu)}


@lru_cache(maxsize=None)
def iso_criterion(n: int, d: int) -> IsoCriterionResult:
    """Certify that the graded comparison map at (n, d) is injective.

    The kernel is fed by non-2-restricted factors of the relation levels
    (m, e) with m = n - 2^i and d < e <= m.  Restricted factors at level
    e cannot interact with degree-d constituents because their polynomial
    degree e exceeds d.  GUARANTEED means no relation level carries a
    non-restricted factor; otherwise the witnesses list them and the
    criterion reports UNKNOWN (the kernel may still vanish).
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    pairs = []
    s = 1
    while 2 * s <= n:  # Sq^s is zero below degree s, so sources need n - s >= s
        m = n - s
        for e in range(d + 1, m + 1):
            pairs.append((m, e))
        s *= 2
    witnesses = []
    for m, e in pairs:
        levels = _max_levels(e, m)
        if levels == 0:
            continue
        if levels <= 2:
            if e % 2:
                continue
            nu = (2,) * (e // 2)
            mult = qa_character_coeff(m, e, nu)
            if mult:
                witnesses.append((m, e, nu))
            continue
        for nu, mult in sorted(_cone_multiplicities(m, e, levels).items(), reverse=True):
            if mult:
                witnesses.append((m, e, nu))
    status = "GUARANTEED" if not witnesses else "UNKNOWN"
    return IsoCriterionResult(n, d, status, tuple(witnesses), tuple(pairs))


# ---------------------------------------------------------------------------
# conjecture evidence


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    d: int
    e: int
    status: str
    source_certificates: tuple[tuple[int, str], ...]
    target_certificates: tuple[tuple[int, str], ...]
    kernels: tuple[tuple[str, int, int, int], ...]
    transports: tuple[tuple[int, int, str], ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "e": self.e,
            "status": self.status,
            "source_certificates": [
                {"level": i, "status": s} for i, s in self.source_certificates
            ],
            "target_certificates": [
                {"level": j, "status": s} for j, s in self.target_certificates
            ],
            "kernels": [
                {"side": side, "level": lvl, "rank": k, "kernel": dim}
                for side, lvl, k, dim in self.kernels
            ],
            "transports": [
                {"source_level": i, "target_level": j, "status": s}
                for i, j, s in self.transports
            ],
        }


_TRANSPORT_DEGREE_CAP = 12


def conjecture_report(
    n: int, d: int, e: int, max_rank: int | None = None
) -> ConjectureReport:
    """Evidence that the factors above weight d transport along e - d.

    Requires (d, n - d, e) strictly stable and congruent with e >= d.
    The graded spaces transport by a theorem in that range, so the claim
    about the hit quotients reduces to kernel vanishing at every level
    above d on the source side and above e on the target side.  A level
    counts as proved when its certificate is GUARANTEED, or when the
    kernel is 0 at rank == level (evaluation there detects a degree-level
    functor).  max_rank defaults to d + 1.

    - PROVED_EQUAL: every level of both sides is proved (or e == d,
      where there is nothing to move).
    - REFUTED: some kernel is provably nonzero at a rank <= max_rank.
    - CONSISTENT: levels unproved but every computed kernel is 0.
    - INCONCLUSIVE: no numeric evidence at all.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if max_rank is None:
        max_rank = d + 1
    if max_rank < 1:
        raise ValueError("max_rank must be >= 1")
    if e == d:
        return ConjectureReport(n, d, e, "PROVED_EQUAL", (), (), (), ())
    t = n - d
    info = stability(d, t, e)
    if e < d or not (info["strictly_stable"] and info["congruent"]):
        raise ValueError(f"(d={d}, t={t}, e={e}) is not strictly stable and congruent")
    shift = e - d
    n2 = n + shift
    source = [(i, iso_criterion(n, i).status) for i in range(d + 1, n + 1)]
    target = [(j, iso_criterion(n2, j).status) for j in range(e + 1, n2 + 1)]
    kernels = []
    proved = []
    for side, top, levels in (("source", n, source), ("target", n2, target)):
        for lvl, status in levels:
            zero_at_degree = False
            for k in range(1, max_rank + 1):
                dim = kernel_dim(top, lvl, k)
                if dim and status == "GUARANTEED":
                    raise RuntimeError(
                        f"certificate contradicts kernel at ({top}, {lvl}), rank {k}"
                    )
                if k == lvl and dim == 0:
                    zero_at_degree = True
                kernels.append((side, lvl, k, dim))
            proved.append(status == "GUARANTEED" or zero_at_degree)
    transports = []
    for i, _ in source:
        j = i + shift
        if i <= _TRANSPORT_DEGREE_CAP and j <= _TRANSPORT_DEGREE_CAP:
            report = periodicity_check(n, i, j)
            if report.status == "FAILED":
                raise RuntimeError(f"factor transport broke at levels {i}->{j}")
            transports.append((i, j, report.status))
    if any(dim for *_ignored, dim in kernels):
        status = "REFUTED"
    elif all(proved):
        status = "PROVED_EQUAL"
    elif kernels:
        status = "CONSISTENT"
    else:
        status = "INCONCLUSIVE"
    return ConjectureReport(
        n, d, e, status,
        tuple(source), tuple(target), tuple(kernels), tuple(transports),
    )
