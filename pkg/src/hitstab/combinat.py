"""Partition and weight-sequence combinatorics at a prime p (default 2).

Partitions are tuples of weakly decreasing positive ints; () is the empty
partition.  Weight sequences ("omega sequences") are tuples of nonnegative
ints (omega_0, omega_1, ...) without trailing zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

Partition = tuple[int, ...]


def check_partition(lam: Partition) -> Partition:
    lam = tuple(lam)
    for a, b in zip(lam, lam[1:]):
        if a < b:
            raise ValueError(f"{lam} is not weakly decreasing")
    if lam and lam[-1] <= 0:
        raise ValueError(f"{lam} has non-positive parts")
    return lam


def conjugate(lam: Partition) -> Partition:
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a > i) for i in range(lam[0]))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """Dominance order; both arguments must have the same size."""
    mu, lam = check_partition(mu), check_partition(lam)
    if sum(mu) != sum(lam):
        raise ValueError(f"|{mu}| != |{lam}|")
    pm = pl = 0
    for i in range(max(len(mu), len(lam))):
        pm += mu[i] if i < len(mu) else 0
        pl += lam[i] if i < len(lam) else 0
        if pm > pl:
            return False
    return True


def is_p_restricted(lam: Partition, p: int = 2) -> bool:
    """Whether consecutive part differences (and the last part) are < p."""
    lam = check_partition(lam)
    padded = lam + (0,)
    return all(a - b < p for a, b in zip(padded, padded[1:]))


def p_adic_decompose(lam: Partition, p: int = 2) -> list[Partition]:
    """Split lam = sum_i p^i lam[i] with every lam[i] p-restricted.

    Works on the difference vector: writing each difference
    lam_j - lam_{j+1} in base p and taking suffix sums of the i-th digits
    yields lam[i].  Trailing empty layers are trimmed.
    """
    lam = check_partition(lam)
    if not lam:
        return []
    padded = lam + (0,)
    diffs = [a - b for a, b in zip(padded, padded[1:])]
    layers: list[Partition] = []
    while any(diffs):
        digits = [d % p for d in diffs]
        # suffix sums of the digits are the parts of this layer
        parts = []
        acc = 0
        for d in reversed(digits):
            acc += d
            parts.append(acc)
        parts.reverse()
        layers.append(tuple(a for a in parts if a > 0))
        diffs = [d // p for d in diffs]
    while layers and not layers[-1]:
        layers.pop()
    return layers


def p_adic_compose(layers: list[Partition], p: int = 2) -> Partition:
    """Inverse of p_adic_decompose: lam_j = sum_i p^i layers[i]_j."""
    length = max((len(layer) for layer in layers), default=0)
    parts = []
    for j in range(length):
        parts.append(sum(p**i * (layer[j] if j < len(layer) else 0) for i, layer in enumerate(layers)))
    return tuple(a for a in parts if a > 0)


def concat_ones(lam: Partition, m: int) -> Partition:
    """Append m parts equal to 1."""
    lam = check_partition(lam)
    if m < 0:
        raise ValueError("m must be >= 0")
    if lam and lam[-1] < 1:
        raise ValueError(f"{lam} cannot absorb trailing ones")
    return lam + (1,) * m


def enumerate_partitions(
    d: int, max_part: int | None = None, max_length: int | None = None
) -> Iterator[Partition]:
    """All partitions of d, descending lex, with optional part/length caps."""
    if d < 0:
        return
    cap = d if max_part is None else min(max_part, d)
    rows = d if max_length is None else max_length

    def rec(remaining: int, cap: int, rows: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(prefix)
            return
        if rows == 0 or cap == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, rows - 1, prefix)
            prefix.pop()

    yield from rec(d, cap, rows, [])


def enumerate_omega(d: int, n: int, p: int = 2) -> list[tuple[int, ...]]:
    """Weight sequences omega with sum(omega) = d and sum(omega_i p^i) = n.

    Sorted lexicographically.  Trailing zeros are trimmed but internal
    zeros are kept, e.g. (0, 4) for d=4, n=8 at p=2.
    """
    if d < 0 or n < 0:
        raise ValueError("d and n must be >= 0")
    out: list[tuple[int, ...]] = []

    def rec(level: int, power: int, left_d: int, left_n: int, prefix: list[int]) -> None:
        if left_d == 0:
            if left_n == 0:
                seq = list(prefix)
                while seq and seq[-1] == 0:
                    seq.pop()
                out.append(tuple(seq))
            return
        if left_n < left_d * power:
            return
        for w in range(min(left_d, left_n // power) + 1):
            prefix.append(w)
            rec(level + 1, power * p, left_d - w, left_n - w * power, prefix)
            prefix.pop()

    rec(0, 1, d, n, [])
    out.sort()
    return out


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def stability_modulus(t: int, p: int = 2) -> int:
    """Least power of p strictly greater than t; 1 when t = 0."""
    if t < 0:
        raise ValueError("t must be >= 0")
    m = 1
    while m <= t:
        m *= p
    return m


def stability(d: int, t: int, e: int, p: int = 2) -> dict:
    """Stability data for passing from degree-d to degree-e level at gap t.

    ``stable``   : d >= 2t, ``strictly_stable``: d > 2t.
    ``modulus``  : stability_modulus(t, p).
    ``congruent``: e == d modulo that modulus.
    """
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if d < 0 or t < 0 or e < 0:
        raise ValueError("d, t, e must be >= 0")
    modulus = stability_modulus(t, p)
    return {
        "stable": d >= 2 * t,
        "strictly_stable": d > 2 * t,
        "congruent": (e - d) % modulus == 0,
        "modulus": modulus,
    }


@dataclass(frozen=True)
class OmegaShift:
    """Head-shift map on weight sequences from (d, d+t) to (e, e+t)."""

    mapping: dict[tuple[int, ...], tuple[int, ...]]
    injective: bool
    surjective: bool


def stability_bijection(d: int, t: int, e: int, p: int = 2) -> OmegaShift:
    """Shift omega_0 by e - d; records whether that is a bijection.

    Domain Seq_d(d+t), codomain Seq_e(e+t).  Sequences whose head would
    go negative are dropped from the mapping (then it is not total, and
    ``injective`` is reported False).
    """
    shift = e - d
    domain = enumerate_omega(d, d + t, p)
    codomain = set(enumerate_omega(e, e + t, p))
    mapping: dict[tuple[int, ...], tuple[int, ...]] = {}
    for omega in domain:
        head = (omega[0] if omega else 0) + shift
        if head < 0:
            continue
        image = (head,) + omega[1:]
        while image and image[-1] == 0:
            image = image[:-1]
        if image in codomain:
            mapping[omega] = image
    images = set(mapping.values())
    injective = len(mapping) == len(domain) and len(images) == len(mapping)
    surjective = images == codomain
    return OmegaShift(mapping=mapping, injective=injective, surjective=surjective)


def format_partition(lam: Partition) -> str:
    lam = check_partition(lam)
    return ",".join(str(a) for a in lam) if lam else "-"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}") from exc
    return check_partition(parts)
