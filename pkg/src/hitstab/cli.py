"""Command line front end: tables, reports, and dimension queries.

Every output is a pure function of the command and arguments; the disk
cache only changes speed.  Exit codes: 0 success, 1 verification
failure (a FAILED or REFUTED report, or a broken internal check),
2 usage errors and resource refusals.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from .cache import cache_get_or_compute, set_cache_dir
from .combinat import enumerate_omega, format_partition, parse_partition
from .g0 import conjecture_report, decompose_character, periodicity_check
from .steenrod import hit_quotient, q_level_dims, qa_character

_AMBIENT_LIMIT = 10**6
_FORMATS = ("csv", "json", "md")


@dataclass
class Config:
    cache_dir: str | None = None
    max_rank: int = 6
    max_degree: int = 12
    output_format: str = "md"

    def __post_init__(self):
        if self.max_rank < 1:
            raise ValueError("max_rank must be >= 1")
        if self.max_degree < 1:
            raise ValueError("max_degree must be >= 1")
        if self.output_format not in _FORMATS:
            raise ValueError(f"output_format must be one of {_FORMATS}")


class _Refusal(Exception):
    """Raised when a request exceeds the resource guardrails."""


def _ambient(n: int, k: int) -> int:
    return math.comb(n + k - 1, k - 1) if k >= 1 else 0


def _check_ambient(n: int, k: int, force: bool) -> None:
    size = _ambient(n, k)
    if size > _AMBIENT_LIMIT and not force:
        raise _Refusal(
            f"ambient basis has {size} monomials (limit {_AMBIENT_LIMIT}); "
            "rerun with --force to proceed"
        )


def _check_degree(d: int, config: Config, force: bool, what: str) -> None:
    if d > config.max_degree and not force:
        raise _Refusal(
            f"{what} {d} exceeds max_degree {config.max_degree} "
            f"(roughly 2^{d} = {2 ** d} intermediate monomials); "
            "rerun with --force to proceed"
        )


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _cell(factors: dict) -> str:
    parts = []
    for lam in sorted(factors, reverse=True):
        label = f"L({format_partition(lam)})"
        mult = factors[lam]
        parts.append(label if mult == 1 else f"{mult}*{label}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_hit_dims(args, config: Config) -> tuple[str, int]:
    n, k = args.n, args.k
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    _check_ambient(n, k, args.force)
    total = hit_quotient(n, k).dim
    levels = q_level_dims(n, k)
    if config.output_format == "json":
        payload = {
            "n": n,
            "k": k,
            "dim": total,
            "levels": {str(d): levels[d] for d in sorted(levels)},
        }
        return _json(payload), 0
    if config.output_format == "csv":
        rows = [[n, k, d, levels[d]] for d in sorted(levels)]
        return _csv(["n", "k", "d", "dim"], rows), 0
    lines = [f"dim Q^{n}(F_2^{k}) = {total}"]
    for d in sorted(levels):
        lines.append(f"  d={d}: {levels[d]}")
    return "\n".join(lines), 0


def _table_up_to(limit: int) -> dict[tuple[int, int], dict]:
    table = {}
    for n in range(1, limit + 1):
        for d in range(1, n + 1):
            factors = decompose_character(qa_character(n, d), simple=cache_get_or_compute)
            if factors:
                table[(n, d)] = factors
    return table


def _cmd_qa_table(args, config: Config) -> tuple[str, int]:
    limit = args.n
    if limit < 1:
        raise ValueError("need N >= 1")
    _check_degree(limit, config, args.force, "table size")
    table = _table_up_to(limit)
    if config.output_format == "json":
        payload = [
            {
                "n": n,
                "d": d,
                "factors": [
                    {"partition": format_partition(lam), "multiplicity": m}
                    for lam, m in sorted(table[(n, d)].items(), reverse=True)
                ],
            }
            for (n, d) in sorted(table)
        ]
        return _json(payload), 0
    if config.output_format == "csv":
        rows = [
            [n, d, format_partition(lam), m]
            for (n, d) in sorted(table)
            for lam, m in sorted(table[(n, d)].items(), reverse=True)
        ]
        return _csv(["n", "d", "partition", "multiplicity"], rows), 0
    header = ["d\\n"] + [str(n) for n in range(1, limit + 1)]
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join(" --- " for _ in header) + "|",
    ]
    for d in range(limit, 0, -1):
        cells = [_cell(table.get((n, d), {})) for n in range(1, limit + 1)]
        lines.append("| " + " | ".join([str(d)] + cells) + " |")
    return "\n".join(lines), 0


def _cmd_factors(args, config: Config) -> tuple[str, int]:
    n, d = args.n, args.d
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    _check_degree(d, config, args.force, "weight")
    factors = decompose_character(qa_character(n, d), simple=cache_get_or_compute)
    if config.output_format == "json":
        payload = {
            "n": n,
            "d": d,
            "factors": [
                {"partition": format_partition(lam), "multiplicity": m}
                for lam, m in sorted(factors.items(), reverse=True)
            ],
        }
        return _json(payload), 0
    if config.output_format == "csv":
        rows = [
            [format_partition(lam), m] for lam, m in sorted(factors.items(), reverse=True)
        ]
        return _csv(["partition", "multiplicity"], rows), 0
    if not factors:
        return f"Q^{n}_{d} = 0", 0
    lines = [f"Q^{n}_{d} composition factors:"]
    for lam, m in sorted(factors.items(), reverse=True):
        lines.append(f"  L({format_partition(lam)}): {m}")
    return "\n".join(lines), 0


def _cmd_periodicity(args, config: Config) -> tuple[str, int]:
    n, d, e = args.n, args.d, args.e
    if not 1 <= d <= n or e < d:
        raise ValueError("need 1 <= d <= n and e >= d")
    _check_degree(e, config, args.force, "target weight")
    report = periodicity_check(n, d, e)
    code = 1 if report.status == "FAILED" else 0
    if config.output_format == "csv":
        rows = [
            [format_partition(lam), src, dst] for lam, src, dst in report.rows
        ]
        return _csv(["partition", "transported", "target"], rows), code
    if config.output_format == "md":
        lines = [
            f"periodicity (n={n}, d={d}, e={e}): {report.status} "
            f"(modulus {report.modulus})"
        ]
        if report.rows:
            lines.append("| partition | transported | target |")
            lines.append("| --- | --- | --- |")
            for lam, src, dst in report.rows:
                lines.append(f"| {format_partition(lam)} | {src} | {dst} |")
        return "\n".join(lines), code
    return _json(report.to_dict()), code


def _cmd_conjecture(args, config: Config) -> tuple[str, int]:
    n, d, e = args.n, args.d, args.e
    if not 1 <= d <= n or e < d:
        raise ValueError("need 1 <= d <= n and e >= d")
    _check_ambient(n + e - d, config.max_rank, args.force)
    report = conjecture_report(n, d, e, max_rank=config.max_rank)
    code = 1 if report.status == "REFUTED" else 0
    if config.output_format == "csv":
        rows = [list(entry) for entry in report.kernels]
        return _csv(["side", "level", "rank", "kernel"], rows), code
    if config.output_format == "md":
        lines = [f"conjecture (n={n}, d={d}, e={e}): {report.status}"]
        for label, certs in (
            ("source", report.source_certificates),
            ("target", report.target_certificates),
        ):
            for level, status in certs:
                lines.append(f"  {label} level {level}: {status}")
        if report.kernels:
            nonzero = sum(1 for *_r, dim in report.kernels if dim)
            lines.append(f"  kernel evidence: {len(report.kernels)} checks, {nonzero} nonzero")
        return "\n".join(lines), code
    return _json(report.to_dict()), code


def _cmd_simple(args, config: Config) -> tuple[str, int]:
    lam = parse_partition(args.partition)
    k = args.k
    if k < 0:
        raise ValueError("need k >= 0")
    _check_degree(sum(lam), config, args.force, "degree")
    chi = cache_get_or_compute(lam)
    dim = chi.dim_at(k)
    name = format_partition(lam)
    if config.output_format == "json":
        payload = {
            "partition": name,
            "k": k,
            "dim": dim,
            "character": [
                {"partition": format_partition(mu), "coefficient": c}
                for mu, c in sorted(chi.coeffs.items(), reverse=True)
            ],
        }
        return _json(payload), 0
    if config.output_format == "csv":
        rows = [[format_partition(mu), c] for mu, c in sorted(chi.coeffs.items(), reverse=True)]
        return _csv(["mu", "coefficient"], rows), 0
    terms = [
        (f"m({format_partition(mu)})" if c == 1 else f"{c}*m({format_partition(mu)})")
        for mu, c in sorted(chi.coeffs.items(), reverse=True)
    ]
    lines = [
        f"dim L_({name})(F_2^{k}) = {dim}",
        f"chi(L_({name})) = " + (" + ".join(terms) if terms else "0"),
    ]
    return "\n".join(lines), 0


def _cmd_omega(args, config: Config) -> tuple[str, int]:
    d, n = args.d, args.n
    if d < 0 or n < 0:
        raise ValueError("need d >= 0 and n >= 0")
    seqs = enumerate_omega(d, n)
    if config.output_format == "json":
        return _json([list(w) for w in seqs]), 0
    if config.output_format == "csv":
        return _csv(["omega"], [[",".join(map(str, w))] for w in seqs]), 0
    return " ".join("[" + ",".join(map(str, w)) + "]" for w in seqs), 0


_HANDLERS = {
    "hit-dims": _cmd_hit_dims,
    "qa-table": _cmd_qa_table,
    "factors": _cmd_factors,
    "periodicity": _cmd_periodicity,
    "conjecture": _cmd_conjecture,
    "simple": _cmd_simple,
    "omega": _cmd_omega,
}

# reports default to JSON; tables and scalars to Markdown/text
_DEFAULT_FORMAT = {"periodicity": "json", "conjecture": "json"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=None, help="character cache directory")
    common.add_argument("--max-rank", type=int, default=None, help="kernel evidence rank cap")
    common.add_argument("--format", choices=_FORMATS, default=None, help="output format")
    common.add_argument("--force", action="store_true", help="override resource guardrails")
    parser = argparse.ArgumentParser(
        prog="hitstab",
        description="Hit-problem subquotient tables, characters, and stability reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("hit-dims", parents=[common], help="dim Q^n(F_2^k) with its weight levels")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p = sub.add_parser("qa-table", parents=[common], help="factor table for all bidegrees up to N")
    p.add_argument("n", type=int, metavar="N")
    p = sub.add_parser("factors", parents=[common], help="composition factors at one bidegree")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p = sub.add_parser("periodicity", parents=[common], help="transport check between bidegrees")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("e", type=int)
    p = sub.add_parser("conjecture", parents=[common], help="stable comparison evidence report")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("e", type=int)
    p = sub.add_parser("simple", parents=[common], help="dimension and character of one simple")
    p.add_argument("partition", help="comma-separated parts, e.g. 2,1")
    p.add_argument("k", type=int)
    p = sub.add_parser("omega", parents=[common], help="weight sequences of degree n and weight d")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = Config(
            cache_dir=args.cache_dir,
            max_rank=args.max_rank if args.max_rank is not None else 6,
            output_format=args.format or _DEFAULT_FORMAT.get(args.command, "md"),
        )
        set_cache_dir(config.cache_dir)
        text, code = _HANDLERS[args.command](args, config)
    except (_Refusal, ValueError) as exc:
        print(f"hitstab: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"hitstab: internal check failed: {exc}", file=sys.stderr)
        return 1
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
