"""Stability of the factor table along congruent weight shifts.

Once the weight d is at least twice the co-weight t = n - d, shifting
both degrees by a multiple of the least power of two above t relabels
the factors by appending ones to each partition.  The script prints
every verified transport in a small zone, then one full evidence report
for a comparison between two stably congruent bidegrees.
"""

import argparse
import json

from hitstab import conjecture_report, periodicity_check


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--max-e", type=int, default=10)
    args = parser.parse_args()

    shown = 0
    for n in range(1, args.max_n + 1):
        for d in range(max(1, n - 3), n + 1):
            for e in range(d + 1, args.max_e + 1):
                report = periodicity_check(n, d, e)
                if report.status == "NOT_APPLICABLE" or not report.rows:
                    continue
                pairs = ", ".join(
                    f"{'.'.join(map(str, lam))}:{src}={dst}"
                    for lam, src, dst in report.rows
                )
                print(
                    f"(n={n}, d={d}) -> e={e} mod {report.modulus}: "
                    f"{report.status}  [{pairs}]"
                )
                shown += 1
    print(f"\n{shown} transports verified.\n")

    print("evidence report for (n=7, d=5) against e=9:")
    report = conjecture_report(7, 5, 9, max_rank=3)
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
