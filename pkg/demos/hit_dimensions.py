"""Sweep of hit quotient dimensions dim Q^n(F_2^k).

At one variable the quotient is one-dimensional exactly in degrees
2^t - 1 and zero elsewhere, so the first column spikes along that
sequence.  Larger k fill in between; each column is printed with the
spartan generator count next to the full monomial count for scale.
"""

import argparse
import math

from hitstab import hit_quotient


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=16)
    parser.add_argument("--max-k", type=int, default=4)
    args = parser.parse_args()

    ks = range(1, args.max_k + 1)
    header = ["n", "monomials(k=%d)" % args.max_k] + [f"k={k}" for k in ks]
    print("  ".join(f"{h:>14}" for h in header))
    for n in range(1, args.max_n + 1):
        ambient = math.comb(n + args.max_k - 1, args.max_k - 1)
        dims = [hit_quotient(n, k).dim for k in ks]
        cells = [str(n), str(ambient)] + [str(v) for v in dims]
        print("  ".join(f"{c:>14}" for c in cells))

    print()
    print("one-variable spikes (degrees with nonzero quotient up to 63):")
    spikes = [n for n in range(1, 64) if hit_quotient(n, 1).dim]
    print(" ", spikes)


if __name__ == "__main__":
    main()
