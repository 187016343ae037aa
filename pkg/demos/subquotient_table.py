"""Composition factor table of the weight subquotients.

Prints every nonzero bidegree (n, d) with n up to the chosen bound and
the simple factors of the graded piece, then shows how the factors
recover graded dimensions: evaluating each simple at rank k and summing
with multiplicities reproduces the subquotient dimension for every k.
"""

import argparse

from hitstab import format_partition, qa_dim, qa_factors, simple_character


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--check-k", type=int, default=3)
    args = parser.parse_args()

    for n in range(1, args.max_n + 1):
        for d in range(1, n + 1):
            factors = qa_factors(n, d)
            if not factors:
                continue
            cell = " + ".join(
                (f"{m}*" if m > 1 else "") + f"L({format_partition(lam)})"
                for lam, m in sorted(factors.items(), reverse=True)
            )
            print(f"Q^{n}_{d} = {cell}")
            for k in range(1, args.check_k + 1):
                from_factors = sum(
                    m * simple_character(lam).dim_at(k) for lam, m in factors.items()
                )
                direct = qa_dim(n, d, k)
                marker = "ok" if from_factors == direct else "MISMATCH"
                print(f"    k={k}: {from_factors} vs direct {direct}  {marker}")


if __name__ == "__main__":
    main()
