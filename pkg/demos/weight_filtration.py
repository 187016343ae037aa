"""Digit-weight filtration of one hit quotient.

Squares never raise the total number of binary digits across the
exponents, so monomial spans filtered by that weight are stable under
the action and Q^n(F_2^k) breaks into weight layers.  The graded
quotient at each weight surjects onto the layer; the failure of
injectivity is the kernel dimension printed in the last column, which
is zero everywhere in range except bidegree (7, 3).
"""

import argparse

from hitstab import kernel_dim, q_level_dims, q_subquotient, qa_dim


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n", type=int, nargs="?", default=7)
    parser.add_argument("k", type=int, nargs="?", default=3)
    args = parser.parse_args()
    n, k = args.n, args.k

    levels = q_level_dims(n, k)
    total = sum(levels.values())
    print(f"dim Q^{n}(F_2^{k}) = {total}")
    print(f"{'d':>3}  {'layer':>6}  {'graded':>6}  {'kernel':>6}")
    for d in sorted(levels):
        at = q_subquotient(n, d, k)[1]
        graded = qa_dim(n, d, k)
        print(f"{d:>3}  {at:>6}  {graded:>6}  {kernel_dim(n, d, k):>6}")

    print()
    print("kernel growth at the exceptional bidegree (7, 3):")
    for rank in range(1, 7):
        print(f"  k={rank}: kernel {kernel_dim(7, 3, rank)} (binomial C(k,2) = {rank * (rank - 1) // 2})")


if __name__ == "__main__":
    main()
