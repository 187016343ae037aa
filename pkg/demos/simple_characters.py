"""Simple characters in one degree: triangularity, layers, vanishing.

Each simple character is the dominance-leading monomial symmetric
function plus strictly smaller terms.  Splitting the highest weight
into its 2-adic layers factors the character as a product of twisted
restricted pieces, and the dimension at one variable fewer than the
number of rows is always zero.
"""

import argparse

from hitstab import (
    enumerate_partitions,
    format_partition,
    p_adic_decompose,
    simple_character,
    steinberg_product_check,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("degree", type=int, nargs="?", default=6)
    parser.add_argument("--max-k", type=int, default=6)
    args = parser.parse_args()

    for lam in enumerate_partitions(args.degree):
        chi = simple_character(lam)
        name = format_partition(lam)
        layers = p_adic_decompose(lam)
        layer_text = " * ".join(
            f"L({format_partition(layer)})^[{1 << i}]" for i, layer in enumerate(layers)
        )
        terms = " + ".join(
            (f"{c}*" if c > 1 else "") + f"m({format_partition(mu)})"
            for mu, c in sorted(chi.coeffs.items(), reverse=True)
        )
        print(f"L({name}) = {terms}")
        print(f"  layers: {layer_text}")
        dims = [chi.dim_at(k) for k in range(1, args.max_k + 1)]
        print(f"  dims at k=1..{args.max_k}: {dims}  (zero through k={len(lam) - 1})")
        for k in range(1, args.max_k + 1):
            if not steinberg_product_check(lam, k):
                raise SystemExit(f"layer product failed at {lam}, k={k}")
        print("  layer product verified")
        print()


if __name__ == "__main__":
    main()
