"""gin of (x2^2, x1*x2 + x0^2) in K[x0,x1,x2] under degrevlex and deglex across seeds."""

import argparse
from collections import Counter

from dgin import grassmann as gr
from dgin import monomials as mn


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--degree", type=int, default=4)
    args = ap.parse_args()
    gens = [gr.parse_polynomial(s, 3) for s in ("x2^2", "x1*x2 + x0^2")]
    for name in ("degrevlex", "deglex"):
        order = mn.parse_order(name)
        seen = Counter(str(gr.gin_ideal(gens, order, seed=s, degree_bound=args.degree))
                       for s in range(args.seeds))
        ini = gr.initial_ideal(gens, order, degree_bound=args.degree)
        print(f"{name}: in = {ini}")
        for ideal, count in seen.items():
            print(f"  gin = {ideal}  ({count}/{args.seeds} seeds)")


if __name__ == "__main__":
    main()
