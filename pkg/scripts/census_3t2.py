"""The four Borel ideals with Hilbert polynomial 3t+2 in P^3: Hilbert functions,
≺≺ relations, x0,x1-saturations, and a dimension check of in/gin under a random
change of coordinates."""

import argparse

import numpy as np

from dgin import grassmann as gr
from dgin import monomials as mn
from dgin.census import enumerate_borel
from dgin.extensors import dd_compare
from dgin.stable import hilbert_function, truncate, x0x1_saturation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--extra", type=int, default=3, help="degrees checked beyond m = r")
    args = ap.parse_args()

    order = mn.TermOrder("degrevlex")
    ideals = enumerate_borel("3t+2", 3)
    r = 5
    slices = [truncate(J, r) for J in ideals]
    for i, J in enumerate(ideals):
        hf = [hilbert_function(J, t) for t in range(r + 1)]
        print(f"{i}: {J}  H={hf}  sat01={x0x1_saturation(J)}")
    print("\n≺≺ (degrevlex, degree 5):")
    for i in range(len(slices)):
        print("  ", " ".join(f"{dd_compare(order, slices[i], s).value:>12}" for s in slices))

    print("\nrandom coordinates: dim (I_gV)_t vs ideals of in and gin")
    rng = np.random.default_rng(args.seed)
    for i, J in enumerate(ideals):
        g = gr.random_gl(rng, 4)
        V = gr.apply_gl(g, gr.Subspace.from_monomials(slices[i].terms, 4))
        top = r + args.extra
        dims = gr.ideal_hilbert_function(V, top)
        ini = gr.initial_extensor(V, order)
        gin = gr.generic_initial_extensor(V, order, seed=args.seed)
        print(f"{i}: I_gV {dims}  (in) {gr.monomial_ideal_dims(ini.terms, 4, r, top)}  "
              f"(gin) {gr.monomial_ideal_dims(gin.terms, 4, r, top)}  "
              f"gin slice == J_5: {gin.as_slice() == slices[i]}")


if __name__ == "__main__":
    main()
