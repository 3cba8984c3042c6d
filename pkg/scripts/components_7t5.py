"""Maximal Borel slices and component bounds for the Hilbert polynomial 7t-5
in P^3 under several term orders."""

import argparse
import json
import time

from dgin import monomials as mn
from dgin.components import component_lower_bound, max_hilbert_function


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--poly", default="7t-5")
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--orders", nargs="+",
                    default=["degrevlex", "weight:1,2,9,12", "deglex"])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    summary = []
    for name in args.orders:
        start = time.perf_counter()
        rep = component_lower_bound(args.poly, args.n, mn.parse_order(name))
        elapsed = time.perf_counter() - start
        summary.append({
            "order": name,
            "count": rep.count,
            "r": rep.r,
            "maximal": [str(rep.ideals[i]) for i in rep.maximal],
            "bound_basic": rep.bound_basic,
            "bound_refined": rep.bound_refined,
            "seconds": round(elapsed, 2),
        })
    mono = max_hilbert_function(args.poly, args.n)
    if args.json:
        print(json.dumps({"orders": summary, "monotonicity_violations": len(mono.violations)},
                         indent=2))
        return
    for row in summary:
        print(f"{row['order']}: {row['count']} Borel ideals, r={row['r']}, "
              f"bound {row['bound_basic']} / refined {row['bound_refined']} ({row['seconds']}s)")
        for g in row["maximal"]:
            print("   ", g)
    print(f"degrevlex Hilbert-function monotonicity: {len(mono.log)} comparable pairs, "
          f"{len(mono.violations)} violations")


if __name__ == "__main__":
    main()
