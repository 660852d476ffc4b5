"""Report whether ASF_lam o ASF_mu equals ASF_max(lam, mu) on small hypergraphs.

Absorption is not claimed anywhere for these filters, so this script only
counts agreements and prints the first few disagreements; it never fails.
"""
from __future__ import annotations

import argparse

from hgmorph import asf
from hgmorph.instances import canonical, random_hypergraphs
from hgmorph.laws import serialize_input
from hgmorph.oracle import enumerate_subhypergraphs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-lambda", type=int, default=4)
    ap.add_argument("--random", type=int, default=20, help="number of seeded random instances")
    ap.add_argument("--show", type=int, default=3)
    args = ap.parse_args()

    instances = dict(canonical())
    instances.update({f"R{k:02d}": h for k, h in enumerate(random_hypergraphs(args.random))})
    lams = range(args.max_lambda + 1)
    for name, h in instances.items():
        subs = list(enumerate_subhypergraphs(h))
        total = agree = 0
        shown = []
        for x in subs:
            outs = {lam: asf(x, lam) for lam in lams}
            for lam in lams:
                for mu in lams:
                    total += 1
                    lhs = asf(outs[mu], lam)
                    if lhs == outs[max(lam, mu)]:
                        agree += 1
                    elif len(shown) < args.show:
                        shown.append(f"  lam={lam} mu={mu} {serialize_input((x,))}")
        print(f"{name}: {agree}/{total} pairs absorb")
        for line in shown:
            print(line)


if __name__ == "__main__":
    main()
