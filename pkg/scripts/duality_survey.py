"""How often each direction of the MIR/MCR hitting-set duality holds on random bases.

Prints the smallest counterexample found for each direction.
"""

import argparse
import random
from collections import Counter

from occlogic.duality import verify_duality
from occlogic.relations import relation_consistent
from occlogic.sampling import SampleConfig, random_base


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bases", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = Counter()
    smallest = {}
    for _ in range(args.bases):
        base = random_base(rng, SampleConfig())
        r = verify_duality(base)
        size = len(base.occurrences)
        for key, bad in (("MCRs missing from H-maximal side", r.mcr_only),
                         ("H-maximal relations that are not MCRs", r.hmax_only),
                         ("MIRs missing from H-minimal side", r.mir_only),
                         ("H-minimal relations that are not MIRs", r.hmin_only)):
            if bad:
                tally[key] += 1
                if key not in smallest or size < smallest[key][0]:
                    smallest[key] = (size, base, bad[0])
        assert all(relation_consistent(base, x) for x in r.hmax_only)
        assert not any(relation_consistent(base, x) for x in r.hmin_only)

    print(f"{args.bases} bases, seed {args.seed}")
    for key in ("MCRs missing from H-maximal side", "H-maximal relations that are not MCRs",
                "MIRs missing from H-minimal side", "H-minimal relations that are not MIRs"):
        print(f"  {key}: {tally[key]}")
        if key in smallest:
            _, base, rel = smallest[key]
            print(f"    smallest: {base.text()}  relation {rel.describe(base)}")


if __name__ == "__main__":
    main()
