"""Random base/query pairs: how often each relation says yes, and any broken ordering claims."""

import argparse
import random
from collections import Counter

from occlogic.query import CONTAINMENTS, RELATIONS, decide_all, violations
from occlogic.sampling import SampleConfig, random_base, random_query


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    cfg = SampleConfig()
    yes = Counter()
    strict = Counter()
    broken = []
    for _ in range(args.pairs):
        base = random_base(rng, cfg)
        phi = random_query(rng, base, cfg)
        row = decide_all(base, phi)
        yes.update(r for r in RELATIONS if row[r])
        strict.update(f"{a} < {b}" for a, b in CONTAINMENTS if row[b] and not row[a])
        if violations(row):
            broken.append((base.text(), str(phi), violations(row)))

    print(f"{args.pairs} pairs, seed {args.seed}")
    print("yes-rate per relation:")
    for r in RELATIONS:
        print(f"  {r:>9}  {yes[r] / args.pairs:6.1%}")
    print("pairs separating each containment (larger says yes, smaller no):")
    for a, b in CONTAINMENTS:
        print(f"  {a:>4} ⊆ {b:<4}  {strict[f'{a} < {b}']}")
    print(f"violations: {len(broken)}")
    for item in broken[:10]:
        print("  ", item)


if __name__ == "__main__":
    main()
