"""Sample random peaks over a Hecke system and tile them to completion.

For each trial the script draws a random word, two random reduction paths
out of it, and asks the tiler to close the peak using the curated cell
family.  It reports how many cells of each provenance tag were adjoined
and the largest tiling seen.  Termination of every trial is the empirical
face of the decreasingness of the cell family.

Usage:
    python3 scripts/tile_random_peaks.py --rank 3 --trials 2000
"""

import argparse
import collections
import random
import time

from srw.diagrams import complete_peak
from srw.hecke import hecke_provider, hecke_system
from srw.words import Path, find_redexes


def random_path(rng: random.Random, w, sys, max_steps: int) -> Path:
    steps = []
    for _ in range(rng.randint(1, max_steps)):
        redexes = find_redexes(w, sys)
        if not redexes:
            break
        step = rng.choice(redexes)
        steps.append(step)
        w = step.target
    return Path(steps[0].source, tuple(steps)) if steps else None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank", type=int, default=3)
    ap.add_argument("--variant", default="rfull",
                    choices=["rprime", "rdoubleprime", "rfull"])
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--max-len", type=int, default=8, help="word length cap")
    ap.add_argument("--max-steps", type=int, default=3, help="steps per side")
    ap.add_argument("--fuel", type=int, default=10000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    sys = hecke_system(args.rank, args.variant)
    provider = hecke_provider(sys)
    rng = random.Random(args.seed)
    tags = collections.Counter()
    families = collections.Counter()
    biggest = 0
    done = 0
    t0 = time.monotonic()
    while done < args.trials:
        w = tuple(rng.randint(1, args.rank)
                  for _ in range(rng.randint(1, args.max_len)))
        top = random_path(rng, w, sys, args.max_steps)
        left = random_path(rng, w, sys, args.max_steps)
        if top is None or left is None:
            continue
        t = complete_peak(sys, provider, top, left, fuel=args.fuel)
        for cell in t.cells:
            tags[cell.tag] += 1
            families[cell.origin] += 1
        biggest = max(biggest, len(t.cells))
        done += 1
    dt = time.monotonic() - t0

    print(f"{done} peaks tiled in {dt:.2f}s over rank {args.rank} "
          f"({args.variant}), all within fuel {args.fuel}")
    print(f"largest tiling: {biggest} cells")
    print("cells by tag:")
    for tag, k in tags.most_common():
        print(f"  {tag:11s} {k}")
    print("top cell origins:")
    for origin, k in families.most_common(10):
        print(f"  {origin:28s} {k}")


if __name__ == "__main__":
    main()
