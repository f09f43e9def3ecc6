"""Write graph6 censuses of connected graphs on 7 and 8 vertices into src/mdnum/data.

Each connected graph on n vertices has a non-cut vertex, so every class is
reached by attaching a new vertex of positive degree to a connected graph on
n - 1 vertices. Classes are deduplicated by canonical code.
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from mdnum.canon import enumerate_nonisomorphic, extend_by_vertex
from mdnum.graph6 import encode_graph6

DATA = Path(__file__).resolve().parents[1] / "src" / "mdnum" / "data"
EXPECTED = {7: 853, 8: 11117}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--out", type=Path, default=DATA)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    reps = list(enumerate_nonisomorphic(6, lambda g: g.is_connected()))
    for n in range(7, args.max_n + 1):
        t = time.perf_counter()
        reps = [g for g in extend_by_vertex(reps, min_new_degree=1) if g.is_connected()]
        lines = sorted(encode_graph6(g) for g in reps)
        if n in EXPECTED and len(lines) != EXPECTED[n]:
            raise SystemExit(f"n={n}: got {len(lines)} graphs, expected {EXPECTED[n]}")
        (args.out / f"connected{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(lines)} connected graphs in {time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()
