"""Generate a random hypergraph at gene-set scale and time the summary reports.

    python scripts/synthetic_scale.py --out /tmp/scale.pairs
    python scripts/synthetic_scale.py --out /tmp/scale.pairs --run

Each vertex/edge incidence is present independently with probability
``--density``; the default shape (18,000 x 20,000 at 1e-3) sits just above
the gene-set data the reports were designed for.
"""

import argparse
import resource
import subprocess
import sys
import time

import numpy as np


def generate(n, m, density, seed):
    rng = np.random.default_rng(seed)
    nnz = rng.binomial(n * m, density)
    cells = np.unique(rng.integers(0, n * m, size=nnz))
    edges, vertices = np.divmod(cells, n)
    return edges, vertices


def write_pairs(path, n, m, edges, vertices):
    with open(path, "w") as fh:
        fh.write("@edges " + " ".join(f"e{i}" for i in range(m)) + "\n")
        fh.write("@vertices " + " ".join(f"v{j}" for j in range(n)) + "\n")
        fh.writelines(f"e{e} v{v}\n" for e, v in zip(edges.tolist(), vertices.tolist()))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=18_000)
    ap.add_argument("--m", type=int, default=20_000)
    ap.add_argument("--density", type=float, default=1e-3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", required=True)
    ap.add_argument("--run", action="store_true", help="time summary, sprofile and toplexhist")
    args = ap.parse_args()

    edges, vertices = generate(args.n, args.m, args.density, args.seed)
    write_pairs(args.out, args.n, args.m, edges, vertices)
    print(f"wrote {len(edges)} incidences to {args.out}")
    if not args.run:
        return
    for cmd in (["summary"], ["sprofile", "--smax", "5"], ["toplexhist"]):
        t0 = time.perf_counter()
        subprocess.run([sys.executable, "-m", "hypernet.cli", *cmd, args.out, "--json"],
                       check=True, stdout=subprocess.DEVNULL)
        print(f"{' '.join(cmd):<20} {time.perf_counter() - t0:7.1f} s")
    peak = resource.getrusage(resource.RUSAGE_CHILDREN).ru_maxrss / 1024
    print(f"peak child RSS {peak:.0f} MiB")


if __name__ == "__main__":
    main()
