"""Compare the compiled and pure-Python flow kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Reports per-call timings of the kernel primitives on a fixed set of graphs
and the wall time of an end-to-end verification sweep with each backend.
"""

import argparse
import random
import sys
import time

from kedgecon import EnumSpec, multigraph, random_k_edge_connected, verify_theorem
from kedgecon import _kernel_py

try:
    from kedgecon import _kernel_ext
except ImportError:
    _kernel_ext = None


def sample_graphs(count, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(4, 10)
        g = random_k_edge_connected(n, rng.randint(1, 4), rng.randrange(1 << 30))
        out.append((g.n, [u for _, u, _ in g.edges], [v for _, _, v in g.edges]))
    return out


def time_primitive(cls, graphs, repeat):
    built = [cls(n, eu, ev) for n, eu, ev in graphs]
    t0 = time.perf_counter()
    for _ in range(repeat):
        for fg in built:
            fg.lambda_matrix()
    t_lam = time.perf_counter() - t0
    t0 = time.perf_counter()
    for _ in range(repeat):
        for fg in built:
            fg.cut_masks(2)
    t_cut = time.perf_counter() - t0
    calls = repeat * len(built)
    return t_lam / calls * 1e6, t_cut / calls * 1e6


def time_sweep(cls, spec):
    saved = multigraph.FlowGraph
    multigraph.FlowGraph = cls
    try:
        t0 = time.perf_counter()
        rep = verify_theorem(spec)
        return time.perf_counter() - t0, rep.ok
    finally:
        multigraph.FlowGraph = saved


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--n-max", type=int, default=5)
    args = ap.parse_args(argv)
    if _kernel_ext is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    graphs = sample_graphs(200)
    spec = EnumSpec(n_max=args.n_max, m_max=9, mult_max=3)
    rows = []
    for name, cls in (("python", _kernel_py.FlowGraph), ("cython", _kernel_ext.FlowGraph)):
        lam_us, cut_us = time_primitive(cls, graphs, args.repeat)
        sweep_s, ok = time_sweep(cls, spec)
        rows.append((name, lam_us, cut_us, sweep_s, ok))
    print(f"{'backend':8} {'lambda_matrix us':>17} {'cut_masks us':>13} {'sweep n<=' + str(args.n_max) + ' s':>14}  ok")
    for name, lam_us, cut_us, sweep_s, ok in rows:
        print(f"{name:8} {lam_us:17.1f} {cut_us:13.1f} {sweep_s:14.2f}  {ok}")
    py, cy = rows
    print(f"speedup: lambda_matrix x{py[1] / cy[1]:.1f}, cut_masks x{py[2] / cy[2]:.1f}, sweep x{py[3] / cy[3]:.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
