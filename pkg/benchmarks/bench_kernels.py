"""Compare the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from ncnn import _pykernels
from ncnn.groups import elements
from ncnn.partitions import NC, enumerate_classical, ground_order, _rank_edges
from ncnn.roots import GroupFamily

try:
    from ncnn import _kernels
except ImportError:
    _kernels = None


def workloads():
    perms = [w.images for w in elements(GroupFamily("B", 5))]
    g = GroupFamily("C", 6)
    nc_edges = [_rank_edges(p, ground_order(g, NC)) for p in enumerate_classical(g, NC)]
    rng = random.Random(0)
    random_edges = []
    for _ in range(2000):
        pts = rng.sample(range(40), 20)
        random_edges.append([tuple(sorted(pts[i:i + 2])) for i in range(0, 20, 2)])
    return {
        "reflection_length (B5, 3840 elements)": ("reflection_length", perms),
        "has_crossing (C6 noncrossing edge sets)": ("has_crossing", nc_edges + random_edges),
        "has_nesting (C6 noncrossing edge sets)": ("has_nesting", nc_edges + random_edges),
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = {"python": _pykernels}
    if _kernels is not None:
        backends["cython"] = _kernels
    else:
        print("compiled extension not built; timing the fallback only")
    for label, (fname, inputs) in workloads().items():
        times = {}
        for name, mod in backends.items():
            fn = getattr(mod, fname)
            times[name] = min(timeit.repeat(lambda: [fn(x) for x in inputs],
                                            number=1, repeat=args.repeat))
        line = "  ".join(f"{k}={v * 1000:8.2f} ms" for k, v in times.items())
        if "cython" in times:
            line += f"  speedup={times['python'] / times['cython']:.1f}x"
        print(f"{label:45s} {line}")


if __name__ == "__main__":
    main()
