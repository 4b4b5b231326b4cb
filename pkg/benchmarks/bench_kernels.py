"""Compare the compiled and pure-Python subset-scan backends.

    python benchmarks/bench_kernels.py [--repeat 3] [--seed 1]

The lattice cases are the neighbourhood masks the oracle builds for its
exhaustive tiers.  Pruning is very effective there, so they mostly measure
call overhead.  The tie cases use disjoint masks of equal weight: every
subset has the same boundary, nothing is pruned and every leaf is visited,
which exposes the raw inner-loop speed.
"""

import argparse
import random
import time

from vertexiso.kernels import available_backends, scan_subsets
from vertexiso.lattice import DomainSignature
from vertexiso.oracle import _box_points, _check_box, _neighbourhood_masks


def lattice_case(k, d, box, n):
    sig = DomainSignature(k, d)
    pts = _box_points(sig, _check_box(sig, box))
    return f"{sig} box {box[0]} n={n}", _neighbourhood_masks(sig, pts), n


def random_case(rng, count, bits, density, n):
    masks = [sum(1 << b for b in range(bits) if rng.random() < density) for _ in range(count)]
    return f"random {count} masks x {bits} bits n={n}", masks, n


def tie_case(count, weight, n):
    masks = [((1 << weight) - 1) << (weight * i) for i in range(count)]
    return f"tied {count} masks x {weight} bits n={n}", masks, n


def best_time(masks, n, backend, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = scan_subsets(masks, n, store_limit=64, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    cases = [
        lattice_case(2, 0, [(-3, 3)] * 2, 6),
        lattice_case(3, 0, [(-2, 2)] * 3, 4),
        lattice_case(0, 2, [(0, 5)] * 2, 6),
        random_case(rng, 40, 200, 0.3, 4),
        tie_case(40, 3, 4),
        tie_case(30, 5, 5),
        tie_case(64, 2, 4),
    ]
    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; timing the Python fallback only")
    header = f"{'case':44s}" + "".join(f"{b:>12s}" for b in backends)
    print(header + ("     speedup" if len(backends) == 2 else ""))
    for label, masks, n in cases:
        times, results = [], []
        for b in backends:
            t, r = best_time(masks, n, b, args.repeat)
            times.append(t)
            results.append(r)
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"backends disagree on {label}")
        line = f"{label:44s}" + "".join(f"{t:11.4f}s" for t in times)
        if len(times) == 2:
            line += f"{times[1] / times[0]:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
