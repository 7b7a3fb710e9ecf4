"""Time the numba and numpy kernel backends side by side.

    python3 benchmarks/bench_kernels.py [--repeat 20] [--length 22]

The kernel table times each kernel on inputs the search really produces:
the weight-4 incidence of a length-24 code and the span of a 12-row matrix.
The last rows time a full classification up to ``--length`` in a fresh
interpreter per backend (numba compile time is excluded by a warm-up run,
since compiled kernels are cached on disk).
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time
import timeit

import numpy as np

from sdclass.augment import augment, make_node
from sdclass.code import SelfDualCode
from sdclass.kernels import backend_module


def sample_inputs():
    nodes = [make_node(SelfDualCode.i2())]
    for k in range(2, 13):
        nodes = augment(nodes, k)
    code = max((node.code for node in nodes), key=lambda c: c.min_weight)
    inc = code.codewords_up_to_weight(code.spanning_weight).incidence()
    rng = np.random.default_rng(1)
    pos = rng.permutation(code.n).astype(np.int64)
    images = np.stack([rng.permutation(1 << 11) for _ in range(4)]).astype(np.int64)
    return code, inc, pos, images


def kernel_table(repeat: int) -> list[tuple[str, float, float]]:
    code, inc, pos, images = sample_inputs()
    cc = np.zeros(code.n, np.int64)
    wc = np.zeros(inc.shape[0], np.int64)
    gens = code.gen.row_data
    rows = []
    cases = {
        f"refine {inc.shape[0]}x{inc.shape[1]}": lambda m: m.refine(inc, cc, wc),
        f"span k={len(gens)}": lambda m: m.span(gens),
        "popcount 4096": lambda m: m.popcount(code.words),
        "certificate": lambda m: m.certificate(inc, pos),
        "permute_words": lambda m: m.permute_words(code.words, pos, code.n),
        "orbit_labels 4x2048": lambda m: m.orbit_labels(images),
    }
    mods = {name: backend_module(name) for name in ("numba", "numpy")}
    for label, fn in cases.items():
        times = []
        for name in ("numba", "numpy"):
            fn(mods[name])  # compile / warm caches
            times.append(min(timeit.repeat(lambda: fn(mods[name]), number=1, repeat=repeat)))
        rows.append((label, *times))
    return rows


def classification_time(length: int, backend_flag: str) -> float:
    code = (
        "import time\n"
        "from sdclass.pipeline import run\n"
        "import tempfile\n"
        f"run({min(length, 8)}, tempfile.mkdtemp())\n"
        "t = time.perf_counter()\n"
        f"run({length}, tempfile.mkdtemp())\n"
        "print(time.perf_counter() - t)\n"
    )
    env = dict(os.environ, SDCLASS_NUMBA=backend_flag)
    out = subprocess.run([sys.executable, "-c", code], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout.strip().splitlines()[-1])


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=20)
    parser.add_argument("--length", type=int, default=22)
    args = parser.parse_args(argv)
    print(f"{'kernel':28} {'numba (us)':>12} {'numpy (us)':>12} {'speedup':>8}")
    for label, t_nb, t_np in kernel_table(args.repeat):
        print(f"{label:28} {t_nb * 1e6:12.1f} {t_np * 1e6:12.1f} {t_np / t_nb:8.1f}")
    t_nb = classification_time(args.length, "1")
    t_np = classification_time(args.length, "0")
    print(f"{'classify to n=' + str(args.length):28} {t_nb:11.2f}s {t_np:11.2f}s {t_np / t_nb:8.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
