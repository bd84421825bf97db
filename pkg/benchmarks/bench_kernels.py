"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat R]
"""
from __future__ import annotations

import argparse
import sys
import timeit

from dominosieve import _pykernels
from dominosieve.tableaux import DominoTiling, Placement, _precedence, rectangle

try:
    from dominosieve import _kernels
except ImportError:
    _kernels = None


def stack_preds(k: int) -> list[int]:
    placements = tuple(sorted(Placement(r, c, "H") for r in (1, 2) for c in range(1, 2 * k, 2)))
    return _precedence(DominoTiling((2 * k, 2 * k), placements))


CASES = [
    ("tile_shape", "2x24", [24, 24]),
    ("tile_shape", "6x8", list(rectangle(6, 8))),
    ("count_tilings", "8x8", list(rectangle(8, 8))),
    ("linear_extensions", "9-stack", stack_preds(9)),
    ("count_linear_extensions", "16-stack", stack_preds(16)),
]


def bench(fn, arg, repeat: int) -> float:
    return min(timeit.repeat(lambda: fn(arg), number=1, repeat=repeat))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    header = f"{'kernel':<24} {'input':<10} {'python s':>10} {'compiled s':>11} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, label, arg in CASES:
        py_fn, c_fn = getattr(_pykernels, name), getattr(_kernels, name)
        if py_fn(arg) != c_fn(arg):
            print(f"{name} {label}: backends disagree", file=sys.stderr)
            return 1
        t_py, t_c = bench(py_fn, arg, args.repeat), bench(c_fn, arg, args.repeat)
        print(f"{name:<24} {label:<10} {t_py:>10.4f} {t_c:>11.4f} {t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
