"""Compare the compiled and pure-Python normal-form kernels on random words."""

import argparse
import random
import statistics
import sys
import time

from ftau.normal_form import available_backends, normalize_with_stats
from ftau.words import Letter, Word


def make_words(count, length, max_index, seed):
    rng = random.Random(seed)
    return [
        Word(Letter(rng.choice("xy"), rng.randint(0, max_index), rng.choice((1, -1))) for _ in range(length))
        for _ in range(count)
    ]


def time_backend(words, backend, repeats):
    runs = []
    for _ in range(repeats):
        start = time.perf_counter()
        for w in words:
            normalize_with_stats(w, backend=backend)
        runs.append(time.perf_counter() - start)
    return min(runs), statistics.median(runs)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=300)
    p.add_argument("--lengths", type=int, nargs="+", default=[10, 30, 60])
    p.add_argument("--max-index", type=int, default=6)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    args = p.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; timing the python backend only", file=sys.stderr)
    print(f"{'length':>6}  {'backend':>7}  {'best s':>8}  {'median s':>8}  {'words/s':>9}")
    for length in args.lengths:
        words = make_words(args.count, length, args.max_index, args.seed)
        # both kernels must agree before timing means anything
        ref = [normalize_with_stats(w, backend="python") for w in words]
        best = {}
        for b in backends:
            assert [normalize_with_stats(w, backend=b) for w in words] == ref
            lo, med = time_backend(words, b, args.repeats)
            best[b] = lo
            print(f"{length:>6}  {b:>7}  {lo:8.4f}  {med:8.4f}  {args.count / lo:9.0f}")
        if len(best) == 2:
            print(f"{length:>6}  speedup  {best['python'] / best['cython']:7.1f}x")


if __name__ == "__main__":
    main()
