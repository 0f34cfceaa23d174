"""Time the compiled EM kernel against the numpy fallback on attribution-shaped maps.

    python3 benchmarks/bench_em.py [--maps 20] [--J 3 7]
"""
import argparse
import time

import numpy as np

from shortcut_align.segmentation import WGMConfig, _backend, fit_ppeps_wgm
from shortcut_align.attribution import positive_pmf


def random_maps(n, seed=0, side=28):
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:side, 0:side]
    maps = []
    for _ in range(n):
        m = np.zeros((side, side))
        for _ in range(rng.integers(2, 6)):
            cy, cx = rng.uniform(0, side, 2)
            s = rng.uniform(1.0, 5.0)
            m += rng.uniform(0.2, 1.0) * np.exp(-((yy - cy) ** 2 + (xx - cx) ** 2) / (2 * s * s))
        m += 0.01 * rng.random((side, side))
        maps.append(positive_pmf(m))
    return maps


def timed(backend, maps, J, cfg):
    _backend.use(backend)
    t0 = time.perf_counter()
    fits = [fit_ppeps_wgm(p, J, cfg) for p in maps]
    return time.perf_counter() - t0, fits


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--maps", type=int, default=20)
    ap.add_argument("--J", type=int, nargs="+", default=[3, 7])
    args = ap.parse_args(argv)
    if not _backend.compiled_available():
        raise SystemExit("compiled kernel not built; run: python3 setup.py build_ext --inplace")
    maps = random_maps(args.maps)
    cfg = WGMConfig(seed=0)
    print(f"{'J':>3} {'python s':>10} {'cython s':>10} {'speedup':>8} {'max |dmu|':>10}")
    for J in args.J:
        t_py, f_py = timed("python", maps, J, cfg)
        t_cy, f_cy = timed("cython", maps, J, cfg)
        dmu = max(float(np.abs(a.mu - b.mu).max()) for a, b in zip(f_py, f_cy))
        print(f"{J:>3} {t_py:>10.3f} {t_cy:>10.3f} {t_py / t_cy:>8.1f} {dmu:>10.2e}")


if __name__ == "__main__":
    main()
