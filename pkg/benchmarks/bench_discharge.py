#!/usr/bin/env python3
"""Time the jitted discharge kernel against the numpy fallback.

The workload is what the simulator runs per 1,000-image batch: one RK4
integration per sensing line, 750 fixed steps each.  The package normally
picks one path at import time (SUBMAC_NO_NUMBA=1 forces the fallback); here
both implementations are called directly so a single process can time the
pair on identical inputs and confirm they agree.
"""

import argparse
import time

import numpy as np

from submac import _kernels
from submac.device import DeviceParams, thermal_voltage
from submac.simengine import TimingSpec


def time_fn(fn, args, repeats):
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - t0)
    arr = np.asarray(samples)
    return arr.mean(), arr.std()


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lines", type=int, default=20000,
                    help="sensing lines to integrate "
                         "(default 20000 = 1,000 images x 20 lines)")
    ap.add_argument("--steps", type=int, default=TimingSpec().n_steps)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    p = DeviceParams()
    v_t = thermal_voltage(p.t_kelvin)
    rng = np.random.default_rng(args.seed)
    # span the post-calibration current range: quiet lines up to
    # near-saturating ones
    s = 10.0 ** rng.uniform(-8.0, -5.5, args.lines)
    call = (s, p.v_dd, TimingSpec().dt, args.steps, v_t, p.c_sen)

    v_np, _ = _kernels._rk4_numpy(*call)
    mean_np, std_np = time_fn(_kernels._rk4_numpy, call, args.repeats)
    print(f"{args.lines} lines x {args.steps} steps, "
          f"mean of {args.repeats} repeats")
    print(f"numpy fallback: {1e3 * mean_np:8.1f} ms +/- {1e3 * std_np:.1f}")

    if not _kernels.HAVE_NUMBA:
        print("numba unavailable; the fallback is the only path")
        return

    v_nb, _ = _kernels._rk4_numba(*call)  # first call compiles
    mean_nb, std_nb = time_fn(_kernels._rk4_numba, call, args.repeats)
    import numba

    print(f"numba njit:     {1e3 * mean_nb:8.1f} ms +/- {1e3 * std_nb:.1f} "
          f"({numba.get_num_threads()} threads)")
    print(f"njit/fallback speedup {mean_np / mean_nb:.2f}x, "
          f"max |difference| {np.max(np.abs(v_nb - v_np)):.2e} V")
    if mean_nb > mean_np:
        print("fallback wins here: the jitted loop is element-parallel and "
              "needs multiple cores to beat numpy's vectorized ufuncs "
              "(set SUBMAC_NO_NUMBA=1 to make the package use the fallback)")


if __name__ == "__main__":
    main()
