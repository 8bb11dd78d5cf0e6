"""Time the compiled arithmetic kernel against the pure-Python fallback.

Each lane runs in its own interpreter because the kernel is chosen once at
import time.  The pure lane is forced with ACCEPTCERT_PURE=1.

Usage:
    python3 benchmarks/bench_kernels.py [--repeat N] [--json]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, time
from acceptcert.exactalg import (
    KERNEL_NAME, ExactMatrix, char_poly, cyc_zeta, cyc_rational,
)
from acceptcert.certsuite import run

def timed(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best

def scalar_mill():
    z = cyc_zeta(24)
    acc = cyc_rational(1)
    for k in range(2000):
        acc = acc * (z ** (k % 24) + cyc_rational(k % 7 - 3))
        if k % 50 == 49:
            acc = cyc_rational(1) + z ** (k % 24)
    return acc

def charpoly_mill():
    z = cyc_zeta(8)
    m = ExactMatrix.make([
        [z ** ((3 * r + c) % 8) for c in range(4)] for r in range(4)])
    for _ in range(40):
        char_poly(m)

def cert_small():
    run("su4_mod_center")

def cert_prime():
    run("psu_odd_prime", {"p": 5})

repeat = int(__import__("sys").argv[1])
rows = {
    "scalar_mill": timed(scalar_mill, repeat),
    "charpoly_4x4": timed(charpoly_mill, repeat),
    "cert_su4_mod_center": timed(cert_small, repeat),
    "cert_psu_p5": timed(cert_prime, 1),
}
print(json.dumps({"kernel": KERNEL_NAME, "rows": rows}))
"""


def run_lane(pure, repeat):
    env = dict(os.environ)
    env.pop("ACCEPTCERT_PURE", None)
    if pure:
        env["ACCEPTCERT_PURE"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat)],
        capture_output=True, text=True, env=env)
    if proc.returncode != 0:
        raise RuntimeError("lane failed:\n" + proc.stderr)
    return json.loads(proc.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3,
                    help="best-of-N timing per workload (default 3)")
    ap.add_argument("--json", action="store_true", help="emit JSON instead")
    args = ap.parse_args(argv)

    fast = run_lane(pure=False, repeat=args.repeat)
    pure = run_lane(pure=True, repeat=args.repeat)

    if args.json:
        print(json.dumps({"fast": fast, "pure": pure}, indent=2))
        return 0

    print("kernel lanes: %s vs %s  (best of %d)"
          % (fast["kernel"], pure["kernel"], args.repeat))
    header = "%-22s %12s %12s %9s" % ("workload", fast["kernel"],
                                      pure["kernel"], "ratio")
    print(header)
    print("-" * len(header))
    for name in fast["rows"]:
        a = fast["rows"][name]
        b = pure["rows"][name]
        ratio = b / a if a > 0 else float("inf")
        print("%-22s %11.4fs %11.4fs %8.2fx" % (name, a, b, ratio))
    if fast["kernel"] == pure["kernel"]:
        print("note: both lanes ran the %r kernel; the compiled extension "
              "is not importable here" % fast["kernel"])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
