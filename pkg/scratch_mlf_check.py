"""Scratch: empirical accuracy check of the ML evaluation against oracles."""
import math
import time

import mpmath
import numpy as np
from scipy.special import erfcx, erfc

from fracbd.special import mittag_leffler, MlBranch, _mlf_neg_mp, _taylor_peak_nats


def mp_oracle(nu, x, dps=40):
    """Arbitrary-precision direct series; None when the peak is unaffordable."""
    peak = _taylor_peak_nats(nu, abs(x))
    if not math.isfinite(peak) or peak > 2000:
        return None
    with mpmath.workdps(int(dps + peak / math.log(10) + 20)):
        s = mpmath.mpf(1)
        num = mpmath.mpf(1)
        xm = mpmath.mpf(x)
        prev = mpmath.inf
        cut = mpmath.mpf(10) ** (-dps - 10)
        for k in range(1, 2_000_000):
            num *= xm
            t = num * mpmath.rgamma(mpmath.mpf(nu) * k + 1)
            s += t
            m = abs(t)
            if m < cut * abs(s) and m <= prev:
                break
            prev = m
        return float(s)


# 1. erfcx identity for nu=1/2 over [-50, 10]
print("== nu=0.5 vs erfcx identity ==")
worst = 0.0
t0 = time.time()
for x in np.linspace(-50, 10, 241):
    ref = erfcx(-x) if x <= 0 else math.exp(x * x) * erfc(-x)
    got = mittag_leffler(0.5, float(x))
    rel = abs(got.value - ref) / abs(ref)
    if rel > worst:
        worst, wx, wb = rel, x, got.branch_used
print(f"worst rel = {worst:.3e} at x={wx:.2f} ({wb.value})  [{time.time()-t0:.2f}s]")

# 2. mp oracle across nu for x<0 (skipping unaffordable small-nu points)
print("== mp oracle sweep, x<0 ==")
t0 = time.time()
worst = (0.0, None, None)
for nu in (0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99):
    for x in (-0.5, -2.0, -5.0, -8.0, -12.0, -20.0, -29.0, -30.0, -45.0):
        ref = mp_oracle(nu, x)
        if ref is None:
            continue
        got = mittag_leffler(nu, x)
        rel = abs(got.value - ref) / abs(ref)
        if rel > worst[0]:
            worst = (rel, nu, x, got.branch_used.value, got.est_abs_error)
        if rel > 1e-12:
            print(f"  BAD nu={nu:4} x={x:8.2f} rel={rel:.2e} branch={got.branch_used.value}")
print(f"worst: rel={worst[0]:.3e} at nu={worst[1]}, x={worst[2]} [{time.time()-t0:.1f}s]")

# 3. positive axis
print("== positive axis ==")
worst = (0.0, None, None)
for nu in (0.4, 0.7, 0.95):
    for x in (0.5, 2.0, 10.0, 29.0, 31.0, 60.0):
        try:
            got = mittag_leffler(nu, x)
        except Exception as e:
            print(f"  nu={nu} x={x}: {type(e).__name__}: {e}")
            continue
        ref = mp_oracle(nu, x)
        if ref is None:
            continue
        rel = abs(got.value - ref) / ref
        if rel > worst[0]:
            worst = (rel, nu, x)
print(f"worst: rel={worst[0]:.3e} at nu={worst[1]}, x={worst[2]}")

# 4. _mlf_neg_mp at 50 digits
print("== _mlf_neg_mp (50 digits) ==")
bad = 0
for nu in (0.3, 0.5, 0.8, 1.0):
    for y in (0.01, 1.0, 5.0, 30.0, 120.0, 300.0):
        got = _mlf_neg_mp(nu, y, 50)
        if nu == 1.0:
            with mpmath.workdps(80):
                ref = mpmath.exp(-mpmath.mpf(y))
                rel = float(abs(got - ref) / ref)
        else:
            peak = _taylor_peak_nats(nu, y)
            if math.isfinite(peak) and peak < 2000:
                with mpmath.workdps(int(80 + peak / 2.3)):
                    s, num, prev = mpmath.mpf(1), mpmath.mpf(1), mpmath.inf
                    for k in range(1, 2_000_000):
                        num *= -mpmath.mpf(y)
                        t = num * mpmath.rgamma(mpmath.mpf(nu) * k + 1)
                        s += t
                        if abs(t) < mpmath.mpf(10) ** -70 * abs(s) and abs(t) <= prev:
                            break
                        prev = abs(t)
                    rel = float(abs(got - s) / abs(s))
            else:
                continue
        if rel > 1e-48:
            bad += 1
            print(f"  BAD nu={nu} y={y}: rel={rel:.2e}")
print("all <= 1e-48" if bad == 0 else f"{bad} bad")

# 5. timing
for label, nu, x, n in [("pos taylor", 0.6, 3.7, 500), ("asymptotic", 0.6, -800.0, 500),
                        ("neg taylor dbl", 0.6, -1.5, 500), ("gap mp", 0.9, -12.0, 20)]:
    t0 = time.time()
    for _ in range(n):
        mittag_leffler(nu, x)
    print(f"{label:15s}: {(time.time()-t0)/n*1e6:8.1f} us/call")
