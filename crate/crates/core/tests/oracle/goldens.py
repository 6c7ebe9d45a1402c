# Independent high-precision oracle for frozen test values.
# Run: python3 goldens.py
from mpmath import mp, mpf, exp, matrix, lu_solve

mp.dps = 50
KQ = mpf("8.617333262e-5")
TAMB = mpf("318.15")
VGS = VDS = mpf("0.7")
VTH0 = mpf("0.15")
VTHC = mpf("-0.004")
VOFF = mpf("0.0024")
ETA = mpf(2)
P0 = mpf("0.1")


def shape(t):
    vt = KQ * t
    vth = VTH0 + VTHC * (t - TAMB)
    return vt**2 * exp((VGS - vth - VOFF) / (ETA * vt)) * (1 - exp(-VDS / vt))


C = P0 / shape(TAMB)


def bsim(t):
    return C * shape(t)


def sweep():
    return [mpf("313.15") + mpf("0.1") * i for i in range(401)]


def lsq(ts, ps, deg):
    # normal equations in centered/scaled variable, solved at high precision
    lo, hi = ts[0], ts[-1]
    mid, half = (lo + hi) / 2, (hi - lo) / 2
    xs = [(t - mid) / half for t in ts]
    n = deg + 1
    a = matrix(n, n)
    b = matrix(n, 1)
    for x, p in zip(xs, ps):
        for i in range(n):
            b[i] += x**i * p
            for j in range(n):
                a[i, j] += x ** (i + j)
    c = lu_solve(a, b)
    return lambda t: sum(c[i] * ((t - mid) / half) ** i for i in range(n))


def report(ts, ref, model):
    rel = [abs(model(t) - r) / abs(r) * 100 for t, r in zip(ts, ref)]
    rmax = max(ref, key=abs)
    nrm = [abs(model(t) - r) / abs(rmax) * 100 for t, r in zip(ts, ref)]
    return max(rel), sum(rel) / len(rel), max(nrm), sum(nrm) / len(nrm)


if __name__ == "__main__":
    print("norm_constant", mp.nstr(C, 20))
    print("P(313.15)", mp.nstr(bsim(mpf("313.15")), 20))
    print("P(353.15)", mp.nstr(bsim(mpf("353.15")), 20))
    print("ratio", mp.nstr(bsim(mpf("353.15")) / bsim(mpf("313.15")), 20))
    ts = sweep()
    ref = [bsim(t) for t in ts]
    for d in range(1, 5):
        print("poly", d, [mp.nstr(v, 15) for v in report(ts, ref, lsq(ts, ref, d))])
    # piecewise, equal-width, boundary sample to the right segment
    for k in (1, 3, 5):
        w = (ts[-1] - ts[0]) / k
        segs = []
        for s in range(k):
            lo = ts[0] + w * s
            hi = ts[0] + w * (s + 1)
            idx = [i for i, t in enumerate(ts) if (t >= lo - mpf("1e-30") and (t < hi - mpf("1e-30") or s == k - 1))]
            segs.append((lo, lsq([ts[i] for i in idx], [ref[i] for i in idx], 1)))

        def pw(t, segs=segs):
            f = segs[0][1]
            for lo, g in segs:
                if t >= lo - mpf("1e-30"):
                    f = g
            return f(t)

        print("pwl", k, [mp.nstr(v, 15) for v in report(ts, ref, pw)])
