"""Independent high-precision reference values, frozen into oracle_values.hpp.

Run:  python3 tests/oracles/generate.py > tests/oracles/oracle_values.hpp
Everything here is recomputed from mpmath primitives at 40 digits; nothing is taken from
the C++ library.
"""
import sys

import mpmath as mp

mp.mp.dps = 40
pi = mp.pi
J = lambda n, x: mp.besselj(n, x)
Y = lambda n, x: mp.bessely(n, x)
I = lambda n, x: mp.besseli(n, x)
K = lambda n, x: mp.besselk(n, x)


def T(n, r, A):
    # d/dr of K1(A) I0(r) + I1(A) K0(r) is K1(A) I1(r) - I1(A) K1(r)
    return K(1, A) * I(0, r) + I(1, A) * K(0, r) if n == 0 else K(1, A) * I(1, r) - I(1, A) * K(1, r)


def S(n, r, w, A):
    x = w * (A - r)
    return Y(1, w * A) * J(n, x) - J(1, w * A) * Y(n, x)


def V(n, r, w, A):
    x = w * (A - r)
    return Y(0, w * A) * J(n, x) - J(0, w * A) * Y(n, x)


def first_root(f, lo, hi, n=150):
    """First sign change of f on a uniform scan of (lo, hi), refined by Anderson-Bjorck.

    Points where f is undefined (returns None) are skipped."""
    xs = [lo + (hi - lo) * mp.mpf(i) / n for i in range(n + 1)]
    a, prev = None, None
    for b in xs:
        cur = f(b)
        if cur is None:
            continue
        if prev is not None and prev * cur <= 0:
            return mp.findroot(f, (a, b), solver="anderson", tol=mp.mpf(10) ** -30)
        a, prev = b, cur
    raise ValueError("no sign change")


def r1(w, R):
    return first_root(lambda r: w * J(0, w * r) * T(1, r, R) - J(1, w * r) * T(0, r, R), mp.mpf("1e-6"), mp.besseljzero(1, 1) / w)


def r2(w, R):
    # cap (R - r, R); ratio w S0/S1 = I0(R-r)/I1(R-r)
    hi = min(R, mp.besseljzero(1, 1) / w)
    return first_root(lambda r: w * S(0, r, w, R) * I(1, R - r) - S(1, r, w, R) * I(0, R - r), mp.mpf("1e-6"), hi)


def r3(w, a, b):
    hi = min(b - a, mp.besseljzero(1, 1) / w)
    return first_root(lambda r: w * S(0, -r, w, a) * T(1, a + r, b) - S(1, -r, w, a) * T(0, a + r, b), mp.mpf("1e-6"), hi)


def inner(chi, R, M):
    w = mp.sqrt(chi - 1)
    r = r1(w, R)
    amp = M / (2 * pi * (r * J(1, w * r) / w - J(0, w * r) * r**2 / 2))
    lam = amp * J(0, w * r) * (chi - 1)
    B = amp * J(0, w * r) * (1 / chi - 1) / T(0, r, R)
    return dict(r1=r, coeff=B, energy=lam * M / chi, umax=amp * (1 - J(0, w * r)))


def outer(chi, R, M):
    w = mp.sqrt(chi - 1)
    r = r2(w, R)
    rho = R - r
    Z = lambda x: S(0, R - x, w, R)  # Y1(wR) J0(wx) - J1(wR) Y0(wx)
    mass1 = mp.quad(lambda x: 2 * pi * x * (Z(x) - Z(rho)), [rho, R])
    amp = M / mass1
    B = amp * Z(rho) * (1 / chi - 1) / I(0, rho)
    lam = amp * Z(rho) * (chi - 1)
    return dict(r2=r, coeff=B, energy=lam * M / chi, umax=amp * (Z(R) - Z(rho)))


def volcano_center(chi, R):
    w = mp.sqrt(chi - 1)

    def g(R0):
        try:
            a = r2(w, R0)
            b = r3(w, R0, R)
        except ValueError:
            return None
        return S(0, a, w, R0) - S(0, -b, w, R0)

    # r3 ceases to exist somewhere below R; the sign change sits just inside that edge
    lo, hi = R * mp.mpf("0.6"), R * mp.mpf("0.95")
    for _ in range(40):
        mid = (lo + hi) / 2
        lo, hi = (mid, hi) if g(mid) is not None else (lo, mid)
    return first_root(g, R * mp.mpf("0.6"), lo, n=24)


def rhat0(R):
    return first_root(lambda x: I(0, x) * T(1, x, R) + I(1, x) * T(0, x, R), mp.mpf("0.01"), R - mp.mpf("1e-9"))


def rstar(w):
    return first_root(lambda r: w * J(0, w * r) * K(1, r) + J(1, w * r) * K(0, r), mp.mpf("1e-6"), mp.besseljzero(1, 1) / w)


def progress(msg):
    print(msg, file=sys.stderr, flush=True)


def emit(name, value):
    return f"inline constexpr double {name} = {mp.nstr(value, 20, strip_zeros=False)};"


out = []
w_ = lambda s: out.append(s)
w_("#pragma once")
w_("")
w_("// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit by hand.")
w_("")
w_("namespace oracle {")
w_("")
w_("struct Bessel {")
w_("  double x, j0, j1, y0, y1, i0, i1, k0, k1;")
w_("};")
w_("inline constexpr Bessel kBessel[] = {")
for x in ["0.1", "1", "2.5", "7.3", "20", "60"]:
    x = mp.mpf(x)
    vals = [x, J(0, x), J(1, x), Y(0, x), Y(1, x), I(0, x), I(1, x), K(0, x), K(1, x)]
    w_("    {" + ", ".join(mp.nstr(v, 20) for v in vals) + "},")
w_("};")
w_("")
w_(emit("j01", mp.besseljzero(0, 1)))
for k in range(1, 5):
    w_(emit(f"j1{k}", mp.besseljzero(1, k)))
w_("")
w_("struct Compound {")
w_("  double r, omega, anchor, t0, t1, s0, s1, v0, v1;")
w_("};")
w_("inline constexpr Compound kCompound[] = {")
for r, w, A in [("0.5", "3", "5"), ("2.2", "1.7", "5"), ("4.9", "9.9", "5"), ("-0.4", "2.5", "1.5"), ("1.0", "30", "3")]:
    r, w, A = mp.mpf(r), mp.mpf(w), mp.mpf(A)
    t0 = T(0, r, A) if r > 0 else mp.nan
    t1 = T(1, r, A) if r > 0 else mp.nan
    vals = [r, w, A, t0, t1, S(0, r, w, A), S(1, r, w, A), V(0, r, w, A), V(1, r, w, A)]
    w_("    {" + ", ".join("__builtin_nan(\"\")" if mp.isnan(v) else mp.nstr(v, 20) for v in vals) + "},")
w_("};")
w_("")
R = mp.mpf(5)
M = 25 * pi
for k in range(1, 5):
    w_(emit(f"chi{k}_R5", (mp.besseljzero(1, k) / R) ** 2 + 1))
w_(emit("rhat0_R5", rhat0(R)))
w_("")
w_("struct Ring {")
w_("  double chi, radius, coeff, energy, umax;")
w_("};")
progress("rings")
w_("// Inner ring on R = 5, M = 25 pi: support radius, exterior T0 coefficient, energy, max u.")
w_("inline constexpr Ring kInner[] = {")
for c in ["3", "10", "100", "1e5"]:
    d = inner(mp.mpf(c), R, M)
    w_("    {" + ", ".join(mp.nstr(v, 20) for v in [mp.mpf(c), d["r1"], d["coeff"], d["energy"], d["umax"]]) + "},")
w_("};")
w_("// Outer ring: cap width, interior I0 coefficient, energy, max u.")
w_("inline constexpr Ring kOuter[] = {")
for c in ["3", "10", "100", "1e5"]:
    d = outer(mp.mpf(c), R, M)
    w_("    {" + ", ".join(mp.nstr(v, 20) for v in [mp.mpf(c), d["r2"], d["coeff"], d["energy"], d["umax"]]) + "},")
w_("};")
w_("")
progress("volcano centres")
w_(emit("volcano_center_chi5", volcano_center(mp.mpf(5), R)))
w_(emit("volcano_center_chi100", volcano_center(mp.mpf(100), R)))
w_(emit("rstar_chi10", rstar(mp.sqrt(9))))
w_(emit("constant_energy_chi2", -(mp.mpf(2) - 1) * M**2 / (2 * pi * R**2)))
w_("")
w_("}  // namespace oracle")
print("\n".join(out))
