#!/usr/bin/env python3
"""Independent big-integer oracle for the effective constants.

Computes every exactly representable constant with Python integers (and
mpmath for the de Franchis-Severi bound) without touching the C++ code.
The values printed here are frozen into the C++ unit and acceptance tests.

Usage:
    constants_oracle.py                 print the oracle table as JSON
    constants_oracle.py --check BOUNDS  run the `bounds` CLI and compare
"""

import json
import math
import subprocess
import sys

import mpmath

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


def base_constants(g, q, s):
    m = 1250 * (g * q + s)
    d = 5 * (2 * g - 2)
    l = 4 * m - 3
    ld = l * d
    return {
        "m": m,
        "d": d,
        "l": l,
        "delta0": ld,
        "N": ld * ld + 1,
        "C(ld+2,2)": math.comb(ld + 2, 2),
        "gqs": g * q + s,
    }


def D_value(g, q, s):
    c = base_constants(g, q, s)
    return (c["C(ld+2,2)"] - 1) * c["l"] ** 2 * c["d"] * 500 * c["N"] * c["gqs"]


def theta(g):
    return 2 ** (2 * g) * (2 ** (2 * g) - 1) * 2 ** (2 * (1 + 2 ** (2 * g) * (g - 1))) * 2


def g_prime(g):
    return 2 + 2 ** (2 * g + 1) * (g - 1)


def parshin_C(g, q, s):
    t = theta(g)
    return 1 + t * (q - 1) + (t - 1) * s


def log10_int(n):
    # enough precision for 30 significant digits of log10 of big integers
    mpmath.mp.dps = 60
    return mpmath.log10(mpmath.mpf(n))


def log10_factorial(n):
    """log10 n! from mpmath's log-gamma, sanity-checked against the integral
    bounds  int_1^n ln x dx <= ln n! <= int_1^(n+1) ln x dx."""
    mpmath.mp.dps = 80
    n = mpmath.mpf(n)
    v = mpmath.loggamma(n + 1)
    lo = n * mpmath.log(n) - n + 1
    hi = (n + 1) * mpmath.log(n + 1) - n
    assert lo <= v <= hi
    return v / mpmath.log(10)


def log10_Q(g, q, s):
    """log10(ld * M * C(4ld+M, 4ld)) with C(n,k) = prod_{i<k}(n-i)/k!.

    For k << n the product equals n^k up to a factor exp(-k^2/n) that is far
    below the printed precision (n has thousands of digits)."""
    c = base_constants(g, q, s)
    ld = c["delta0"]
    M = math.comb(c["l"] + c["m"], c["m"]) - 1
    k = 4 * ld
    n = M + k
    assert k * k * 10**60 < n
    mpmath.mp.dps = 80
    lc = k * mpmath.log10(mpmath.mpf(n)) - mpmath.loggamma(k + 1) / mpmath.log(10)
    return mpmath.log10(ld) + mpmath.log10(mpmath.mpf(M)) + lc


def defranchis_severi(g, dps=200):
    mpmath.mp.dps = dps
    g = mpmath.mpf(g)
    inner = (mpmath.mpf(1) / 2) * (2 * mpmath.sqrt(6) * (g - 1) + 1) ** (2 + 2 * g * g) \
        * g * g * (g - 1) * mpmath.sqrt(2) ** (g * (g - 1))
    return 42 * (g - 1) * (inner + 1)


def table():
    out = {}
    for (g, q, s) in [(2, 2, 0), (2, 2, 1), (3, 2, 0)]:
        c = base_constants(g, q, s)
        out[f"base({g},{q},{s})"] = {k: str(v) for k, v in c.items()}
    c = base_constants(2, 2, 0)
    out["D(2,2,0)"] = str(D_value(2, 2, 0))
    out["section_degree_bound(2,2,0)"] = str(500 * c["N"] * c["gqs"])
    out["q_prime_bound(2,2,0)"] = str(100 * c["N"] ** 2 * c["gqs"])
    out["tau_degree_bound(2,2,0)"] = str(200 * c["N"] ** 2 * c["gqs"])
    out["kx_degree_bound(2,2,0)"] = str(100 * c["N"] * c["gqs"])
    m, l, d = c["m"], c["l"], c["d"]
    exponent = (m + 1) * l * l * d - m
    rank = math.comb((m + 1) * l * l * d, m)
    out["kollar_exponent(2,2,0)"] = str(exponent)
    out["kollar_rank_bits(2,2,0)"] = rank.bit_length()
    bm = math.comb(24997, 5000)
    out["C(24997,5000).digits"] = len(str(bm))
    out["C(24997,5000).log10"] = mpmath.nstr(log10_int(bm), 40)
    M = math.comb(c["l"] + c["m"], c["m"]) - 1
    out["M(2,2,0).digits"] = len(str(M))
    out["M(2,2,0).log10"] = mpmath.nstr(log10_int(M), 40)
    out["theta(2)"] = str(theta(2))
    out["theta(3)"] = str(theta(3))
    out["theta(3)/2^259"] = str(theta(3) // 2 ** 259)
    out["g_prime(2)"] = str(g_prime(2))
    out["g_prime(3)"] = str(g_prime(3))
    out["C(2,2,0)"] = str(parshin_C(2, 2, 0))
    out["C(2,1,0)"] = str(parshin_C(2, 1, 0))
    out["C(2,0,1)"] = str(parshin_C(2, 0, 1))
    s2 = defranchis_severi(2)
    out["S(2).real"] = mpmath.nstr(s2, 30)
    out["S(2).ceil"] = str(int(mpmath.ceil(s2)))
    out["S(3).ceil"] = str(int(mpmath.ceil(defranchis_severi(3))))
    out["S(34).ceil.digits"] = len(str(int(mpmath.ceil(defranchis_severi(34, dps=6000)))))
    out["log10(8246337208320)"] = mpmath.nstr(log10_int(8246337208320), 40)
    out["log10((C(2,2,0)+1)!)"] = mpmath.nstr(log10_factorial(8246337208322), 45)
    lq = log10_Q(2, 2, 0)
    out["log10 Q(2,2,0)"] = mpmath.nstr(lq, 45)
    mpmath.mp.dps = 80
    out["A(2,2,0).body"] = mpmath.nstr(
        lq + mpmath.log10(mpmath.log10(mpmath.mpf(c["C(ld+2,2)"]))), 45)
    # toy assembly values
    out["toy.Q(1,3)"] = str(1 * 3 * math.comb(7, 3))
    out["toy.Q(2,3)"] = str(2 * 3 * math.comb(11, 3))
    out["toy.D"] = str((math.comb(4, 2) - 1) * 1 * 2 * 500 * 5 * 1)
    out["toy.A(2,3)"] = str(math.comb(4, 2) ** 3)
    out["toy.shafarevich(A=1,Q=1,D=1,q=2)"] = str(7 * math.comb(35, 4) ** 250)
    return out


def check(bounds):
    expected = table()["base(2,2,0)"]
    proc = subprocess.run(
        [bounds, "shafarevich", "--g", "2", "--q", "2", "--s", "0", "--format", "json",
         "--constants-only"],
        capture_output=True, text=True, check=True)
    report = json.loads(proc.stdout)
    consts = report["constants"]
    failures = []
    for key in ["m", "d", "l", "delta0", "N"]:
        if consts[key] != expected[key]:
            failures.append(f"{key}: got {consts[key]} want {expected[key]}")
    if consts["C(ld+2,2)"] != expected["C(ld+2,2)"]:
        failures.append("C(ld+2,2) mismatch")
    for f in failures:
        print("FAIL", f)
    if failures:
        return 1
    print("oracle agreement: m, d, l, delta0, N, C(ld+2,2)")
    return 0


if __name__ == "__main__":
    if len(sys.argv) == 3 and sys.argv[1] == "--check":
        sys.exit(check(sys.argv[2]))
    print(json.dumps(table(), indent=2))
