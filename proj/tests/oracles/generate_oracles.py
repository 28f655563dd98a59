#!/usr/bin/env python3
"""Regenerate tests/oracle_values.hpp from independent mpmath evaluations.

Every value is computed at 30 digits with mpmath's own special functions and
its Gauss-Legendre / tanh-sinh quadrature, never with this library.
"""
import sys
from mpmath import mp, mpf, quad, gamma, loggamma, beta, besselk, hyp1f1, hyp2f1, whitm, exp, sqrt, pi, log, inf

mp.dps = 30


def bessel_kernel(p, v, t):
    s = t * (1 - t)
    return sqrt(2 * p / pi) / sqrt(s) * besselk(v + mpf(1) / 2, p / s)


def beta_v(a, b, p, v):
    return quad(lambda t: t ** (a - 1) * (1 - t) ** (b - 1) * bessel_kernel(p, v, t), [0, mpf(1) / 2, 1])


def phi_pv(b, c, p, v, z):
    f = lambda t: t ** (b - 1) * (1 - t) ** (c - b - 1) * exp(z * t) * bessel_kernel(p, v, t)
    return quad(f, [0, mpf(1) / 2, 1]) / beta(b, c - b)


def f_pv(a, b, c, p, v, z):
    f = lambda t: t ** (b - 1) * (1 - t) ** (c - b - 1) * (1 - z * t) ** (-a) * bessel_kernel(p, v, t)
    return quad(f, [0, mpf(1) / 2, 1]) / beta(b, c - b)


def m_pv(p, v, lam, rho, z):
    return z ** (rho + mpf(1) / 2) * exp(-z / 2) * phi_pv(rho - lam + mpf(1) / 2, 2 * rho + 1, p, v, z)


def main():
    half = mpf(1) / 2
    values = []

    def add(name, x, note):
        print(name, file=sys.stderr, flush=True)
        values.append((name, mp.nstr(x, 20, min_fixed=-inf, max_fixed=inf), note))

    add("kGamma7_3", gamma(mpf("7.3")), "Gamma(7.3)")
    add("kLogGamma10_5", loggamma(mpf("10.5")), "ln Gamma(10.5)")
    add("kBeta2_3_4_1", beta(mpf("2.3"), mpf("4.1")), "B(2.3, 4.1)")
    add("kBesselK2_7_3_3", besselk(mpf("2.7"), mpf("3.3")), "K_{2.7}(3.3)")
    add("kKummer1_7_3_4_2_5", hyp1f1(mpf("1.7"), mpf("3.4"), mpf("2.5")), "Phi(1.7; 3.4; 2.5)")
    add("kGauss1_2_2_1_3_7_0_4", hyp2f1(mpf("1.2"), mpf("2.1"), mpf("3.7"), mpf("0.4")), "2F1(1.2, 2.1; 3.7; 0.4)")
    add("kDampedBetaIntegral",
        quad(lambda t: t ** mpf("0.3") * (1 - t) ** mpf("1.1") * exp(-half / (t * (1 - t))), [0, half, 1]),
        "int_0^1 t^0.3 (1-t)^1.1 exp(-0.5/(t(1-t))) dt")
    add("kSymmetricBesselIntegral",
        quad(lambda u: (1 + u) ** mpf("0.2") * (1 - u) ** mpf("0.4") * exp(u / 2)
             * besselk(half, mpf("1.4") / ((1 + u) * (1 - u))), [-1, 0, 1]),
        "int_-1^1 (1+u)^0.2 (1-u)^0.4 e^{u/2} K_{1/2}(1.4/((1+u)(1-u))) du")
    add("kBetaP1_5_2_5_1",
        quad(lambda t: t ** half * (1 - t) ** mpf("1.5") * exp(-1 / (t * (1 - t))), [0, half, 1]),
        "B_p(1.5, 2.5; 1)")
    add("kBetaPQ",
        quad(lambda t: t ** mpf("0.1") * (1 - t) ** mpf("2.3") * exp(-mpf("0.4") / t - mpf("0.9") / (1 - t)), [0, half, 1]),
        "B_{p,q}(1.1, 3.3; 0.4, 0.9)")
    add("kBetaV1_5_2_5_1_1", beta_v(mpf("1.5"), mpf("2.5"), mpf(1), mpf(1)), "B_v(1.5, 2.5; p=1, v=1)")
    add("kPhiPV", phi_pv(mpf("1.5"), mpf(3), mpf("0.8"), mpf(1), mpf(2)), "Phi_{p,v}(1.5; 3; 2), p=0.8, v=1")
    add("kFPV", f_pv(mpf(2), mpf("1.5"), mpf("3.5"), mpf("0.7"), half, mpf("0.3")),
        "F_{p,v}(2, 1.5; 3.5; 0.3), p=0.7, v=0.5")
    add("kFP", quad(lambda t: (1 - mpf("0.4") * t) ** -1 * exp(-half / (t * (1 - t))), [0, half, 1]),
        "F_p(1, 1; 2; 0.4), p=0.5")
    add("kFPQ",
        quad(lambda t: (1 - t) ** half * (1 - mpf("0.4") * t) ** mpf("-1.5")
             * exp(-mpf("0.3") / t - mpf("0.6") / (1 - t)), [0, half, 1]) / beta(1, mpf("1.5")),
        "F_{p,q}(1.5, 1; 2.5; 0.4), p=0.3, q=0.6")
    add("kWhittakerM", whitm(mpf("0.25"), mpf("0.75"), mpf(2)), "M_{0.25,0.75}(2)")
    add("kMPV", m_pv(mpf("0.8"), mpf(1), mpf("0.25"), mpf("1.1"), mpf(2)), "M_{p,v,lambda,rho}(2), (0.8, 1, 0.25, 1.1)")
    add("kMPVAlt", m_pv(mpf(1), half, mpf("0.4"), mpf("1.2"), mpf(4)), "M_{p,v,lambda,rho}(4), (1, 0.5, 0.4, 1.2)")

    # Mellin transform in p at (v, lambda, rho, r, z) = (0.5, 0, 1.2, 2, 0.5). Swapping the order and
    # substituting p = s t(1-t) leaves t(1-t)^r times a p-free moment, integrated numerically here
    # (the tail beyond s = 400 is below e^-400).
    v, lam, rho, r, z = half, mpf(0), mpf("1.2"), mpf(2), half
    moment = quad(lambda s: s ** (r - half) * besselk(v + half, s), [0, 1, 10, 50, 150, 400])
    b, c = rho - lam + half, 2 * rho + 1
    outer = quad(lambda t: t ** (b - 1) * (1 - t) ** (c - b - 1) * exp(z * t) * (t * (1 - t)) ** r, [0, half, 1])
    mellin = z ** (rho + half) * exp(-z / 2) * sqrt(2 / pi) * moment * outer / beta(b, c - b)
    add("kMellin", mellin, "Mellin transform at (v, lambda, rho, r, z) = (0.5, 0, 1.2, 2, 0.5)")

    out = sys.stdout
    out.write("#pragma once\n\n// Generated by tests/oracles/generate_oracles.py (mpmath, 30 digits).\n\n")
    out.write("namespace oracle {\n\n")
    for name, val, note in values:
        out.write(f"// {note}\ninline constexpr double {name} = {val};\n")
    out.write("\n}  // namespace oracle\n")


if __name__ == "__main__":
    main()
