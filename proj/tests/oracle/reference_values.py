#!/usr/bin/env python3
"""High-precision reference evaluation of the medium response functions.

Evaluates the EIT susceptibility, dispersion, parametric coupling and
phase-matching functions at 50-digit precision with mpmath, independently
of the C++ implementation.  The printed values are frozen as golden
constants in the unit tests; rerun this script to regenerate them.
"""

import mpmath as mp

mp.mp.dps = 50

C_LIGHT = mp.mpf("299792458.0")  # m/s, exact by definition


def two_pi_mhz(x):
    return 2 * mp.pi * mp.mpf(x) * mp.mpf("1e6")


class Params:
    def __init__(self, od):
        self.od = mp.mpf(od)
        self.L = mp.mpf("0.015")            # m
        self.lambda0 = mp.mpf("795e-9")     # m
        self.gamma13 = two_pi_mhz("6")
        self.gamma12 = two_pi_mhz("0.025")
        self.delta12 = two_pi_mhz("3040")
        self.omega_p = two_pi_mhz("88.8")
        self.omega_c = two_pi_mhz("20.7")
        self.delta_p = self.delta12
        self.theta = 5 * mp.pi / 180
        self.dipole_ratio = mp.mpf(1)
        self.k0 = 2 * mp.pi / self.lambda0  # = omega0 / c


def denom(p, w):
    return p.omega_c**2 - 4 * (w + 1j * p.gamma13) * (w + 1j * p.gamma12)


def chi(p, w):
    return (4 * p.od * p.gamma13 / (p.k0 * p.L)) * (w + 1j * p.gamma12) / denom(p, w)


def wavenumber(p, w):
    return p.k0 * mp.sqrt(1 + chi(p, w))


def kappa(p, w):
    num = -1j * p.omega_p * p.omega_c * p.gamma13 * p.od * p.dipole_ratio / (2 * p.L)
    return num / ((p.delta_p + 1j * p.gamma13) * denom(p, w))


def sinc(z):
    if z == 0:
        return mp.mpf(1)
    return mp.sin(z) / z


def phase_matching(p, w, dk_pc=mp.mpf(0), with_length=True):
    kp = wavenumber(p, w)
    km = wavenumber(p, -w)
    longitudinal = (kp - km) * p.L
    transverse = dk_pc * mp.cos(p.theta)
    if with_length:
        transverse = transverse * p.L
    arg = (longitudinal + transverse) / 2
    return sinc(arg) * mp.exp(1j * (kp + km) * p.L / 2)


def report(label, z):
    print(f"{label}:")
    print(f"  re = {mp.nstr(mp.re(z), 20)}")
    print(f"  im = {mp.nstr(mp.im(z), 20)}")


if __name__ == "__main__":
    od25 = Params(25)
    od7 = Params(7)
    w1 = two_pi_mhz(1)

    print(f"k0 = {mp.nstr(od25.k0, 20)}  (1/m)")
    report("chi(2pi*1MHz) @ OD=25", chi(od25, w1))
    report("k(2pi*1MHz) @ OD=25", wavenumber(od25, w1))
    report("kappa(0) @ OD=7", kappa(od7, 0))
    report("Phi(2pi*1MHz) @ OD=25 (with-length, dk_pc=0)", phase_matching(od25, w1))
    report("kappa(0)*Phi(0) @ OD=7", kappa(od7, 0) * phase_matching(od7, 0))
    # Supporting limits used by the analytic-limit tests
    report("chi(0) @ OD=25", chi(od25, 0))
    print(f"OD/(k0*L) @ OD=25 = {mp.nstr(25 / (od25.k0 * od25.L), 20)}")
