#pragma once

#include "biphoton/units.hpp"

namespace biphoton {

/// Cold-atom ensemble supporting electromagnetically induced transparency,
/// treated as a homogeneous slab of length `length_L` along the propagation
/// axis.  All rates and detunings are angular frequencies [rad/s].
struct AtomicMedium {
  double optical_depth = 7.0;          ///< on-resonance optical depth (> 0)
  double length_L = 0.015;             ///< slab length [m] (> 0)
  double gamma13 = two_pi * 6.0e6;     ///< optical coherence decay rate (> 0)
  double gamma12 = two_pi * 0.025e6;   ///< ground-state coherence decay rate (>= 0)
  double delta12 = two_pi * 3.04e9;    ///< ground-state hyperfine splitting
  double carrier_wavelength = 795e-9;  ///< photon carrier wavelength [m] (> 0)
  double dipole_ratio = 1.0;           ///< ratio of the two transition dipoles (> 0)

  /// Carrier wavenumber k0 = 2*pi/lambda [1/m].
  double carrier_wavenumber() const { return two_pi / carrier_wavelength; }

  /// Carrier angular frequency omega0 = k0 * c [rad/s].
  double carrier_omega() const { return two_pi * speed_of_light / carrier_wavelength; }

  /// Throws ConfigError naming the first violated invariant.
  void validate() const;

  friend bool operator==(const AtomicMedium&, const AtomicMedium&) = default;
};

/// Counter-propagating pump and coupling drive fields.
struct DriveLasers {
  double omega_p_rabi = two_pi * 88.8e6;  ///< pump Rabi frequency [rad/s] (>= 0)
  double omega_c_rabi = two_pi * 20.7e6;  ///< coupling Rabi frequency [rad/s] (>= 0)
  double delta_p = two_pi * 3.04e9;       ///< pump detuning [rad/s]
  double theta = 5.0 * pi / 180.0;        ///< photon collection angle off-axis [rad]
  /// Pump/coupling wavenumber mismatch k_p - k_c entering the transverse
  /// phase-matching term.  Derived as (delta_p - delta12)/c when a config
  /// file does not set it explicitly.
  double pump_coupling_wavenumber_diff = 0.0;

  void validate() const;

  friend bool operator==(const DriveLasers&, const DriveLasers&) = default;
};

/// How the pump/coupling mismatch term is combined with the longitudinal
/// phase:  WithLength multiplies the stored wavenumber difference by the
/// medium length (mismatch accumulated over the slab, the physically
/// consistent reading and the default); AsPrinted adds the stored value as a
/// bare phase.
enum class PhaseMatchConvention { WithLength, AsPrinted };

/// Shared resonance denominator D(varpi) = |Omega_c|^2 - 4(varpi + i*gamma13)(varpi + i*gamma12).
Complex resonance_denominator(double varpi, const AtomicMedium& medium, const DriveLasers& lasers);

/// Linear susceptibility chi(varpi) of the EIT window seen by the
/// down-shifted photon at detuning varpi from its carrier.
Complex susceptibility(double varpi, const AtomicMedium& medium, const DriveLasers& lasers);

/// Complex wavenumber k(varpi) = k0 * sqrt(1 + chi(varpi)), principal branch
/// (Re k >= 0), capturing slow-light dispersion and residual absorption.
Complex wavenumber(double varpi, const AtomicMedium& medium, const DriveLasers& lasers);

/// Nonlinear coupling strength kappa(varpi) of the spontaneous four-wave
/// mixing process [1/m].
Complex coupling_kappa(double varpi, const AtomicMedium& medium, const DriveLasers& lasers);

/// Longitudinal phase-matching amplitude Phi(varpi): the sinc of half the
/// accumulated wavenumber mismatch across the slab, times the propagation
/// phase of the pair's centre of mass.
Complex phase_matching(double varpi, const AtomicMedium& medium, const DriveLasers& lasers,
                       PhaseMatchConvention convention = PhaseMatchConvention::WithLength);

/// sin(z)/z, analytic at z = 0.
Complex sinc(Complex z);

}  // namespace biphoton
