#pragma once

#include <string>
#include <vector>

#include "biphoton/types.hpp"

namespace biphoton {

/// Polarization analyzer setting behind one output port: the Jones vector
/// (components on the H/V axes) of the state passed to the detector.
struct ProjectionSetting {
  Complex h{1.0, 0.0};
  Complex v{0.0, 0.0};

  void validate() const;  ///< requires |(h, v)| = 1 within 1e-12

  static ProjectionSetting horizontal() { return {{1.0, 0.0}, {0.0, 0.0}}; }
  static ProjectionSetting vertical() { return {{0.0, 0.0}, {1.0, 0.0}}; }
  static ProjectionSetting diagonal();        ///< (H + V)/sqrt(2)
  static ProjectionSetting antidiagonal();    ///< (H - V)/sqrt(2)
  static ProjectionSetting right_circular();  ///< (H + iV)/sqrt(2)
};

/// One analyzer configuration of the interference battery.
struct BatterySetting {
  double delay_dt = 0.0;  ///< [s]
  ProjectionSetting port3;
  ProjectionSetting port4;
  std::string label;      ///< e.g. "DD"
};

/// All settings recorded at one relative delay.
struct InterferenceMeasurement {
  double delay_dt = 0.0;                    ///< [s]
  std::vector<BatterySetting> settings;     ///< parallel to histograms
  std::vector<CoincidenceHistogram> histograms;
};

/// Reconstructed biphoton phase on a uniform time lattice.
struct PhaseProfile {
  std::vector<double> tau;       ///< [s]
  std::vector<double> phi;       ///< [rad], phi(0) = 0 by convention
  std::vector<char> mask;        ///< 1 where the amplitude supports the estimate
  /// Largest wrapped discrepancy [rad] between the phase differences measured
  /// at the coarser delays and those predicted by the reconstruction; NaN if
  /// only one delay was supplied.  Reported, never corrected for.
  double coarse_delay_max_discrepancy = 0.0;
};

/// Expected coincidence histogram of the delayed-pair polarization
/// interferometer: port-1 photon tagged H, port-2 photon tagged V and delayed
/// by delay_dt, both mixed on a 50:50 splitter and analyzed by `port3` /
/// `port4`.  Bin centres are k * bin_dt with |k * bin_dt| <= tau_range - delay_dt.
CoincidenceHistogram interfere(const SymmetrizedPair& pair, double delay_dt,
                               const ProjectionSetting& port3, const ProjectionSetting& port4,
                               const DetectionParams& detection);

/// The six analyzer settings {D/D, D/A, R/D, R/A, H/V, V/H} at each delay.
std::vector<BatterySetting> default_setting_battery(const std::vector<double>& delays);

/// Runs every battery setting through `interfere` and groups the results per
/// delay.
std::vector<InterferenceMeasurement> measure_battery(const SymmetrizedPair& pair,
                                                     const std::vector<double>& delays,
                                                     const DetectionParams& detection);

/// Recovers the biphoton phase from the quadrature settings of the finest
/// delay and checks the coarser delays against the result.  `amplitude`
/// (the bosonic coincidence histogram) gates the usable lattice at 5% of its
/// peak amplitude, i.e. 0.25% of its peak counts.
PhaseProfile reconstruct_phase(const std::vector<InterferenceMeasurement>& measurements,
                               const CoincidenceHistogram& amplitude);

/// max |phi(tau) - phi(-tau)| over masked lattice pairs.
double phase_asymmetry(const PhaseProfile& profile);

}  // namespace biphoton
