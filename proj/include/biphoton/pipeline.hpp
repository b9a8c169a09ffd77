#pragma once

#include <string>
#include <vector>

#include "biphoton/config.hpp"
#include "biphoton/core.hpp"
#include "biphoton/fit.hpp"
#include "biphoton/interferometer.hpp"

namespace biphoton {

/// In-memory results of the simulation pipeline (shared by several runs).
struct SimulationProducts {
  TemporalWavefunction psi;
  SymmetrizedPair pair;
  CoincidenceHistogram c_plus;
  CoincidenceHistogram c_minus;
};

/// Spectral amplitude -> temporal wavefunction -> symmetrized histograms.
SimulationProducts simulate_pair(const RunConfig& cfg);

/// Writes psi.csv and counts.csv into cfg.output_dir.
SimulationProducts run_simulate(const RunConfig& cfg);

/// Fits both symmetrizations to a measured histogram file and writes
/// fit_report.txt.  The data bins must match cfg.detection.bin_dt and align
/// with the model bin centres.
FitReport run_fit(const RunConfig& cfg, const std::string& data_path, bool poisson_weighted = false);

struct TomographyProducts {
  CoincidenceHistogram amplitude;
  std::vector<InterferenceMeasurement> measurements;
  PhaseProfile profile;
  double max_asymmetry = 0.0;
};

/// Runs the twelve-setting interference battery at the standard delays
/// (1.0 ns and 5.8 ns), reconstructs the biphoton phase, and writes
/// amplitude.csv, one histogram per setting, phase.csv, and
/// symmetry_report.txt.  `zero_phase` replaces psi_plus by its modulus first
/// (a synthetic flat-phase input for validating the reconstruction).
///
/// When cfg.grid is the default, tomography refines it (n = 65536,
/// span = 2*pi * 1 GHz) so the 1 ns battery delay lands on exact temporal
/// samples; an explicitly configured grid is honoured as given.
TomographyProducts run_tomography(const RunConfig& cfg, bool zero_phase = false);

/// Re-runs the simulation for each parameter value and writes counts_<i>.csv
/// per value plus summary.csv.  `parameter` is one of optical_depth,
/// omega_c_rabi, delta_p.  A config whose wavenumber mismatch equals the
/// detuning-derived value keeps it derived across the sweep.
void run_sweep(const RunConfig& cfg, const std::string& parameter, const std::vector<double>& values);

/// Full width at half maximum of the histogram peak [s], by linear
/// interpolation of the half-height crossings around the global maximum.
double histogram_fwhm(const CoincidenceHistogram& hist);

/// Number of strict local minima with counts below `rel_floor` * max(counts)
/// at bin centres with window_lo < |tau| < window_hi.
std::size_t oscillation_minima_count(const CoincidenceHistogram& hist, double window_lo = 50e-9,
                                     double window_hi = 200e-9, double rel_floor = 0.05);

}  // namespace biphoton
