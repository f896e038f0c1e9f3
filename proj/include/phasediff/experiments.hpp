// experiments.hpp — Monte Carlo harness for the benchmark curves:
// K_M = M·Var[φ_B]·H_α against M, and V_M = M·Var[φ_B] swept over Δ or N,
// with Cramér-Rao reference columns.

#pragma once

#include "phasediff/bayes.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace phasediff::experiments {

struct RunConfig {
  double mean_photons = 1.0;            // coherent probe N
  double delta = 0.0;                   // dephasing Δ, rad
  double true_phi = 1.5707963267948966; // imposed shift, defaults to π/2
  std::vector<int> sample_counts;       // M values for the K_M curve
  int repetitions = 200;                // R
  std::uint64_t master_seed = 1;
  bayes::PriorKind prior = bayes::PriorKind::Uniform;
  int grid_points = 2001;
  int beta_nodes = homodyne::kDefaultBetaNodes;
  int threads = 0;                      // 0 = hardware concurrency
};

struct CurvePoint {
  double abscissa = 0.0;       // M, Δ, or N
  double value = 0.0;          // K_M or V_M
  double std_error = 0.0;
  double cr_coherent = 0.0;          // 1/H_α(N, Δ)
  double cr_gauss_noiseless = 0.0;   // 1/(8N²+8N)
  double cr_gauss_diffused = 0.0;    // 1/H_g(N, Δ), numerical SLD
};

struct RepetitionStats {
  double phi_b = 0.0;
  double variance = 0.0;
};

/// One posterior per repetition at fixed M; repetition r uses the stream
/// seeded by hash(master_seed, r). Repetitions run on cfg.threads workers
/// and are aggregated in repetition order, so results are reproducible.
std::vector<RepetitionStats> run_repetitions(const RunConfig& cfg, int samples);

/// K_M points across cfg.sample_counts, std_error from the repetition spread.
std::vector<CurvePoint> run_km_curve(const RunConfig& cfg);

enum class SweepKind { Delta, MeanPhotons };

/// V_M at fixed M across a Δ or N grid, with all three CR columns.
std::vector<CurvePoint> run_vm_sweep(const RunConfig& base, SweepKind kind,
                                     const std::vector<double>& grid,
                                     int samples_per_run = 100);

enum class CurveSchema { KmCurve, VmSweep };

/// Data rows (no header), sorted by abscissa, 15 significant digits.
std::vector<std::string> summarize(std::vector<CurvePoint> points,
                                   CurveSchema schema);

/// Full CSV: mandatory header row, '.' decimal point, '\n' line ends.
/// km_curve: M,K_M,std_error,cr_ratio_floor
/// vm_sweep: abscissa,V_M,std_error,cr_coherent,cr_gauss_noiseless,cr_gauss_diffused
std::string to_csv(const std::vector<CurvePoint>& points, CurveSchema schema);

}  // namespace phasediff::experiments
