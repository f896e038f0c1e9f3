// bayes.hpp — Posterior P(φ|X) on a uniform grid over [0,π], its mean
// (the Bayesian estimator) and variance, under uniform or Jeffreys priors.

#pragma once

#include "phasediff/homodyne.hpp"

#include <Eigen/Dense>

#include <span>

namespace phasediff::bayes {

enum class PriorKind { Uniform, Jeffreys };

/// Prior density sampled on the G-node grid over [0,π], trapezoid-normalized.
struct Prior {
  PriorKind kind = PriorKind::Uniform;
  Eigen::VectorXd values;

  static Prior uniform(int grid_points);
};

/// Jeffreys prior p(φ) ∝ √F(φ) on the grid; zero allowed at the endpoints.
Prior jeffreys_prior(const homodyne::LikelihoodModel& model, int grid_points);

/// Discretized posterior. densities is trapezoid-normalized to 1;
/// log_weights keeps the raw log L(X|φ) + log prior per node.
struct PosteriorGrid {
  Eigen::VectorXd phis;
  Eigen::VectorXd log_weights;
  Eigen::VectorXd densities;
  int sample_count = 0;
  PriorKind prior_kind = PriorKind::Uniform;
};

/// Builds the posterior from homodyne data. Log-domain accumulation with
/// max-subtraction keeps it stable up to M ~ 1e5. An empty sample set
/// yields the prior-only grid.
PosteriorGrid posterior_from_samples(const homodyne::LikelihoodModel& model,
                                     std::span<const homodyne::HomodyneSample> samples,
                                     const Prior& prior, int grid_points);

struct EstimationResult {
  double phi_b = 0.0;     // posterior mean, rad
  double variance = 0.0;  // posterior variance, rad²
  int sample_count = 0;
  PriorKind prior_kind = PriorKind::Uniform;
};

/// Trapezoid-rule mean and central second moment of the grid.
EstimationResult estimate(const PosteriorGrid& grid);

}  // namespace phasediff::bayes
