// homodyne.hpp — Homodyne outcome distribution p(x|φ) for phase-diffused
// coherent probes, synthetic sampling, and the classical Fisher information.
//
// Conventions: quadrature with vacuum variance 1/4, so x | (φ, β) is
// Normal(α cos(φ+β), 1/4) with β ~ Normal(0, 2Δ²). The local-oscillator
// offset θ = arg α + π/2 is absorbed into the definition of φ, which makes
// φ = π/2 the most sensitive point.

#pragma once

#include "phasediff/fock.hpp"
#include "phasediff/rng.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace phasediff::homodyne {

/// One quadrature outcome; theta is the recorded LO phase of the data set
/// (constant across a sample, 0 in the absorbed-offset convention).
struct HomodyneSample {
  double x = 0.0;
  double theta = 0.0;
};

inline constexpr int kDefaultBetaNodes = 128;

/// Evaluable p(x|φ): the Eq-style Gaussian phase average discretized on a
/// Gauss–Hermite rule, i.e. a fixed mixture of variance-1/4 Gaussians with
/// means α cos(φ + β_i). Immutable and shareable after construction.
class LikelihoodModel {
 public:
  LikelihoodModel(double alpha_mag, fock::NoiseLevel noise,
                  int beta_nodes = kDefaultBetaNodes);

  double alpha_mag() const { return alpha_mag_; }
  fock::NoiseLevel noise() const { return noise_; }

  /// β values of the mixture nodes (2Δ·u_i) and their probability weights
  /// (normalized to sum to 1).
  const Eigen::VectorXd& beta_nodes() const { return beta_; }
  const Eigen::VectorXd& beta_weights() const { return weights_; }

 private:
  double alpha_mag_;
  fock::NoiseLevel noise_;
  Eigen::VectorXd beta_;
  Eigen::VectorXd weights_;
};

/// p(x|φ) > 0; underflow is clamped to the smallest positive double.
double likelihood_point(const LikelihoodModel& model, double x, double phi);

/// log p(x|φ), evaluated with a max-shift so it stays finite.
double log_likelihood_point(const LikelihoodModel& model, double x, double phi);

/// Σ_k log p(x_k|φ). Throws on an empty sample set.
double log_likelihood_set(const LikelihoodModel& model,
                          std::span<const HomodyneSample> samples, double phi);

/// Σ_k log p(x_k|φ_g) for every grid node φ_g at once (the posterior hot
/// path; vectorized over the sample axis).
Eigen::VectorXd log_likelihood_grid(const LikelihoodModel& model,
                                    std::span<const HomodyneSample> samples,
                                    const Eigen::VectorXd& phis);

/// Draws m samples of the generative model: β ~ Normal(0, 2Δ²), then
/// x ~ Normal(α cos(true_phi + β), 1/4). Deterministic for a fixed seed.
std::vector<HomodyneSample> sample_homodyne(const LikelihoodModel& model,
                                            double true_phi, int m,
                                            rng::Generator& gen);

/// F(φ) = ∫ dx p(x|φ) [∂_φ log p(x|φ)]² on φ ∈ (0, π).
/// 400-node Gauss–Legendre in x over [-α-4, α+4]; ∂_φ log p by central
/// differences with step 1e-4 rad.
double classical_fisher(const LikelihoodModel& model, double phi);

/// F evaluated at every node of `phis` with one shared x-rule. Endpoints are
/// admitted (the density is entire in φ), which the Jeffreys prior needs.
Eigen::VectorXd classical_fisher_grid(const LikelihoodModel& model,
                                      const Eigen::VectorXd& phis);

}  // namespace phasediff::homodyne
