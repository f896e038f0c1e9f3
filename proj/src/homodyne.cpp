#include "phasediff/homodyne.hpp"

#include "phasediff/quadrature.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phasediff::homodyne {

namespace {

constexpr double kFisherStep = 1e-4;    // rad, central difference
constexpr int kFisherXNodes = 400;

const double kGaussNorm = std::sqrt(2.0 / std::numbers::pi);  // peak of N(·,1/4)

// Mixture density without the √(2/π) prefactor.
double mixture_sum(const LikelihoodModel& model, double x, double phi) {
  const auto& beta = model.beta_nodes();
  const auto& w = model.beta_weights();
  const double a = model.alpha_mag();
  double acc = 0.0;
  for (int i = 0; i < beta.size(); ++i) {
    const double d = x - a * std::cos(beta[i] + phi);
    acc += w[i] * std::exp(-2.0 * d * d);
  }
  return acc;
}

void require_phi_range(double phi) {
  if (!(phi >= 0.0 && phi <= std::numbers::pi))
    throw std::invalid_argument("likelihood: phi must lie in [0, pi]");
}

}  // namespace

LikelihoodModel::LikelihoodModel(double alpha_mag, fock::NoiseLevel noise,
                                 int beta_nodes)
    : alpha_mag_(alpha_mag), noise_(noise) {
  if (!(alpha_mag >= 0.0) || !std::isfinite(alpha_mag))
    throw std::invalid_argument("LikelihoodModel: |alpha| must be finite and >= 0");
  if (beta_nodes < 1)
    throw std::invalid_argument("LikelihoodModel: need at least one beta node");
  if (noise.delta == 0.0) {
    // degenerate mixture: a single Gaussian
    beta_ = Eigen::VectorXd::Zero(1);
    weights_ = Eigen::VectorXd::Ones(1);
    return;
  }
  const quad::Rule rule = quad::gauss_hermite(beta_nodes);
  beta_ = 2.0 * noise.delta * rule.nodes;           // β = 2Δu
  weights_ = rule.weights / std::sqrt(std::numbers::pi);
}

double likelihood_point(const LikelihoodModel& model, double x, double phi) {
  require_phi_range(phi);
  const double p = kGaussNorm * mixture_sum(model, x, phi);
  return p > 0.0 ? p : DBL_MIN;
}

double log_likelihood_point(const LikelihoodModel& model, double x, double phi) {
  require_phi_range(phi);
  const auto& beta = model.beta_nodes();
  const auto& w = model.beta_weights();
  const double a = model.alpha_mag();
  // shift by the largest exponent before summing
  double emax = -HUGE_VAL;
  Eigen::VectorXd expo(beta.size());
  for (int i = 0; i < beta.size(); ++i) {
    const double d = x - a * std::cos(beta[i] + phi);
    expo[i] = -2.0 * d * d;
    emax = std::max(emax, expo[i]);
  }
  double acc = 0.0;
  for (int i = 0; i < beta.size(); ++i) acc += w[i] * std::exp(expo[i] - emax);
  return std::log(kGaussNorm) + emax + std::log(acc);
}

double log_likelihood_set(const LikelihoodModel& model,
                          std::span<const HomodyneSample> samples, double phi) {
  if (samples.empty())
    throw std::invalid_argument("log_likelihood_set: empty sample set");
  double acc = 0.0;
  for (const auto& s : samples) acc += log_likelihood_point(model, s.x, phi);
  return acc;
}

Eigen::VectorXd log_likelihood_grid(const LikelihoodModel& model,
                                    std::span<const HomodyneSample> samples,
                                    const Eigen::VectorXd& phis) {
  const auto& beta = model.beta_nodes();
  const auto& w = model.beta_weights();
  const double a = model.alpha_mag();
  const Eigen::Index m = Eigen::Index(samples.size());

  Eigen::ArrayXd xs(m);
  for (Eigen::Index k = 0; k < m; ++k) xs[k] = samples[size_t(k)].x;

  const double log_norm = std::log(kGaussNorm);
  Eigen::VectorXd out(phis.size());
  Eigen::ArrayXd acc(m);
  for (Eigen::Index g = 0; g < phis.size(); ++g) {
    acc.setZero();
    for (Eigen::Index i = 0; i < beta.size(); ++i) {
      const double mu = a * std::cos(beta[i] + phis[g]);
      acc += w[i] * (-2.0 * (xs - mu).square()).exp();
    }
    out[g] = acc.max(DBL_MIN).log().sum() + double(m) * log_norm;
  }
  return out;
}

std::vector<HomodyneSample> sample_homodyne(const LikelihoodModel& model,
                                            double true_phi, int m,
                                            rng::Generator& gen) {
  if (m < 1) throw std::invalid_argument("sample_homodyne: m must be >= 1");
  const double a = model.alpha_mag();
  const double beta_sd = std::numbers::sqrt2 * model.noise().delta;
  std::vector<HomodyneSample> out;
  out.reserve(size_t(m));
  for (int k = 0; k < m; ++k) {
    const auto [z1, z2] = gen.normal_pair();
    const double beta = beta_sd * z1;
    out.push_back({a * std::cos(true_phi + beta) + 0.5 * z2, 0.0});
  }
  return out;
}

namespace {

// Mixture sum over an array of x values for one phase; the √(2/π) prefactor
// cancels in ∂_φ log p and scales p linearly, so it is applied by callers.
Eigen::ArrayXd mixture_sum_array(const LikelihoodModel& model,
                                 const Eigen::ArrayXd& xs, double phi) {
  const auto& beta = model.beta_nodes();
  const auto& w = model.beta_weights();
  const double a = model.alpha_mag();
  Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(xs.size());
  for (Eigen::Index i = 0; i < beta.size(); ++i) {
    const double mu = a * std::cos(beta[i] + phi);
    acc += w[i] * (-2.0 * (xs - mu).square()).exp();
  }
  return acc;
}

double fisher_at(const LikelihoodModel& model, double phi, const quad::Rule& xr,
                 const Eigen::ArrayXd& xs) {
  const Eigen::ArrayXd p0 = mixture_sum_array(model, xs, phi);
  const Eigen::ArrayXd pp = mixture_sum_array(model, xs, phi + kFisherStep);
  const Eigen::ArrayXd pm = mixture_sum_array(model, xs, phi - kFisherStep);
  const Eigen::ArrayXd dlog = (pp.log() - pm.log()) / (2.0 * kFisherStep);
  if (!dlog.isFinite().all())
    throw std::runtime_error("classical_fisher: non-finite integrand");
  return (xr.weights.array() * kGaussNorm * p0 * dlog.square()).sum();
}

}  // namespace

double classical_fisher(const LikelihoodModel& model, double phi) {
  if (!(phi > 0.0 && phi < std::numbers::pi))
    throw std::invalid_argument("classical_fisher: phi must lie in (0, pi)");
  const double a = model.alpha_mag();
  const quad::Rule xr = quad::gauss_legendre(kFisherXNodes, -a - 4.0, a + 4.0);
  return fisher_at(model, phi, xr, xr.nodes.array());
}

Eigen::VectorXd classical_fisher_grid(const LikelihoodModel& model,
                                      const Eigen::VectorXd& phis) {
  const double a = model.alpha_mag();
  const quad::Rule xr = quad::gauss_legendre(kFisherXNodes, -a - 4.0, a + 4.0);
  const Eigen::ArrayXd xs = xr.nodes.array();
  Eigen::VectorXd out(phis.size());
  for (Eigen::Index g = 0; g < phis.size(); ++g)
    out[g] = fisher_at(model, phis[g], xr, xs);
  return out;
}

}  // namespace phasediff::homodyne
