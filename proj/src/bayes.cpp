#include "phasediff/bayes.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace phasediff::bayes {

namespace {

constexpr int kMinGridPoints = 64;

Eigen::VectorXd uniform_grid(int g) {
  return Eigen::VectorXd::LinSpaced(g, 0.0, std::numbers::pi);
}

// Trapezoid integral of nodal values on the uniform [0,π] grid.
double trapezoid(const Eigen::VectorXd& values) {
  const Eigen::Index g = values.size();
  const double h = std::numbers::pi / double(g - 1);
  return h * (values.sum() - 0.5 * (values[0] + values[g - 1]));
}

void require_grid(int g) {
  if (g < kMinGridPoints)
    throw std::invalid_argument("bayes: grid must have at least 64 nodes");
}

}  // namespace

Prior Prior::uniform(int grid_points) {
  require_grid(grid_points);
  Prior p;
  p.kind = PriorKind::Uniform;
  p.values = Eigen::VectorXd::Constant(grid_points, 1.0 / std::numbers::pi);
  return p;
}

Prior jeffreys_prior(const homodyne::LikelihoodModel& model, int grid_points) {
  require_grid(grid_points);
  Eigen::VectorXd f =
      homodyne::classical_fisher_grid(model, uniform_grid(grid_points));
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    if (f[i] < -1e-9)
      throw std::runtime_error("jeffreys_prior: negative Fisher information");
    f[i] = std::sqrt(std::max(f[i], 0.0));
  }
  Prior p;
  p.kind = PriorKind::Jeffreys;
  p.values = f / trapezoid(f);
  return p;
}

PosteriorGrid posterior_from_samples(const homodyne::LikelihoodModel& model,
                                     std::span<const homodyne::HomodyneSample> samples,
                                     const Prior& prior, int grid_points) {
  require_grid(grid_points);
  if (prior.values.size() != grid_points)
    throw std::invalid_argument("posterior_from_samples: prior grid size mismatch");

  PosteriorGrid grid;
  grid.phis = uniform_grid(grid_points);
  grid.sample_count = int(samples.size());
  grid.prior_kind = prior.kind;

  Eigen::VectorXd log_w(grid_points);
  if (samples.empty()) {
    log_w.setZero();  // unit likelihood: prior-only posterior
  } else {
    log_w = homodyne::log_likelihood_grid(model, samples, grid.phis);
  }
  for (Eigen::Index i = 0; i < log_w.size(); ++i)
    log_w[i] += prior.values[i] > 0.0
                    ? std::log(prior.values[i])
                    : -std::numeric_limits<double>::infinity();
  grid.log_weights = log_w;

  const double shift = log_w.maxCoeff();
  if (!std::isfinite(shift))
    throw std::runtime_error("posterior_from_samples: all node weights underflow");
  grid.densities = (log_w.array() - shift).exp();
  grid.densities /= trapezoid(grid.densities);
  return grid;
}

EstimationResult estimate(const PosteriorGrid& grid) {
  EstimationResult result;
  result.sample_count = grid.sample_count;
  result.prior_kind = grid.prior_kind;
  result.phi_b =
      trapezoid((grid.phis.array() * grid.densities.array()).matrix());
  result.variance = trapezoid(((grid.phis.array() - result.phi_b).square() *
                               grid.densities.array())
                                  .matrix());
  return result;
}

}  // namespace phasediff::bayes
