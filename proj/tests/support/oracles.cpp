#include "support/oracles.hpp"

#include "phasediff/metrology.hpp"
#include "phasediff/quadrature.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracles {

using phasediff::fock::FockStateMatrix;
using phasediff::fock::Matrix;
using phasediff::fock::NoiseLevel;
using phasediff::fock::ProbeSpec;

FockStateMatrix diffusion_by_quadrature(const FockStateMatrix& state,
                                        NoiseLevel noise, int nodes) {
  const auto rule = phasediff::quad::gauss_hermite(nodes);
  FockStateMatrix out;
  out.dim = state.dim;
  out.elements = Matrix::Zero(state.dim, state.dim);
  for (int j = 0; j < nodes; ++j) {
    const double beta = 2.0 * noise.delta * rule.nodes[j];
    const double w = rule.weights[j] / std::sqrt(std::numbers::pi);
    // U_β ρ U_β† applied entrywise: e^{-iβ(n-m)} ρ_{nm}
    for (int n = 0; n < state.dim; ++n)
      for (int m = 0; m < state.dim; ++m)
        out.elements(n, m) +=
            w * std::polar(1.0, -beta * (n - m)) * state.elements(n, m);
  }
  return out;
}

double uhlmann_fidelity(const Matrix& rho, const Matrix& sigma) {
  Eigen::SelfAdjointEigenSolver<Matrix> es_rho(rho);
  Eigen::VectorXd lam = es_rho.eigenvalues().cwiseMax(0.0);
  const Matrix sqrt_rho = es_rho.eigenvectors() *
                          lam.cwiseSqrt().asDiagonal() *
                          es_rho.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es_inner(sqrt_rho * sigma * sqrt_rho);
  const double tr =
      es_inner.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return tr * tr;
}

double qfi_by_fidelity(const ProbeSpec& probe, NoiseLevel noise, double step) {
  using namespace phasediff::fock;
  int n_max = choose_truncation(probe, kDefaultTailTol);
  if (probe.kind == ProbeKind::SqueezedVacuum) n_max *= 2;
  const int dim = n_max + 1;
  const FockStateMatrix base =
      probe.kind == ProbeKind::Coherent
          ? make_coherent(probe.alpha, dim)
          : make_squeezed_vacuum(probe.squeezing, dim);
  const FockStateMatrix diffused = apply_phase_diffusion(base, noise);
  const FockStateMatrix shifted = apply_phase_shift(diffused, step);
  const double fid = uhlmann_fidelity(diffused.elements, shifted.elements);
  return 8.0 * (1.0 - std::sqrt(fid)) / (step * step);
}

Eigen::VectorXd quadrature_wavefunctions(double x, int n_max) {
  // ⟨x|n⟩ = 2^{1/4} ψ_n(√2 x) with ψ_n the unit-variance oscillator
  // eigenfunctions: ψ_{n+1} = √(2/(n+1)) q ψ_n - √(n/(n+1)) ψ_{n-1}.
  const double q = std::numbers::sqrt2 * x;
  Eigen::VectorXd h(n_max + 1);
  h[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * q * q);
  if (n_max >= 1) h[1] = std::numbers::sqrt2 * q * h[0];
  for (int n = 1; n < n_max; ++n)
    h[n + 1] = std::sqrt(2.0 / (n + 1)) * q * h[n] -
               std::sqrt(double(n) / (n + 1)) * h[n - 1];
  return std::pow(2.0, 0.25) * h;
}

double homodyne_density_from_fock(double alpha, double delta, double phi,
                                  double x, int dim) {
  using namespace phasediff::fock;
  const FockStateMatrix rho = apply_phase_diffusion(
      apply_phase_shift(make_coherent(alpha, dim), phi), NoiseLevel(delta));
  const Eigen::VectorXd h = quadrature_wavefunctions(x, dim - 1);
  const std::complex<double> p = h.transpose() * rho.elements * h;
  return p.real();
}

double poisson_pmf(double n_mean, int n) {
  double w = std::exp(-n_mean);
  for (int k = 1; k <= n; ++k) w *= n_mean / k;
  return w;
}

double poisson_tail_above(double n_mean, int n_max) {
  double w = std::exp(-n_mean);
  double mass = w;
  for (int k = 1; k <= n_max; ++k) {
    w *= n_mean / k;
    mass += w;
  }
  return 1.0 - mass;
}

double squeezed_weight(double r, int k) {
  // |c_{2k}|² = (2k)!/(2^{2k} (k!)²) tanh^{2k}r / cosh r
  double w = 1.0 / std::cosh(r);
  const double t2 = std::tanh(r) * std::tanh(r);
  for (int j = 1; j <= k; ++j) w *= t2 * (2.0 * j - 1.0) / (2.0 * j);
  return w;
}

double squeezed_tail_above(double r, int n_max) {
  double mass = 0.0;
  for (int k = 0; 2 * k <= n_max; ++k) mass += squeezed_weight(r, k);
  return 1.0 - mass;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int nodes) {
  const auto rule = phasediff::quad::gauss_legendre(nodes, a, b);
  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) acc += rule.weights[j] * f(rule.nodes[j]);
  return acc;
}

}  // namespace oracles
