#include "phasediff/metrology.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace phasediff::metrology {

namespace {

using fock::Matrix;

constexpr double kHermitianTol = 1e-10;
constexpr double kEigenCutoffScale = 1e-12;

// Core SLD sum on raw matrices; callers may pass a parity-compressed block
// as long as ∂ρ was formed with the physical photon numbers.
QfiResult sld_qfi_impl(const Matrix& rho, const Matrix& drho, int reported_dim) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("sld_qfi: eigendecomposition failed");

  const Eigen::VectorXd lam = solver.eigenvalues();
  const double cutoff = kEigenCutoffScale * rho.trace().real();

  // ⟨i|∂ρ|j⟩ in the eigenbasis
  const Matrix a = solver.eigenvectors().adjoint() * drho * solver.eigenvectors();

  double h = 0.0;
  bool any_term = false;
  const int n = int(lam.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double s = lam[i] + lam[j];
      if (s > cutoff) {
        any_term = true;
        h += 2.0 * std::norm(a(i, j)) / s;
      }
    }
  if (!any_term)
    throw std::runtime_error("sld_qfi: all eigenvalue pairs below cutoff (degenerate state)");

  QfiResult result;
  result.value = h;
  result.eigen_cutoff = cutoff;
  result.dim = reported_dim;
  return result;
}

}  // namespace

Matrix phase_derivative(const fock::FockStateMatrix& state) {
  Matrix d(state.dim, state.dim);
  const std::complex<double> minus_i{0.0, -1.0};
  for (int n = 0; n < state.dim; ++n)
    for (int m = 0; m < state.dim; ++m)
      d(n, m) = minus_i * double(n - m) * state.elements(n, m);
  return d;
}

QfiResult sld_qfi(const fock::FockStateMatrix& state, const Matrix& dstate) {
  const Matrix& rho = state.elements;
  if (rho.rows() != rho.cols() || dstate.rows() != dstate.cols() ||
      rho.rows() != dstate.rows())
    throw std::invalid_argument("sld_qfi: matrix shape mismatch");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw std::invalid_argument("sld_qfi: state is not Hermitian");
  if ((dstate - dstate.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw std::invalid_argument("sld_qfi: dstate is not Hermitian");
  if (std::abs(dstate.trace()) > kHermitianTol)
    throw std::invalid_argument("sld_qfi: dstate is not traceless");
  return sld_qfi_impl(rho, dstate, state.dim);
}

QfiResult qfi(const fock::ProbeSpec& probe, fock::NoiseLevel noise) {
  int n_max = fock::choose_truncation(probe, fock::kDefaultTailTol);

  QfiResult result;
  if (probe.kind == fock::ProbeKind::Coherent) {
    const int dim = n_max + 1;
    auto state = fock::apply_phase_diffusion(fock::make_coherent(probe.alpha, dim), noise);
    result = sld_qfi_impl(state.elements, phase_derivative(state), dim);
  } else {
    n_max *= 2;
    const int dim = n_max + 1;
    auto state = fock::apply_phase_diffusion(
        fock::make_squeezed_vacuum(probe.squeezing, dim), noise);
    const Matrix drho = phase_derivative(state);
    // Odd photon numbers are exactly unpopulated and stay so under both
    // channels; the SLD spectrum lives entirely in the even block.
    const int n_even = n_max / 2 + 1;
    Matrix rho_even(n_even, n_even), drho_even(n_even, n_even);
    for (int i = 0; i < n_even; ++i)
      for (int j = 0; j < n_even; ++j) {
        rho_even(i, j) = state.elements(2 * i, 2 * j);
        drho_even(i, j) = drho(2 * i, 2 * j);
      }
    result = sld_qfi_impl(rho_even, drho_even, dim);
  }
  result.probe = probe;
  result.noise = noise;
  return result;
}

double analytic_qfi(const fock::ProbeSpec& probe) {
  const double n = probe.mean_photon_number();
  if (probe.kind == fock::ProbeKind::Coherent) return 4.0 * n;
  return 8.0 * n * n + 8.0 * n;
}

double cr_bound(double qfi_value, int m) {
  if (!(qfi_value > 0.0))
    throw std::invalid_argument("cr_bound: QFI must be positive");
  if (m < 1) throw std::invalid_argument("cr_bound: M must be >= 1");
  return 1.0 / (double(m) * qfi_value);
}

}  // namespace phasediff::metrology
