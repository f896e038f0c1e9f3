#include "phasediff/fock.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace phasediff::fock {

namespace {

void require_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("fock: dim must be >= 1");
}

// Amplitudes ⟨n|α⟩ = e^{-|α|²/2} αⁿ/√(n!), built by the stable ratio
// c_{n+1} = c_n α/√(n+1).
Eigen::VectorXcd coherent_amplitudes(std::complex<double> alpha, int dim) {
  Eigen::VectorXcd c(dim);
  const double n_mean = std::norm(alpha);
  c[0] = std::exp(-0.5 * n_mean);
  for (int n = 1; n < dim; ++n) c[n] = c[n - 1] * alpha / std::sqrt(double(n));
  return c;
}

// Squeezed vacuum: c_0 = 1/√cosh r, c_{2k} = c_{2k-2}(-tanh r)√((2k-1)/(2k)),
// odd amplitudes exactly zero.
Eigen::VectorXcd squeezed_amplitudes(double r, int dim) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
  c[0] = 1.0 / std::sqrt(std::cosh(r));
  const double t = -std::tanh(r);
  for (int k = 1; 2 * k < dim; ++k)
    c[2 * k] = c[2 * k - 2] * t * std::sqrt((2.0 * k - 1.0) / (2.0 * k));
  return c;
}

}  // namespace

NoiseLevel::NoiseLevel(double d) : delta(d) {
  if (!(d >= 0.0) || !std::isfinite(d))
    throw std::invalid_argument("NoiseLevel: delta must be finite and >= 0");
}

ProbeSpec ProbeSpec::coherent(std::complex<double> alpha) {
  ProbeSpec p;
  p.kind = ProbeKind::Coherent;
  p.alpha = alpha;
  return p;
}

ProbeSpec ProbeSpec::coherent_mean_photons(double n_mean) {
  if (!(n_mean >= 0.0))
    throw std::invalid_argument("ProbeSpec: mean photon number must be >= 0");
  return coherent(std::sqrt(n_mean));
}

ProbeSpec ProbeSpec::squeezed(double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("ProbeSpec: squeezing r must be >= 0");
  ProbeSpec p;
  p.kind = ProbeKind::SqueezedVacuum;
  p.squeezing = r;
  return p;
}

ProbeSpec ProbeSpec::squeezed_mean_photons(double n_mean) {
  if (!(n_mean >= 0.0))
    throw std::invalid_argument("ProbeSpec: mean photon number must be >= 0");
  return squeezed(std::asinh(std::sqrt(n_mean)));
}

double ProbeSpec::mean_photon_number() const {
  if (kind == ProbeKind::Coherent) return std::norm(alpha);
  const double s = std::sinh(squeezing);
  return s * s;
}

int choose_truncation(const ProbeSpec& probe, double tail_tol, int hard_cap) {
  if (!(tail_tol > 0.0 && tail_tol < 1.0))
    throw std::invalid_argument("choose_truncation: tail_tol must be in (0,1)");

  if (probe.kind == ProbeKind::Coherent) {
    const double n_mean = probe.mean_photon_number();
    double pmf = std::exp(-n_mean);  // Poisson weight at n = 0
    double mass = pmf;
    int n = 0;
    while (1.0 - mass >= tail_tol) {
      ++n;
      if (n > hard_cap)
        throw TruncationError("choose_truncation: coherent probe needs more than " +
                              std::to_string(hard_cap) + " Fock levels");
      pmf *= n_mean / n;
      mass += pmf;
    }
    return n;
  }

  // Squeezed vacuum: even weights |c_{2k}|², ratio tanh²r (2k-1)/(2k).
  const double t2 = std::tanh(probe.squeezing) * std::tanh(probe.squeezing);
  double w = 1.0 / std::cosh(probe.squeezing);  // |c_0|²
  double mass = w;
  int n = 0;
  while (1.0 - mass >= tail_tol) {
    n += 2;
    if (n > hard_cap)
      throw TruncationError("choose_truncation: squeezed probe needs more than " +
                            std::to_string(hard_cap) + " Fock levels");
    const int k = n / 2;
    w *= t2 * (2.0 * k - 1.0) / (2.0 * k);
    mass += w;
  }
  return n;
}

FockStateMatrix make_coherent(std::complex<double> alpha, int dim) {
  require_dim(dim);
  const Eigen::VectorXcd c = coherent_amplitudes(alpha, dim);
  FockStateMatrix state;
  state.dim = dim;
  state.elements = c * c.adjoint();
  return state;
}

FockStateMatrix make_squeezed_vacuum(double r, int dim) {
  require_dim(dim);
  if (!(r >= 0.0))
    throw std::invalid_argument("make_squeezed_vacuum: r must be >= 0");
  const Eigen::VectorXcd c = squeezed_amplitudes(r, dim);
  const double mass = c.squaredNorm();
  if (mass < 1.0 - 1e-8)
    throw TruncationError("make_squeezed_vacuum: retained mass " +
                          std::to_string(mass) + " < 1 - 1e-8; increase dim");
  FockStateMatrix state;
  state.dim = dim;
  state.elements = c * c.adjoint();
  return state;
}

FockStateMatrix apply_phase_shift(const FockStateMatrix& state, double phi) {
  if (!std::isfinite(phi))
    throw std::invalid_argument("apply_phase_shift: phi must be finite");
  FockStateMatrix out;
  out.dim = state.dim;
  out.elements.resize(state.dim, state.dim);
  for (int n = 0; n < state.dim; ++n)
    for (int m = 0; m < state.dim; ++m)
      out.elements(n, m) =
          std::polar(1.0, -phi * (n - m)) * state.elements(n, m);
  return out;
}

FockStateMatrix apply_phase_diffusion(const FockStateMatrix& state,
                                      NoiseLevel noise) {
  const double d2 = noise.delta * noise.delta;
  FockStateMatrix out;
  out.dim = state.dim;
  out.elements.resize(state.dim, state.dim);
  for (int n = 0; n < state.dim; ++n)
    for (int m = 0; m < state.dim; ++m) {
      const double k = double(n - m);
      out.elements(n, m) = std::exp(-d2 * k * k) * state.elements(n, m);
    }
  return out;
}

double trace_real(const FockStateMatrix& state) {
  return state.elements.trace().real();
}

double purity(const FockStateMatrix& state) {
  // Tr[ρ²] = Σ |ρ_{nm}|² for Hermitian ρ
  return state.elements.squaredNorm();
}

double mean_photon_number(const FockStateMatrix& state) {
  double acc = 0.0;
  for (int n = 0; n < state.dim; ++n) acc += n * state.elements(n, n).real();
  return acc;
}

}  // namespace phasediff::fock
