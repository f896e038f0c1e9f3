// fock.hpp — Probe states in a truncated photon-number basis and the
// phase-shift / phase-diffusion channels acting on them.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace phasediff::fock {

using Matrix = Eigen::MatrixXcd;

/// Raised when a probe needs more Fock levels than the configured cap, or
/// when a requested truncation retains too little state mass.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dephasing strength Δ = Γt (radians). Δ = 0 is noiseless.
struct NoiseLevel {
  double delta = 0.0;

  NoiseLevel() = default;
  explicit NoiseLevel(double d);
};

enum class ProbeKind { Coherent, SqueezedVacuum };

/// Probe family: coherent |α⟩ (N = |α|²) or squeezed vacuum S(r)|0⟩
/// (N = sinh²r). α is taken real ≥ 0 by default; the local-oscillator
/// phase carries the reference.
struct ProbeSpec {
  ProbeKind kind = ProbeKind::Coherent;
  std::complex<double> alpha{0.0, 0.0};  // Coherent only
  double squeezing = 0.0;                // SqueezedVacuum only, r >= 0

  static ProbeSpec coherent(std::complex<double> alpha);
  static ProbeSpec coherent_mean_photons(double n_mean);
  static ProbeSpec squeezed(double r);
  static ProbeSpec squeezed_mean_photons(double n_mean);

  /// N = |α|² or sinh²r.
  double mean_photon_number() const;
};

/// Truncated density matrix: elements(n, m) = ρ_{nm} in the basis
/// {|0⟩ … |dim-1⟩}. Hermitian, PSD, trace = retained mass.
struct FockStateMatrix {
  int dim = 0;
  Matrix elements;
};

inline constexpr int kDefaultTruncationCap = 4096;
inline constexpr double kDefaultTailTol = 1e-12;

/// Smallest n_max with probe mass above n_max below tail_tol.
/// Throws TruncationError when n_max would exceed hard_cap.
int choose_truncation(const ProbeSpec& probe, double tail_tol,
                      int hard_cap = kDefaultTruncationCap);

/// ρ = |α⟩⟨α| truncated to dim levels; diagonal is the Poisson
/// distribution with mean |α|², trace is the retained mass.
FockStateMatrix make_coherent(std::complex<double> alpha, int dim);

/// ρ = S(r)|0⟩⟨0|S†(r) truncated to dim levels; only even photon numbers
/// are populated. Throws TruncationError if retained mass < 1 - 1e-8.
FockStateMatrix make_squeezed_vacuum(double r, int dim);

/// ρ'_{nm} = e^{-iφ(n-m)} ρ_{nm}  (unitary U_φ = e^{-iφ a†a}).
FockStateMatrix apply_phase_shift(const FockStateMatrix& state, double phi);

/// ρ'_{nm} = e^{-Δ²(n-m)²} ρ_{nm}. Diagonal (and thus trace and energy)
/// untouched; commutes with apply_phase_shift.
FockStateMatrix apply_phase_diffusion(const FockStateMatrix& state,
                                      NoiseLevel noise);

double trace_real(const FockStateMatrix& state);
double purity(const FockStateMatrix& state);   // Tr[ρ²]
double mean_photon_number(const FockStateMatrix& state);  // Tr[ρ n̂]

}  // namespace phasediff::fock
