// metrology.hpp — Quantum Fisher information via the symmetric logarithmic
// derivative, analytic noiseless benchmarks, and Cramér-Rao bounds.

#pragma once

#include "phasediff/fock.hpp"

#include <optional>

namespace phasediff::metrology {

struct QfiResult {
  double value = 0.0;         // rad^-2
  double eigen_cutoff = 0.0;  // threshold applied to λ_i + λ_j
  int dim = 0;                // truncation used
  std::optional<fock::ProbeSpec> probe;
  std::optional<fock::NoiseLevel> noise;
};

/// (∂_φ ρ)_{nm} = -i (n-m) ρ_{nm}; Hermitian and traceless for valid ρ.
fock::Matrix phase_derivative(const fock::FockStateMatrix& state);

/// QFI from the SLD sum over the eigendecomposition of ρ:
///   H = 2 Σ_{λ_i+λ_j > ε} |⟨i|∂ρ|j⟩|² / (λ_i+λ_j),  ε = 1e-12 · Tr ρ.
/// Requires ρ Hermitian PSD and ∂ρ Hermitian, traceless to 1e-10.
QfiResult sld_qfi(const fock::FockStateMatrix& state,
                  const fock::Matrix& dstate);

/// Builds the probe, applies phase diffusion, evaluates sld_qfi. Truncation
/// from choose_truncation at 1e-12 tail; doubled for squeezed probes (the
/// QFI is more tail-sensitive than the trace).
QfiResult qfi(const fock::ProbeSpec& probe, fock::NoiseLevel noise);

/// Noiseless closed forms: 4N (coherent), 8N² + 8N (squeezed vacuum).
double analytic_qfi(const fock::ProbeSpec& probe);

/// Cramér-Rao variance bound 1/(M·H).
double cr_bound(double qfi_value, int m);

}  // namespace phasediff::metrology
