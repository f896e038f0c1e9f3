// oracles.hpp — independent numerical routes used to check the library:
// quadrature form of the diffusion channel, Bures-fidelity QFI, Fock-basis
// homodyne density, and closed-form photon statistics. Everything here
// deliberately avoids the implementation paths it validates.

#pragma once

#include "phasediff/fock.hpp"
#include "phasediff/homodyne.hpp"

#include <Eigen/Dense>

#include <vector>

namespace oracles {

/// Eq.-(1)-style channel: numerically integrates ∫ g(β|Δ) U_β ρ U_β† dβ
/// with Var[β] = 2Δ² by Gauss–Hermite quadrature (β = 2Δu substitution).
/// 160 nodes keep the worst oscillation ω = 2Δ(n-m) resolved for Δ ≤ π/6
/// at n_max ≲ 30.
phasediff::fock::FockStateMatrix diffusion_by_quadrature(
    const phasediff::fock::FockStateMatrix& state,
    phasediff::fock::NoiseLevel noise, int nodes = 160);

/// Uhlmann fidelity F(ρ,σ) = (Tr √(√ρ σ √ρ))².
double uhlmann_fidelity(const phasediff::fock::Matrix& rho,
                        const phasediff::fock::Matrix& sigma);

/// QFI from the Bures metric: H ≈ 8 (1 - √F(ρ_φ, ρ_{φ+δ})) / δ².
double qfi_by_fidelity(const phasediff::fock::ProbeSpec& probe,
                       phasediff::fock::NoiseLevel noise, double step = 1e-3);

/// Quadrature wavefunctions ⟨x|n⟩ for n = 0…n_max in the vacuum-variance-1/4
/// convention (normalized-Hermite recurrence).
Eigen::VectorXd quadrature_wavefunctions(double x, int n_max);

/// p(x|φ) computed in the Fock basis: ⟨x| N_Δ(U_φ |α⟩⟨α| U_φ†) |x⟩.
double homodyne_density_from_fock(double alpha, double delta, double phi,
                                  double x, int dim);

/// Poisson photon statistics of a coherent probe.
double poisson_pmf(double n_mean, int n);
double poisson_tail_above(double n_mean, int n_max);

/// |⟨2k|S(r)|0⟩|² of the squeezed vacuum, and the mass above an even cutoff.
double squeezed_weight(double r, int k);
double squeezed_tail_above(double r, int n_max);

/// ∫ f(x) w(x) dx on [a,b] by Gauss–Legendre (independent integration for
/// moment checks).
double integrate(const std::function<double(double)>& f, double a, double b,
                 int nodes = 600);

}  // namespace oracles
