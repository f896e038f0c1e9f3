// quadrature.hpp — Gauss–Hermite and Gauss–Legendre rules via Golub–Welsch

#pragma once

#include <Eigen/Dense>

namespace phasediff::quad {

struct Rule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss–Hermite rule for ∫ f(u) e^{-u²} du over the real line
/// (physicists' weight). Weights sum to √π.
Rule gauss_hermite(int n);

/// n-point Gauss–Legendre rule for ∫_a^b f(x) dx.
Rule gauss_legendre(int n, double a, double b);

}  // namespace phasediff::quad
