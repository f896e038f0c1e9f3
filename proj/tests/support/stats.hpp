// stats.hpp — test-side statistics: equal-mass binning from the model CDF
// and the chi-squared goodness-of-fit p-value.

#pragma once

#include "phasediff/homodyne.hpp"

#include <span>
#include <vector>

namespace teststats {

/// CDF of p(·|φ): closed-form mixture of Gaussian CDFs over the model's
/// β nodes.
double model_cdf(const phasediff::homodyne::LikelihoodModel& model, double phi,
                 double x);

/// Interior edges of `bins` equal-probability bins of p(·|φ)
/// (bins-1 values, increasing).
std::vector<double> equal_mass_edges(
    const phasediff::homodyne::LikelihoodModel& model, double phi, int bins);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 0.0;
};

/// Pearson χ² of observed draws against equal-mass bins of the model.
ChiSquareResult chi_square_gof(
    const phasediff::homodyne::LikelihoodModel& model, double phi,
    std::span<const phasediff::homodyne::HomodyneSample> draws, int bins);

}  // namespace teststats
