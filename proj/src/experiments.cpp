#include "phasediff/experiments.hpp"

#include "phasediff/metrology.hpp"
#include "phasediff/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace phasediff::experiments {

namespace {

homodyne::LikelihoodModel model_for(const RunConfig& cfg) {
  return homodyne::LikelihoodModel(std::sqrt(cfg.mean_photons),
                                   fock::NoiseLevel(cfg.delta), cfg.beta_nodes);
}

bayes::Prior prior_for(const RunConfig& cfg,
                       const homodyne::LikelihoodModel& model) {
  if (cfg.prior == bayes::PriorKind::Jeffreys)
    return bayes::jeffreys_prior(model, cfg.grid_points);
  return bayes::Prior::uniform(cfg.grid_points);
}

void validate(const RunConfig& cfg) {
  if (!(cfg.mean_photons >= 0.0))
    throw std::invalid_argument("RunConfig: mean_photons must be >= 0");
  if (cfg.repetitions < 1)
    throw std::invalid_argument("RunConfig: repetitions must be >= 1");
}

struct Moments {
  double mean = 0.0;
  double sem = 0.0;  // standard error of the mean
};

Moments moments_of(const std::vector<double>& v) {
  const double n = double(v.size());
  Moments m;
  for (double x : v) m.mean += x;
  m.mean /= n;
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - m.mean) * (x - m.mean);
    m.sem = std::sqrt(ss / (n - 1.0) / n);
  }
  return m;
}

double qfi_coherent(double n_mean, double delta) {
  return metrology::qfi(fock::ProbeSpec::coherent_mean_photons(n_mean),
                        fock::NoiseLevel(delta))
      .value;
}

std::string format_row(std::initializer_list<double> cols) {
  std::string row;
  char buf[40];
  bool first = true;
  for (double c : cols) {
    std::snprintf(buf, sizeof buf, "%.15g", c);
    if (!first) row += ',';
    row += buf;
    first = false;
  }
  return row;
}

}  // namespace

std::vector<RepetitionStats> run_repetitions(const RunConfig& cfg, int samples) {
  validate(cfg);
  if (samples < 1)
    throw std::invalid_argument("run_repetitions: samples must be >= 1");

  const homodyne::LikelihoodModel model = model_for(cfg);
  const bayes::Prior prior = prior_for(cfg, model);
  const int reps = cfg.repetitions;

  std::vector<RepetitionStats> stats(static_cast<size_t>(reps));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next.fetch_add(1); r < reps; r = next.fetch_add(1)) {
      rng::Generator gen(rng::derive_seed(cfg.master_seed, std::uint64_t(r)));
      const auto data = homodyne::sample_homodyne(model, cfg.true_phi, samples, gen);
      const auto grid =
          bayes::posterior_from_samples(model, data, prior, cfg.grid_points);
      const auto est = bayes::estimate(grid);
      stats[size_t(r)] = {est.phi_b, est.variance};
    }
  };

  unsigned n_threads = cfg.threads > 0 ? unsigned(cfg.threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, unsigned(reps));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return stats;
}

std::vector<CurvePoint> run_km_curve(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.sample_counts.empty())
    throw std::invalid_argument("run_km_curve: sample_counts must be nonempty");
  for (int m : cfg.sample_counts)
    if (m < 1) throw std::invalid_argument("run_km_curve: all M must be >= 1");

  const double h_alpha = qfi_coherent(cfg.mean_photons, cfg.delta);
  const auto probe_sq =
      fock::ProbeSpec::squeezed_mean_photons(cfg.mean_photons);
  const double h_gauss0 = metrology::analytic_qfi(probe_sq);
  const double h_gauss_diff =
      cfg.mean_photons > 0.0
          ? metrology::qfi(probe_sq, fock::NoiseLevel(cfg.delta)).value
          : 0.0;

  std::vector<CurvePoint> points;
  for (int m : cfg.sample_counts) {
    const auto stats = run_repetitions(cfg, m);
    std::vector<double> vars(stats.size());
    std::transform(stats.begin(), stats.end(), vars.begin(),
                   [](const RepetitionStats& s) { return s.variance; });
    const Moments mom = moments_of(vars);

    CurvePoint p;
    p.abscissa = double(m);
    p.value = double(m) * mom.mean * h_alpha;
    p.std_error = double(m) * mom.sem * h_alpha;
    p.cr_coherent = 1.0 / h_alpha;
    p.cr_gauss_noiseless = h_gauss0 > 0.0 ? 1.0 / h_gauss0 : 0.0;
    p.cr_gauss_diffused = h_gauss_diff > 0.0 ? 1.0 / h_gauss_diff : 0.0;
    points.push_back(p);
  }
  return points;
}

std::vector<CurvePoint> run_vm_sweep(const RunConfig& base, SweepKind kind,
                                     const std::vector<double>& grid,
                                     int samples_per_run) {
  if (grid.empty())
    throw std::invalid_argument("run_vm_sweep: sweep grid must be nonempty");

  std::vector<CurvePoint> points;
  for (double g : grid) {
    RunConfig cfg = base;
    if (kind == SweepKind::Delta)
      cfg.delta = g;
    else
      cfg.mean_photons = g;

    const auto stats = run_repetitions(cfg, samples_per_run);
    std::vector<double> vars(stats.size());
    std::transform(stats.begin(), stats.end(), vars.begin(),
                   [](const RepetitionStats& s) { return s.variance; });
    const Moments mom = moments_of(vars);

    const double h_alpha = qfi_coherent(cfg.mean_photons, cfg.delta);
    const auto probe_sq =
        fock::ProbeSpec::squeezed_mean_photons(cfg.mean_photons);
    const double h_gauss0 = metrology::analytic_qfi(probe_sq);
    const double h_gauss_diff =
        cfg.mean_photons > 0.0
            ? metrology::qfi(probe_sq, fock::NoiseLevel(cfg.delta)).value
            : 0.0;

    CurvePoint p;
    p.abscissa = g;
    p.value = double(samples_per_run) * mom.mean;
    p.std_error = double(samples_per_run) * mom.sem;
    p.cr_coherent = 1.0 / h_alpha;
    p.cr_gauss_noiseless = h_gauss0 > 0.0 ? 1.0 / h_gauss0 : 0.0;
    p.cr_gauss_diffused = h_gauss_diff > 0.0 ? 1.0 / h_gauss_diff : 0.0;
    points.push_back(p);
  }
  return points;
}

std::vector<std::string> summarize(std::vector<CurvePoint> points,
                                   CurveSchema schema) {
  if (points.empty()) throw std::invalid_argument("summarize: no points");
  std::sort(points.begin(), points.end(),
            [](const CurvePoint& a, const CurvePoint& b) {
              return a.abscissa < b.abscissa;
            });
  std::vector<std::string> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (schema == CurveSchema::KmCurve)
      rows.push_back(format_row({p.abscissa, p.value, p.std_error, 1.0}));
    else
      rows.push_back(format_row({p.abscissa, p.value, p.std_error,
                                 p.cr_coherent, p.cr_gauss_noiseless,
                                 p.cr_gauss_diffused}));
  }
  return rows;
}

std::string to_csv(const std::vector<CurvePoint>& points, CurveSchema schema) {
  std::string csv = schema == CurveSchema::KmCurve
                        ? "M,K_M,std_error,cr_ratio_floor\n"
                        : "abscissa,V_M,std_error,cr_coherent,"
                          "cr_gauss_noiseless,cr_gauss_diffused\n";
  for (const auto& row : summarize(points, schema)) {
    csv += row;
    csv += '\n';
  }
  return csv;
}

}  // namespace phasediff::experiments
