#include "phasediff/cli.hpp"

#include "phasediff/experiments.hpp"
#include "phasediff/metrology.hpp"
#include "phasediff/sample_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace phasediff::cli {

namespace {

using nlohmann::json;

double parse_number(const std::string& text) {
  size_t consumed = 0;
  const double value = std::stod(text, &consumed);
  if (consumed != text.size())
    throw std::invalid_argument("trailing characters in number '" + text + "'");
  return value;
}

struct AngleFlag {
  std::string text;
  double value = 0.0;
  void set(const std::string& t) {
    text = t;
    value = parse_angle(t);
  }
};

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void emit(const json& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << doc.dump() << "\n";
  else
    write_text(out_path, doc.dump() + "\n");
}

fock::ProbeSpec make_probe(const std::string& kind, double n_mean) {
  if (kind == "coherent") return fock::ProbeSpec::coherent_mean_photons(n_mean);
  if (kind == "sqvac") return fock::ProbeSpec::squeezed_mean_photons(n_mean);
  throw std::invalid_argument("unknown probe kind '" + kind + "'");
}

const char* prior_name(bayes::PriorKind kind) {
  return kind == bayes::PriorKind::Jeffreys ? "jeffreys" : "uniform";
}

// Fig. 3 caption pairs and Fig. 4 sweep grids.
struct Fig3Pair {
  double n_mean;
  double delta;
  const char* file;
};
constexpr Fig3Pair kFig3Pairs[] = {
    {0.90, std::numbers::pi / 18, "km_n0.90_dpi18.csv"},
    {0.90, std::numbers::pi / 9, "km_n0.90_dpi9.csv"},
    {4.12, std::numbers::pi / 18, "km_n4.12_dpi18.csv"},
    {4.12, std::numbers::pi / 9, "km_n4.12_dpi9.csv"},
};
const std::vector<int> kFig3SampleCounts = {10, 30, 100, 300};
const std::vector<double> kFig4DeltaGrid = {
    std::numbers::pi / 36, std::numbers::pi / 18, std::numbers::pi / 12,
    std::numbers::pi / 9, std::numbers::pi / 6};
const std::vector<double> kFig4NGrid = {0.90, 2.0, 4.12, 8.0, 14.11};

}  // namespace

double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty angle");

  double sign = 1.0;
  if (s[0] == '+' || s[0] == '-') {
    if (s[0] == '-') sign = -1.0;
    s.erase(0, 1);
  }

  const size_t pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return sign * parse_number(s);

  double factor = 1.0;
  if (pi_pos > 0) {
    std::string head = s.substr(0, pi_pos);
    if (head.back() == '*') head.pop_back();
    if (head.empty()) throw std::invalid_argument("bad angle '" + text + "'");
    factor = parse_number(head);
  }
  double divisor = 1.0;
  const std::string tail = s.substr(pi_pos + 2);
  if (!tail.empty()) {
    if (tail[0] != '/' || tail.size() == 1)
      throw std::invalid_argument("bad angle '" + text + "'");
    divisor = parse_number(tail.substr(1));
    if (divisor == 0.0) throw std::invalid_argument("division by zero in angle");
  }
  return sign * factor * std::numbers::pi / divisor;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"phase estimation under phase diffusion"};
  app.require_subcommand(1);

  // shared flag state
  std::string probe_kind = "coherent";
  double n_mean = 1.0;
  AngleFlag delta;
  AngleFlag true_phi;
  true_phi.value = std::numbers::pi / 2;
  int samples = 100;
  int reps = 200;
  std::uint64_t seed = 1;
  std::string prior_text = "uniform";
  int grid_points = 2001;
  std::string out_path;
  bool as_json = false;

  auto add_common = [&](CLI::App* cmd, bool with_model) {
    cmd->add_option("--seed", seed, "master RNG seed");
    cmd->add_option("--out", out_path, "output path");
    cmd->add_flag("--json", as_json, "JSON output");
    if (with_model) {
      cmd->add_option("--n", n_mean, "mean photon number N")
          ->check(CLI::NonNegativeNumber);
      cmd->add_option_function<std::string>(
          "--delta", [&](const std::string& t) { delta.set(t); },
          "dephasing Delta in radians (pi literals accepted)");
    }
    cmd->add_option("--grid", grid_points, "posterior grid nodes")
        ->check(CLI::Range(64, 1 << 20));
    cmd->add_option("--prior", prior_text, "prior: uniform | jeffreys")
        ->check(CLI::IsMember({"uniform", "jeffreys"}));
    cmd->add_option("--reps", reps, "Monte Carlo repetitions R")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* qfi_cmd = app.add_subcommand("qfi", "quantum Fisher information of a probe");
  add_common(qfi_cmd, true);
  qfi_cmd->add_option("--probe", probe_kind, "probe: coherent | sqvac")
      ->check(CLI::IsMember({"coherent", "sqvac"}));

  CLI::App* sim_cmd = app.add_subcommand("simulate", "draw synthetic homodyne samples");
  add_common(sim_cmd, true);
  sim_cmd->add_option("--samples", samples, "number of samples M")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option_function<std::string>(
      "--true-phi", [&](const std::string& t) { true_phi.set(t); },
      "imposed phase shift (default pi/2)");

  CLI::App* est_cmd = app.add_subcommand("estimate", "Bayesian estimate from a sample file");
  add_common(est_cmd, true);
  std::string input_path;
  est_cmd->add_option("input", input_path, "sample file")->required();

  CLI::App* fig3_cmd = app.add_subcommand("fig3", "K_M curves for the four (N, Delta) pairs");
  add_common(fig3_cmd, false);

  CLI::App* fig4d_cmd = app.add_subcommand("fig4-delta", "V_100 sweep over Delta at N = 0.90, 14.11");
  add_common(fig4d_cmd, false);
  fig4d_cmd->add_option("--samples", samples, "measurements per estimate")
      ->check(CLI::PositiveNumber);

  CLI::App* fig4n_cmd = app.add_subcommand("fig4-n", "V_100 sweep over N at Delta = pi/18, pi/9");
  add_common(fig4n_cmd, false);
  fig4n_cmd->add_option("--samples", samples, "measurements per estimate")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.push_back("phasediff");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const bayes::PriorKind prior_kind = prior_text == "jeffreys"
                                            ? bayes::PriorKind::Jeffreys
                                            : bayes::PriorKind::Uniform;

    if (qfi_cmd->parsed()) {
      const auto result = metrology::qfi(make_probe(probe_kind, n_mean),
                                         fock::NoiseLevel(delta.value));
      emit(json{{"qfi", result.value}}, out_path, out);
      return 0;
    }

    if (sim_cmd->parsed()) {
      const homodyne::LikelihoodModel model(std::sqrt(n_mean),
                                            fock::NoiseLevel(delta.value));
      rng::Generator gen(rng::derive_seed(seed, 0));
      const auto data = homodyne::sample_homodyne(model, true_phi.value, samples, gen);
      std::vector<double> xs(data.size());
      for (size_t i = 0; i < data.size(); ++i) xs[i] = data[i].x;
      const std::string path = out_path.empty() ? "samples.txt" : out_path;
      sample_io::write_sample_file(path, 0.0, xs);
      if (as_json)
        out << json{{"file", path},
                    {"m", samples},
                    {"n", n_mean},
                    {"delta", delta.value},
                    {"true_phi", true_phi.value},
                    {"seed", seed}}
                   .dump()
            << "\n";
      else
        out << "wrote " << samples << " samples to " << path << "\n";
      return 0;
    }

    if (est_cmd->parsed()) {
      const auto data = sample_io::ingest_samples(input_path);
      const homodyne::LikelihoodModel model(std::sqrt(n_mean),
                                            fock::NoiseLevel(delta.value));
      const bayes::Prior prior = prior_kind == bayes::PriorKind::Jeffreys
                                     ? bayes::jeffreys_prior(model, grid_points)
                                     : bayes::Prior::uniform(grid_points);
      const auto grid = bayes::posterior_from_samples(model, data, prior, grid_points);
      const auto est = bayes::estimate(grid);
      emit(json{{"phi_b", est.phi_b},
                {"variance", est.variance},
                {"m", est.sample_count},
                {"prior", prior_name(est.prior_kind)},
                {"model", json{{"n", n_mean},
                               {"delta", delta.value},
                               {"grid", grid_points},
                               {"beta_nodes", homodyne::kDefaultBetaNodes}}}},
           out_path, out);
      return 0;
    }

    // figure re-generation commands write CSV files into --out (a directory)
    const std::filesystem::path out_dir = out_path.empty() ? "." : out_path;
    std::filesystem::create_directories(out_dir);
    json written = json::array();

    experiments::RunConfig cfg;
    cfg.repetitions = reps;
    cfg.master_seed = seed;
    cfg.prior = prior_kind;
    cfg.grid_points = grid_points;

    if (fig3_cmd->parsed()) {
      cfg.sample_counts = kFig3SampleCounts;
      for (const auto& pair : kFig3Pairs) {
        cfg.mean_photons = pair.n_mean;
        cfg.delta = pair.delta;
        const auto points = experiments::run_km_curve(cfg);
        const auto path = (out_dir / pair.file).string();
        write_text(path, experiments::to_csv(points, experiments::CurveSchema::KmCurve));
        written.push_back(path);
        if (!as_json) out << "wrote " << path << "\n";
      }
    } else if (fig4d_cmd->parsed()) {
      for (double n : {0.90, 14.11}) {
        cfg.mean_photons = n;
        const auto points = experiments::run_vm_sweep(
            cfg, experiments::SweepKind::Delta, kFig4DeltaGrid, samples);
        char name[48];
        std::snprintf(name, sizeof name, "vm_delta_n%.2f.csv", n);
        const auto path = (out_dir / name).string();
        write_text(path, experiments::to_csv(points, experiments::CurveSchema::VmSweep));
        written.push_back(path);
        if (!as_json) out << "wrote " << path << "\n";
      }
    } else if (fig4n_cmd->parsed()) {
      const std::pair<double, const char*> sweeps[] = {
          {std::numbers::pi / 18, "vm_n_dpi18.csv"},
          {std::numbers::pi / 9, "vm_n_dpi9.csv"}};
      for (const auto& [d, file] : sweeps) {
        cfg.delta = d;
        const auto points = experiments::run_vm_sweep(
            cfg, experiments::SweepKind::MeanPhotons, kFig4NGrid, samples);
        const auto path = (out_dir / file).string();
        write_text(path, experiments::to_csv(points, experiments::CurveSchema::VmSweep));
        written.push_back(path);
        if (!as_json) out << "wrote " << path << "\n";
      }
    }
    if (as_json) out << json{{"files", written}}.dump() << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "phasediff: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace phasediff::cli
