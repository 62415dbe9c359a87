#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "leeyang/cmv.hpp"
#include "leeyang/error.hpp"
#include "leeyang/ising.hpp"
#include "leeyang/io.hpp"
#include "leeyang/model.hpp"
#include "leeyang/spectral.hpp"
#include "leeyang/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace leeyang;

namespace {

struct Flags {
  std::string model;
  std::string config;
  std::string pipeline;
  std::optional<std::size_t> n;
  std::optional<double> theta;
  std::optional<std::uint32_t> precision_bits;
  std::string normalization;
  std::optional<double> gap_mult;
  std::optional<int> m_max;
  std::optional<std::size_t> bins;
  std::optional<std::size_t> widest;
  std::optional<double> reference;
  std::string out;
  std::optional<std::uint64_t> seed;
};

io::RunConfig resolve(const Flags& f, const std::string& stage) {
  io::RunConfig c;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    require(static_cast<bool>(in), ErrorKind::Io, "cannot open config " + f.config);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      fail(ErrorKind::Config, std::string("config is not valid JSON: ") + e.what());
    }
    c = io::run_config_from_json(j);
  }
  c.stage = stage;
  if (!f.model.empty()) c.model.kind = model::parse_model_kind(f.model);
  if (!f.pipeline.empty()) c.model.pipeline = model::parse_pipeline(f.pipeline);
  if (f.n) {
    if (c.model.kind == model::ModelKind::Fibonacci) {
      c.model.iterations = static_cast<unsigned>(*f.n);
    } else {
      c.model.length = *f.n;
    }
  }
  if (f.theta) c.theta = *f.theta;
  if (f.precision_bits) c.model.precision_bits = *f.precision_bits;
  if (!f.normalization.empty()) c.normalization = io::parse_normalization(f.normalization);
  if (f.gap_mult) c.gap_multiplier = *f.gap_mult;
  if (f.m_max) c.m_max = *f.m_max;
  if (f.bins) c.bins = *f.bins;
  if (f.widest) c.widest = *f.widest;
  if (f.reference) c.reference = *f.reference;
  if (!f.out.empty()) c.out_dir = f.out;
  if (f.seed) {
    c.seed = *f.seed;
    c.model.sample_seed = *f.seed;
  }
  io::validate(c);
  return c;
}

class Output {
 public:
  explicit Output(const io::RunConfig& c) : dir_(c.out_dir) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    require(!ec, ErrorKind::Io, "cannot create " + dir_.string() + ": " + ec.message());
    write("run_config.json", [&](std::ostream& o) { o << io::to_json(c).dump(2) << "\n"; });
  }

  template <class F>
  void write(const std::string& name, F&& body) {
    const fs::path path = dir_ / name;
    std::ofstream out(path);
    require(static_cast<bool>(out), ErrorKind::Io, "cannot write " + path.string());
    body(out);
    out.flush();
    require(static_cast<bool>(out), ErrorKind::Io, "write failed for " + path.string());
    files_.push_back(path.string());
  }

  const std::vector<std::string>& files() const { return files_; }

 private:
  fs::path dir_;
  std::vector<std::string> files_;
};

spectral::GapReport labelled_gaps(const io::RunConfig& c, const model::Model& m) {
  spectral::GapOptions opt;
  opt.threshold_multiplier = c.gap_multiplier;
  opt.normalization = c.normalization;
  opt.reference = c.reference;
  auto report = spectral::detect_gaps(model::model_zeros(m, c.solver_cap), opt);
  spectral::label_gaps(report, m.group, c.m_max);
  return report;
}

// The unitary matrix whose spectrum the model's pipeline computes.
cmv::FloquetMatrix pipeline_matrix(const model::Model& m, double theta) {
  if (m.pipeline == model::Pipeline::Ising) return cmv::floquet_matrix(ising::interleave_with_zeros(m.alphas), theta);
  if (m.alphas.size() % 2 == 1) return cmv::floquet_matrix(m.alphas.doubled(), theta);
  return cmv::floquet_matrix(m.alphas, theta);
}

json summary(const std::string& command, const model::Model& m, const Output& out) {
  return json{{"command", command},
              {"model", model::to_string(m.spec.kind)},
              {"pipeline", model::to_string(m.pipeline)},
              {"length", m.alphas.size()},
              {"precision_bits", m.precision_bits},
              {"files", out.files()}};
}

json run(const std::string& command, const io::RunConfig& c, int& status) {
  if (command == "verify") {
    Output out(c);
    const auto report = verify::run_suite(c);
    const json j = verify::to_json(report);
    out.write("verify.json", [&](std::ostream& o) { o << j.dump(2) << "\n"; });
    status = report.all_pass() ? 0 : 1;
    json s = j;
    s["command"] = command;
    s["files"] = out.files();
    return s;
  }

  const auto m = model::build_model(c.model);
  Output out(c);
  json extra = json::object();
  if (command == "coeffs") {
    out.write("coefficients.csv", [&](std::ostream& o) { io::write_coefficients_csv(o, m.alphas); });
    if (m.couplings) out.write("couplings.csv", [&](std::ostream& o) { io::write_couplings_csv(o, *m.couplings); });
  } else if (command == "zeros") {
    const auto z = model::model_zeros(m, c.solver_cap);
    out.write("zeros.csv", [&](std::ostream& o) { io::write_zeros_csv(o, z); });
    extra["zeros"] = z.size();
    extra["max_circle_deviation"] = z.max_deviation();
  } else if (command == "ids") {
    const auto z = model::model_zeros(m, c.solver_cap);
    const auto curve = spectral::ids(z, c.normalization, c.reference);
    out.write("ids.csv", [&](std::ostream& o) { io::write_ids_csv(o, curve); });
    extra["total_mass"] = curve.total_mass();
  } else if (command == "gaps") {
    const auto report = labelled_gaps(c, m);
    out.write("gaps.csv", [&](std::ostream& o) { io::write_gaps_csv(o, report.gaps); });
    extra["gaps"] = report.gaps.size();
    extra["threshold"] = report.threshold;
  } else if (command == "labels") {
    const auto report = labelled_gaps(c, m);
    const auto widest = spectral::widest_gaps(report, c.widest);
    out.write("labels.csv", [&](std::ostream& o) { io::write_gaps_csv(o, widest); });
    double worst = 0.0;
    for (const auto& g : widest) worst = std::max(worst, g.match->residual);
    extra["gaps"] = widest.size();
    extra["max_residual"] = worst;
  } else if (command == "hist") {
    const auto h = spectral::gap_histogram(model::model_zeros(m, c.solver_cap), c.bins);
    out.write("histogram.csv", [&](std::ostream& o) { io::write_histogram_csv(o, h); });
    extra["spacings"] = h.total;
  } else if (command == "bandwidth") {
    const auto f = pipeline_matrix(m, c.theta);
    const auto p = cmv::band_permutation(static_cast<std::size_t>(f.entries().rows()));
    const auto g = cmv::reorder(f, p);
    out.write("floquet.csv", [&](std::ostream& o) { cmv::write_matrix_triplets(o, f.entries()); });
    out.write("banded.csv", [&](std::ostream& o) { cmv::write_matrix_triplets(o, g); });
    extra["dimension"] = f.entries().rows();
    extra["max_offset_before"] = cmv::max_offset(f.entries());
    extra["max_offset_after"] = cmv::max_offset(g);
    extra["permutation"] = p.image();
  }
  json s = summary(command, m, out);
  s.update(extra);
  return s;
}

void report_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lee-Yang zeros of one-dimensional Ising chains through CMV matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--model", f.model,
                 "fibonacci, substitution, sft, cat-map, skew-shift, uamo or explicit-list");
  app.add_option("--config", f.config, "RunConfig JSON file; flags override its fields");
  app.add_option("--pipeline", f.pipeline, "auto, ising or cmv");
  app.add_option("--n", f.n, "iterations k for fibonacci (|u_k| = F_{k+2}), else the length N");
  app.add_option("--theta", f.theta, "Floquet angle for the bandwidth picture (default pi/2)");
  app.add_option("--precision-bits", f.precision_bits, "minimum working precision for torus models");
  app.add_option("--normalization", f.normalization, "paper (1/N, mass 2) or operator (mass 1)");
  app.add_option("--gap-mult", f.gap_mult, "gap threshold in mean spacings");
  app.add_option("--m-max", f.m_max, "largest |m| tried in n + m g");
  app.add_option("--bins", f.bins, "histogram bins");
  app.add_option("--widest", f.widest, "gaps reported by labels");
  app.add_option("--reference", f.reference, "reference phase of the IDS");
  app.add_option("--out", f.out, "output directory");
  app.add_option("--seed", f.seed, "seed for random checks and Markov sampling");

  const char* commands[][2] = {
      {"coeffs", "write coefficients.csv (and couplings.csv for Ising models)"},
      {"zeros", "write zeros.csv"},
      {"ids", "write ids.csv"},
      {"gaps", "write gaps.csv with labels"},
      {"labels", "write labels.csv for the widest gaps"},
      {"hist", "write histogram.csv of consecutive spacings"},
      {"bandwidth", "write floquet.csv and banded.csv triplets"},
      {"verify", "run the identity checks and write verify.json"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("config", e.what());
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    int status = 0;
    const auto c = resolve(f, command);
    std::cout << run(command, c, status).dump(2) << "\n";
    return status;
  } catch (const Error& e) {
    report_error(to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    report_error("internal", e.what());
  }
  return 1;
}
