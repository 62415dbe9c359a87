#include "leeyang/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "leeyang/error.hpp"

namespace leeyang::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& field) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && (last[-1] == ' ' || last[-1] == '\r')) --last;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  require(ec == std::errc() && ptr == last && first != last, ErrorKind::Io,
          "not a number: '" + field + "'");
  return v;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

void write_coefficients_csv(std::ostream& out, const CoefficientSequence& alphas) {
  out << "n,re_alpha,im_alpha\n";
  for (std::size_t n = 0; n < alphas.size(); ++n) {
    out << n << ',' << format_double(alphas[n].real()) << ','
        << format_double(alphas[n].imag()) << '\n';
  }
}

void write_couplings_csv(std::ostream& out, const CouplingSequence& ps) {
  out << "n,p_n,alpha_n\n";
  for (std::size_t n = 0; n < ps.size(); ++n) {
    out << n << ',' << format_double(ps[n]) << ',' << format_double(std::exp(-2.0 * ps[n]))
        << '\n';
  }
}

void write_zeros_csv(std::ostream& out, const spectral::EigenphaseList& zeros) {
  out << "k,theta,re,im,circle_deviation\n";
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    const cplx z = zeros.eigenvalue(k);
    out << k << ',' << format_double(zeros.phases()[k]) << ',' << format_double(z.real()) << ','
        << format_double(z.imag()) << ',' << format_double(zeros.deviations()[k]) << '\n';
  }
}

void write_ids_csv(std::ostream& out, const spectral::IDSCurve& curve) {
  out << "theta,value\n";
  for (const auto& [theta, value] : curve.jumps())
    out << format_double(theta) << ',' << format_double(value) << '\n';
}

void write_gaps_csv(std::ostream& out, const std::vector<spectral::Gap>& gaps) {
  out << "left_theta,right_theta,length,label,n,m,residual\n";
  for (const auto& g : gaps) {
    out << format_double(g.left) << ',' << format_double(g.right) << ','
        << format_double(g.length) << ',' << format_double(g.label) << ',';
    if (g.match) {
      out << g.match->n << ',' << g.match->m << ',' << format_double(g.match->residual);
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const spectral::SpacingHistogram& hist) {
  out << "bin_left,bin_right,count,proportion\n";
  for (std::size_t b = 0; b < hist.counts.size(); ++b) {
    const double proportion =
        hist.total == 0 ? 0.0 : static_cast<double>(hist.counts[b]) / static_cast<double>(hist.total);
    out << format_double(hist.edges[b]) << ',' << format_double(hist.edges[b + 1]) << ','
        << hist.counts[b] << ',' << format_double(proportion) << '\n';
  }
}

std::vector<std::vector<std::string>> read_csv(std::istream& in,
                                               const std::vector<std::string>& header) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), ErrorKind::Io, "empty CSV input");
  const auto got = split(line);
  require(got == header, ErrorKind::Io, "unexpected CSV header: " + line);
  std::vector<std::vector<std::string>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto fields = split(line);
    require(fields.size() == header.size(), ErrorKind::Io,
            "line " + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                " fields");
    rows.push_back(std::move(fields));
  }
  return rows;
}

CoefficientSequence read_coefficients_csv(std::istream& in) {
  std::vector<cplx> alphas;
  for (const auto& row : read_csv(in, {"n", "re_alpha", "im_alpha"}))
    alphas.emplace_back(parse_double(row[1]), parse_double(row[2]));
  return CoefficientSequence(std::move(alphas));
}

CouplingSequence read_couplings_csv(std::istream& in) {
  std::vector<double> ps;
  for (const auto& row : read_csv(in, {"n", "p_n", "alpha_n"})) ps.push_back(parse_double(row[1]));
  return CouplingSequence(std::move(ps));
}

spectral::EigenphaseList read_zeros_csv(std::istream& in, std::size_t chain_length) {
  std::vector<double> phases, deviations;
  for (const auto& row : read_csv(in, {"k", "theta", "re", "im", "circle_deviation"})) {
    phases.push_back(parse_double(row[1]));
    deviations.push_back(parse_double(row[4]));
  }
  return spectral::EigenphaseList(std::move(phases), chain_length, std::move(deviations));
}

void validate(const RunConfig& c) {
  const Tolerances& t = c.tolerances;
  for (double v : {t.trace, t.zeros, t.circle, t.determinant, t.szego, t.discriminant,
                   t.similarity, t.bandwidth_phase, t.stationary, t.precision}) {
    require(std::isfinite(v) && v > 0.0, ErrorKind::Config, "tolerances must be positive");
  }
  require(std::isfinite(c.gap_multiplier) && c.gap_multiplier > 0.0, ErrorKind::Config,
          "gap multiplier must be positive");
  require(c.m_max >= 0, ErrorKind::Config, "m_max must be >= 0");
  require(c.bins >= 1, ErrorKind::Config, "bins must be >= 1");
  require(std::isfinite(c.theta) && std::isfinite(c.reference), ErrorKind::Config,
          "theta and reference must be finite");
}

std::string to_string(spectral::Normalization n) {
  return n == spectral::Normalization::PerPaper ? "paper" : "operator";
}

spectral::Normalization parse_normalization(const std::string& name) {
  if (name == "paper") return spectral::Normalization::PerPaper;
  if (name == "operator") return spectral::Normalization::PerOperator;
  fail(ErrorKind::Config, "normalization must be 'paper' or 'operator', got '" + name + "'");
}

// JSON ------------------------------------------------------------------------

namespace {

std::string letter_key(char c) { return std::string(1, c); }

char key_letter(const std::string& key) {
  require(key.size() == 1, ErrorKind::Config, "letters must be single characters: '" + key + "'");
  return key[0];
}

template <class T>
void read_if(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::Config, std::string("bad value for '") + key + "': " + e.what());
  }
}

void reject_unknown(const json& j, std::initializer_list<const char*> known, const char* what) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    require(ok, ErrorKind::Config, std::string("unknown ") + what + " field '" + item.key() + "'");
  }
}

}  // namespace

json to_json(const model::ModelSpec& s) {
  json j;
  j["kind"] = model::to_string(s.kind);
  j["pipeline"] = model::to_string(s.pipeline);
  j["iterations"] = s.iterations;
  j["length"] = s.length;
  json couplings = json::object();
  for (const auto& [c, p] : s.couplings) couplings[letter_key(c)] = p;
  j["couplings"] = couplings;
  json rules = json::object();
  for (const auto& [c, w] : s.rules) rules[letter_key(c)] = w;
  j["rules"] = rules;
  j["seed_letter"] = letter_key(s.seed_letter);
  j["transition"] = s.transition;
  j["sample_seed"] = s.sample_seed;
  j["x"] = s.x;
  j["y"] = s.y;
  j["gamma"] = s.gamma;
  j["sampling"] = model::to_string(s.sampling);
  j["lambda"] = s.lambda;
  j["offset"] = s.offset;
  j["amplitude"] = s.amplitude;
  j["lambda1"] = s.lambda1;
  j["lambda2"] = s.lambda2;
  j["explicit_couplings"] = s.explicit_couplings;
  json alphas = json::array();
  for (const cplx& a : s.explicit_alphas) alphas.push_back({a.real(), a.imag()});
  j["explicit_alphas"] = alphas;
  j["source_csv"] = s.source_csv;
  j["precision_bits"] = s.precision_bits;
  j["label_generators"] = s.label_generators ? json(*s.label_generators) : json(nullptr);
  j["label_word_length"] = s.label_word_length;
  return j;
}

model::ModelSpec model_spec_from_json(const json& j) {
  require(j.is_object(), ErrorKind::Config, "model must be a JSON object");
  reject_unknown(j,
                 {"kind", "pipeline", "iterations", "length", "couplings", "rules", "seed_letter",
                  "transition", "sample_seed", "x", "y", "gamma", "sampling", "lambda", "offset",
                  "amplitude", "lambda1", "lambda2", "explicit_couplings", "explicit_alphas",
                  "source_csv", "precision_bits", "label_generators", "label_word_length"},
                 "model");
  model::ModelSpec s;
  std::string text;
  if (j.contains("kind")) {
    read_if(j, "kind", text);
    s.kind = model::parse_model_kind(text);
  }
  if (j.contains("pipeline")) {
    read_if(j, "pipeline", text);
    s.pipeline = model::parse_pipeline(text);
  }
  read_if(j, "iterations", s.iterations);
  read_if(j, "length", s.length);
  if (j.contains("couplings")) {
    std::map<std::string, double> raw;
    read_if(j, "couplings", raw);
    s.couplings.clear();
    for (const auto& [k, v] : raw) s.couplings[key_letter(k)] = v;
  }
  if (j.contains("rules")) {
    std::map<std::string, std::string> raw;
    read_if(j, "rules", raw);
    s.rules.clear();
    for (const auto& [k, v] : raw) s.rules[key_letter(k)] = v;
  }
  if (j.contains("seed_letter")) {
    read_if(j, "seed_letter", text);
    s.seed_letter = key_letter(text);
  }
  read_if(j, "transition", s.transition);
  read_if(j, "sample_seed", s.sample_seed);
  read_if(j, "x", s.x);
  read_if(j, "y", s.y);
  read_if(j, "gamma", s.gamma);
  if (j.contains("sampling")) {
    read_if(j, "sampling", text);
    s.sampling = model::parse_sampling_kind(text);
  }
  read_if(j, "lambda", s.lambda);
  read_if(j, "offset", s.offset);
  read_if(j, "amplitude", s.amplitude);
  read_if(j, "lambda1", s.lambda1);
  read_if(j, "lambda2", s.lambda2);
  read_if(j, "explicit_couplings", s.explicit_couplings);
  if (j.contains("explicit_alphas")) {
    std::vector<std::vector<double>> raw;
    read_if(j, "explicit_alphas", raw);
    s.explicit_alphas.clear();
    for (const auto& pair : raw) {
      require(pair.size() == 1 || pair.size() == 2, ErrorKind::Config,
              "explicit_alphas entries are [re] or [re, im]");
      s.explicit_alphas.emplace_back(pair[0], pair.size() == 2 ? pair[1] : 0.0);
    }
  }
  read_if(j, "source_csv", s.source_csv);
  read_if(j, "precision_bits", s.precision_bits);
  if (j.contains("label_generators") && !j.at("label_generators").is_null()) {
    std::vector<double> g;
    read_if(j, "label_generators", g);
    s.label_generators = std::move(g);
  }
  read_if(j, "label_word_length", s.label_word_length);
  return s;
}

json to_json(const RunConfig& c) {
  const Tolerances& t = c.tolerances;
  return json{
      {"model", to_json(c.model)},
      {"stage", c.stage},
      {"out_dir", c.out_dir},
      {"tolerances",
       {{"trace", t.trace},
        {"zeros", t.zeros},
        {"circle", t.circle},
        {"determinant", t.determinant},
        {"szego", t.szego},
        {"discriminant", t.discriminant},
        {"similarity", t.similarity},
        {"bandwidth_phase", t.bandwidth_phase},
        {"stationary", t.stationary},
        {"precision", t.precision}}},
      {"normalization", to_string(c.normalization)},
      {"gap_multiplier", c.gap_multiplier},
      {"m_max", c.m_max},
      {"bins", c.bins},
      {"widest", c.widest},
      {"seed", c.seed},
      {"theta", c.theta},
      {"reference", c.reference},
      {"solver_cap", c.solver_cap},
  };
}

RunConfig run_config_from_json(const json& j) {
  require(j.is_object(), ErrorKind::Config, "config must be a JSON object");
  reject_unknown(j,
                 {"model", "stage", "out_dir", "tolerances", "normalization", "gap_multiplier",
                  "m_max", "bins", "widest", "seed", "theta", "reference", "solver_cap"},
                 "config");
  RunConfig c;
  if (j.contains("model")) c.model = model_spec_from_json(j.at("model"));
  read_if(j, "stage", c.stage);
  read_if(j, "out_dir", c.out_dir);
  if (j.contains("tolerances")) {
    const json& tj = j.at("tolerances");
    require(tj.is_object(), ErrorKind::Config, "tolerances must be an object");
    reject_unknown(tj,
                   {"trace", "zeros", "circle", "determinant", "szego", "discriminant",
                    "similarity", "bandwidth_phase", "stationary", "precision"},
                   "tolerance");
    Tolerances& t = c.tolerances;
    read_if(tj, "trace", t.trace);
    read_if(tj, "zeros", t.zeros);
    read_if(tj, "circle", t.circle);
    read_if(tj, "determinant", t.determinant);
    read_if(tj, "szego", t.szego);
    read_if(tj, "discriminant", t.discriminant);
    read_if(tj, "similarity", t.similarity);
    read_if(tj, "bandwidth_phase", t.bandwidth_phase);
    read_if(tj, "stationary", t.stationary);
    read_if(tj, "precision", t.precision);
  }
  if (j.contains("normalization")) {
    std::string name;
    read_if(j, "normalization", name);
    c.normalization = parse_normalization(name);
  }
  read_if(j, "gap_multiplier", c.gap_multiplier);
  read_if(j, "m_max", c.m_max);
  read_if(j, "bins", c.bins);
  read_if(j, "widest", c.widest);
  read_if(j, "seed", c.seed);
  read_if(j, "theta", c.theta);
  read_if(j, "reference", c.reference);
  read_if(j, "solver_cap", c.solver_cap);
  validate(c);
  return c;
}

}  // namespace leeyang::io
