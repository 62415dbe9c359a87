#include "leeyang/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "leeyang/error.hpp"
#include "leeyang/hp_fraction.hpp"
#include "leeyang/io.hpp"
#include "leeyang/ising.hpp"

namespace leeyang::model {

namespace {

constexpr std::pair<ModelKind, const char*> kKindNames[] = {
    {ModelKind::Fibonacci, "fibonacci"}, {ModelKind::Substitution, "substitution"},
    {ModelKind::Sft, "sft"},             {ModelKind::CatMap, "cat-map"},
    {ModelKind::SkewShift, "skew-shift"}, {ModelKind::Uamo, "uamo"},
    {ModelKind::ExplicitList, "explicit-list"},
};

std::size_t required_length(const ModelSpec& s) {
  require(s.length >= 1, ErrorKind::Config,
          "model '" + to_string(s.kind) + "' needs length >= 1");
  return s.length;
}

dynamics::SamplingFunction sampling_of(const ModelSpec& s) {
  switch (s.sampling) {
    case SamplingKind::ShiftedCosine: return dynamics::SamplingFunction::shifted_cosine();
    case SamplingKind::PureCosine:
      require(s.lambda > 0.0 && s.lambda < 1.0, ErrorKind::Domain, "lambda must lie in (0, 1)");
      return dynamics::SamplingFunction::pure_cosine(s.lambda);
    case SamplingKind::Custom: return dynamics::SamplingFunction::custom(s.offset, s.amplitude);
  }
  fail(ErrorKind::Config, "unknown sampling function");
}

std::uint32_t working_bits(const ModelSpec& s, std::uint32_t policy) {
  return std::max(s.precision_bits, policy);
}

HighPrecisionFraction value(const std::string& expr, std::uint32_t bits) {
  return HighPrecisionFraction::parse(expr, bits);
}

struct Generated {
  std::optional<CouplingSequence> couplings;
  CoefficientSequence alphas;
  spectral::LabelGroup group = spectral::LabelGroup::integers();
  std::uint32_t bits = 0;
};

Generated generate(const ModelSpec& s) {
  Generated g;
  switch (s.kind) {
    case ModelKind::Fibonacci: {
      const auto word = dynamics::fibonacci_word(s.iterations);
      g.couplings = dynamics::couplings_from_word(word, s.couplings);
      g.group = spectral::LabelGroup::rank2((std::sqrt(5.0) - 1.0) / 2.0);
      break;
    }
    case ModelKind::Substitution: {
      const auto word = dynamics::substitution_fixed_point(s.rules, s.seed_letter, required_length(s));
      g.couplings = dynamics::couplings_from_word(word, s.couplings);
      break;
    }
    case ModelKind::Sft: {
      dynamics::validate_stochastic(s.transition);
      require(dynamics::is_primitive(s.transition), ErrorKind::Domain,
              "transition matrix must be primitive");
      const auto word = dynamics::markov_word(s.transition, required_length(s), s.sample_seed);
      g.couplings = dynamics::couplings_from_word(word, s.couplings);
      g.group = spectral::markov_label_group(s.transition, s.label_word_length).group;
      break;
    }
    case ModelKind::CatMap: {
      const std::size_t n = required_length(s);
      g.bits = working_bits(s, dynamics::cat_map_bits(n));
      const auto x = value(s.x.empty() ? "1/sqrt(2)" : s.x, g.bits);
      const auto y = value(s.y.empty() ? "1/sqrt(3)" : s.y, g.bits);
      g.alphas = dynamics::sample_orbit(dynamics::cat_map_orbit(x, y, n), sampling_of(s));
      break;
    }
    case ModelKind::SkewShift: {
      const std::size_t n = required_length(s);
      g.bits = working_bits(s, dynamics::skew_shift_bits(n));
      const auto gamma = value(s.gamma, g.bits);
      const auto x = value(s.x.empty() ? "(" + s.gamma + ")/2" : s.x, g.bits);
      const auto y = value(s.y.empty() ? "0" : s.y, g.bits);
      g.alphas = dynamics::sample_orbit(dynamics::skew_shift_orbit(gamma, x, y, n), sampling_of(s));
      g.group = spectral::LabelGroup::rank2(gamma.to_double());
      break;
    }
    case ModelKind::Uamo: {
      const std::size_t n = required_length(s);
      g.bits = working_bits(s, dynamics::skew_shift_bits(n));
      const auto gamma = value(s.gamma, g.bits);
      const auto x = value(s.x.empty() ? "0" : s.x, g.bits);
      g.alphas = dynamics::uamo_coefficients(s.lambda1, s.lambda2, gamma, x, n);
      g.group = spectral::LabelGroup::rank2(gamma.to_double());
      break;
    }
    case ModelKind::ExplicitList: {
      const int sources = !s.explicit_couplings.empty() + !s.explicit_alphas.empty() +
                          !s.source_csv.empty();
      require(sources == 1, ErrorKind::Config,
              "explicit-list needs exactly one of explicit_couplings, explicit_alphas, source_csv");
      if (!s.explicit_couplings.empty()) {
        g.couplings = CouplingSequence(s.explicit_couplings);
      } else if (!s.explicit_alphas.empty()) {
        g.alphas = CoefficientSequence(s.explicit_alphas);
      } else {
        std::ifstream in(s.source_csv);
        require(static_cast<bool>(in), ErrorKind::Io, "cannot open " + s.source_csv);
        std::string header;
        std::getline(in, header);
        in.seekg(0);
        if (header.rfind("n,p_n", 0) == 0) {
          g.couplings = io::read_couplings_csv(in);
        } else {
          g.alphas = io::read_coefficients_csv(in);
        }
      }
      break;
    }
  }
  return g;
}

bool real_positive(const CoefficientSequence& a) {
  return std::all_of(a.values().begin(), a.values().end(),
                     [](const cplx& v) { return v.imag() == 0.0 && v.real() > 0.0; });
}

}  // namespace

std::string to_string(ModelKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

std::string to_string(Pipeline pipeline) {
  switch (pipeline) {
    case Pipeline::Auto: return "auto";
    case Pipeline::Ising: return "ising";
    case Pipeline::Cmv: return "cmv";
  }
  return "unknown";
}

std::string to_string(SamplingKind kind) {
  switch (kind) {
    case SamplingKind::ShiftedCosine: return "shifted-cosine";
    case SamplingKind::PureCosine: return "pure-cosine";
    case SamplingKind::Custom: return "custom";
  }
  return "unknown";
}

ModelKind parse_model_kind(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  fail(ErrorKind::Config, "unknown model kind '" + name + "'");
}

Pipeline parse_pipeline(const std::string& name) {
  if (name == "auto") return Pipeline::Auto;
  if (name == "ising") return Pipeline::Ising;
  if (name == "cmv") return Pipeline::Cmv;
  fail(ErrorKind::Config, "unknown pipeline '" + name + "'");
}

SamplingKind parse_sampling_kind(const std::string& name) {
  if (name == "shifted-cosine") return SamplingKind::ShiftedCosine;
  if (name == "pure-cosine") return SamplingKind::PureCosine;
  if (name == "custom") return SamplingKind::Custom;
  fail(ErrorKind::Config, "unknown sampling function '" + name + "'");
}

Model build_model(const ModelSpec& spec) {
  Generated g = generate(spec);
  Model m;
  m.spec = spec;
  m.precision_bits = g.bits;
  m.group = std::move(g.group);
  if (spec.label_generators) {
    const auto& gens = *spec.label_generators;
    if (gens.empty()) {
      m.group = spectral::LabelGroup::integers();
    } else if (gens.size() == 1) {
      m.group = spectral::LabelGroup::rank2(gens[0]);
    } else {
      m.group = spectral::LabelGroup::generated(gens);
    }
  }

  if (g.couplings) {
    m.couplings = std::move(g.couplings);
    m.alphas = ising::couplings_to_verblunsky(*m.couplings);
    m.pipeline = spec.pipeline == Pipeline::Cmv ? Pipeline::Cmv : Pipeline::Ising;
    return m;
  }

  m.alphas = std::move(g.alphas);
  const bool positive = real_positive(m.alphas);
  Pipeline p = spec.pipeline;
  if (p == Pipeline::Auto) p = positive ? Pipeline::Ising : Pipeline::Cmv;
  if (p == Pipeline::Ising) {
    require(positive, ErrorKind::Domain,
            "the Ising pipeline needs real positive coefficients alpha = exp(-2p)");
    std::vector<double> ps;
    ps.reserve(m.alphas.size());
    for (const cplx& a : m.alphas.values()) ps.push_back(-0.5 * std::log(a.real()));
    m.couplings = CouplingSequence(std::move(ps));
  }
  m.pipeline = p;
  return m;
}

spectral::EigenphaseList model_zeros(const Model& model, std::size_t cap) {
  if (model.pipeline == Pipeline::Ising) return spectral::lee_yang_zeros(*model.couplings, cap);
  return spectral::zeros_of_discriminant(model.alphas, cap);
}

CoefficientSequence recompute_doubled_precision(const Model& model) {
  if (model.precision_bits == 0) return model.alphas;
  ModelSpec twice = model.spec;
  twice.precision_bits = 2 * model.precision_bits;
  return generate(twice).alphas;
}

}  // namespace leeyang::model
