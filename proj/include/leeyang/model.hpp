#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leeyang/dynamics.hpp"
#include "leeyang/sequences.hpp"
#include "leeyang/spectral.hpp"

namespace leeyang::model {

enum class ModelKind { Fibonacci, Substitution, Sft, CatMap, SkewShift, Uamo, ExplicitList };

/// Ising: zeros of the partition function (2N phases, F_{2N}(pi/2) on the
/// interleaved sequence). Cmv: zeros of the discriminant of the period.
/// Auto picks Ising whenever all coefficients are real and positive.
enum class Pipeline { Auto, Ising, Cmv };

enum class SamplingKind { ShiftedCosine, PureCosine, Custom };

std::string to_string(ModelKind kind);
std::string to_string(Pipeline pipeline);
std::string to_string(SamplingKind kind);
ModelKind parse_model_kind(const std::string& name);
Pipeline parse_pipeline(const std::string& name);
SamplingKind parse_sampling_kind(const std::string& name);

/// Everything needed to regenerate a coefficient sequence.
///
/// Torus coordinates and gamma are kept as expression strings ("1/sqrt(2)",
/// "(sqrt(5)-1)/2") so they can be materialized at any precision.
struct ModelSpec {
  ModelKind kind = ModelKind::Fibonacci;
  Pipeline pipeline = Pipeline::Auto;

  // fibonacci: the word u_k with k = iterations, |u_k| = F_{k+2}
  unsigned iterations = 10;
  // every other generated kind: number of coefficients N
  std::size_t length = 0;

  // symbolic kinds: letter -> coupling p
  std::map<char, double> couplings{{'a', 2.0 / 3.0}, {'b', 0.01}};
  dynamics::SubstitutionRules rules;
  char seed_letter = 'a';
  dynamics::StochasticMatrix transition;
  std::uint64_t sample_seed = 1;

  // cat-map, skew-shift, uamo. Empty x / y select the kind's start point:
  // (1/sqrt(2), 1/sqrt(3)) for cat-map, (gamma/2, 0) for skew-shift, x = 0 for uamo.
  std::string x;
  std::string y;
  std::string gamma = "1/sqrt(2)";
  SamplingKind sampling = SamplingKind::ShiftedCosine;
  double lambda = 0.9;
  double offset = 0.5;
  double amplitude = 1.0 / 3.0;
  double lambda1 = 0.9;
  double lambda2 = 0.70710678118654752;

  // explicit-list: one of these, or a CSV file in either column layout
  std::vector<double> explicit_couplings;
  std::vector<cplx> explicit_alphas;
  std::string source_csv;

  // 0 selects the default policy for the kind
  std::uint32_t precision_bits = 0;
  // overrides the default label generators
  std::optional<std::vector<double>> label_generators;
  // sft: longest cylinder word used for label generators
  std::size_t label_word_length = 3;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

struct Model {
  ModelSpec spec;
  Pipeline pipeline = Pipeline::Cmv;  // never Auto once built
  std::optional<CouplingSequence> couplings;
  CoefficientSequence alphas;  // alpha_n = exp(-2 p_n) for Ising models
  spectral::LabelGroup group = spectral::LabelGroup::integers();
  std::uint32_t precision_bits = 0;  // working precision used, 0 if none
};

Model build_model(const ModelSpec& spec);

/// Zeros of the model per its pipeline.
spectral::EigenphaseList model_zeros(const Model& model,
                                     std::size_t cap = spectral::kDefaultSolverCap);

/// Same coefficients at twice the working precision (cat-map, skew-shift, uamo).
CoefficientSequence recompute_doubled_precision(const Model& model);

}  // namespace leeyang::model
