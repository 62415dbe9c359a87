#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "leeyang/model.hpp"
#include "leeyang/sequences.hpp"
#include "leeyang/spectral.hpp"

namespace leeyang::io {

/// %.17g: enough digits to read back the same double.
std::string format_double(double v);
/// Strict decimal parse of a whole field.
double parse_double(const std::string& field);

// CSV writers. Every file starts with a header row.
void write_coefficients_csv(std::ostream& out, const CoefficientSequence& alphas);  // n,re_alpha,im_alpha
void write_couplings_csv(std::ostream& out, const CouplingSequence& ps);  // n,p_n,alpha_n
void write_zeros_csv(std::ostream& out, const spectral::EigenphaseList& zeros);  // k,theta,re,im,circle_deviation
void write_ids_csv(std::ostream& out, const spectral::IDSCurve& curve);  // theta,value
void write_gaps_csv(std::ostream& out, const std::vector<spectral::Gap>& gaps);
void write_histogram_csv(std::ostream& out, const spectral::SpacingHistogram& hist);

/// Rows of a CSV file with the given header; throws ErrorKind::Io on a mismatch.
std::vector<std::vector<std::string>> read_csv(std::istream& in,
                                               const std::vector<std::string>& header);
CoefficientSequence read_coefficients_csv(std::istream& in);
CouplingSequence read_couplings_csv(std::istream& in);
/// Phases column of a zeros file; chain_length 0 means the row count.
spectral::EigenphaseList read_zeros_csv(std::istream& in, std::size_t chain_length = 0);

/// Pass/fail thresholds for `verify`.
struct Tolerances {
  double trace = 1e-10;
  double zeros = 1e-7;
  double circle = 1e-10;
  double determinant = 1e-9;
  double szego = 1e-13;
  double discriminant = 1e-10;
  double similarity = 1e-13;
  double bandwidth_phase = 1e-10;
  double stationary = 1e-12;
  double precision = 1e-14;

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

struct RunConfig {
  model::ModelSpec model;
  std::string stage = "zeros";
  std::string out_dir = ".";
  Tolerances tolerances;
  spectral::Normalization normalization = spectral::Normalization::PerPaper;
  double gap_multiplier = 5.0;
  int m_max = 30;
  std::size_t bins = 40;
  std::size_t widest = 10;
  std::uint64_t seed = 42;
  double theta = 1.5707963267948966;
  double reference = 0.0;
  // largest dimension handed to the dense eigensolver
  std::size_t solver_cap = spectral::kDefaultSolverCap;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws ErrorKind::Config unless every tolerance is positive and the
/// numeric knobs are in range.
void validate(const RunConfig& config);

nlohmann::json to_json(const model::ModelSpec& spec);
model::ModelSpec model_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& config);
RunConfig run_config_from_json(const nlohmann::json& j);

std::string to_string(spectral::Normalization n);
spectral::Normalization parse_normalization(const std::string& name);

}  // namespace leeyang::io
