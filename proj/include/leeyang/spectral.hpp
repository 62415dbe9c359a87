#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "leeyang/cmv.hpp"
#include "leeyang/dynamics.hpp"
#include "leeyang/sequences.hpp"

namespace leeyang::spectral {

/// Default largest matrix dimension handed to the eigensolver.
inline constexpr std::size_t kDefaultSolverCap = 4000;
/// Tolerances of the unit-circle certificate.
inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kCircleTolerance = 1e-10;
/// Odd-period eigenvalue pairs must agree to this phase distance.
inline constexpr double kPairingTolerance = 1e-8;

/// Eigenvalues e^{2 pi i theta_k} of a unitary matrix as sorted phases in [0, 1).
///
/// `chain_length` is the N the zeros belong to: the number of Ising
/// couplings for Lee-Yang zeros, the period for discriminant zeros and the
/// matrix dimension for raw spectra. The per-paper normalization divides by it.
class EigenphaseList {
 public:
  /// `deviations[k]` is ||lambda_k| - 1| for phases[k]; empty means exact.
  EigenphaseList(std::vector<double> phases, std::size_t chain_length,
                 std::vector<double> deviations = {});

  const std::vector<double>& phases() const noexcept { return phases_; }
  const std::vector<double>& deviations() const noexcept { return deviations_; }
  std::size_t size() const noexcept { return phases_.size(); }
  std::size_t chain_length() const noexcept { return chain_length_; }
  /// max_k ||lambda_k| - 1|
  double max_deviation() const noexcept { return max_deviation_; }
  cplx eigenvalue(std::size_t k) const;

 private:
  std::vector<double> phases_;
  std::vector<double> deviations_;
  std::size_t chain_length_;
  double max_deviation_ = 0.0;
};

/// Phase of z in [0, 1): theta = arg(z) / 2 pi mod 1.
double phase_of(cplx z);
/// Distance on R/Z.
double circular_distance(double a, double b);

/// Eigenphases of a unitary matrix. Rejects inputs whose unitarity defect
/// exceeds 1e-10 and results off the circle by more than 1e-10.
EigenphaseList eigenphases(const cmv::Matrix& m, std::size_t chain_length = 0,
                           std::size_t cap = kDefaultSolverCap);
inline EigenphaseList eigenphases(const cmv::FloquetMatrix& f, std::size_t chain_length = 0,
                                  std::size_t cap = kDefaultSolverCap) {
  return eigenphases(f.entries(), chain_length, cap);
}

/// Zeros of Z_N: couplings -> exp(-2p) -> interleave with zeros -> F_{2N}(pi/2) -> phases.
/// Returns 2N phases with chain_length N.
EigenphaseList lee_yang_zeros(const CouplingSequence& ps, std::size_t cap = kDefaultSolverCap);

/// Zeros of the discriminant of the period `alphas`. Even N: spectrum of
/// F_N(pi/2). Odd N: F_{2N}(pi) has every zero twice; the pairs are merged
/// and N phases are returned.
EigenphaseList zeros_of_discriminant(const CoefficientSequence& alphas,
                                     std::size_t cap = kDefaultSolverCap);

enum class Normalization {
  PerPaper,     // divide by the chain length (Lee-Yang zeros carry mass 2)
  PerOperator,  // divide by the matrix dimension (mass 1)
};

/// Counting function theta -> #{phases in (ref, ref + theta]} / denominator,
/// theta measured from the reference phase.
class IDSCurve {
 public:
  IDSCurve(const EigenphaseList& zeros, Normalization normalization, double reference = 0.0);

  double operator()(double theta) const;
  double total_mass() const;
  double reference() const noexcept { return reference_; }
  Normalization normalization() const noexcept { return normalization_; }
  double denominator() const noexcept { return denominator_; }
  /// Phases measured from the reference, sorted, in (0, 1].
  const std::vector<double>& offsets() const noexcept { return offsets_; }
  /// (theta, value) right after each jump, one entry per distinct phase.
  std::vector<std::pair<double, double>> jumps() const;

 private:
  std::vector<double> offsets_;
  double denominator_;
  double reference_;
  Normalization normalization_;
};

IDSCurve ids(const EigenphaseList& zeros, Normalization normalization, double reference = 0.0);

/// sup_theta |a(theta) - b(theta)|.
double ids_sup_distance(const IDSCurve& a, const IDSCurve& b);

class LabelGroup {
 public:
  enum class Kind { Integers, Rank2, Generated };

  static LabelGroup integers();
  /// Z + gamma Z
  static LabelGroup rank2(double gamma);
  /// Z-module generated by 1 and the given reals.
  static LabelGroup generated(std::vector<double> generators);

  Kind kind() const noexcept { return kind_; }
  /// Non-integer generators (empty for Z).
  const std::vector<double>& generators() const noexcept { return generators_; }

 private:
  LabelGroup(Kind kind, std::vector<double> generators)
      : kind_(kind), generators_(std::move(generators)) {}
  Kind kind_;
  std::vector<double> generators_;
};

struct LabelMatch {
  long n = 0;
  long m = 0;
  double residual = 0.0;
  /// Which generator m multiplies (0 for Z and Z + gamma Z).
  std::size_t generator_index = 0;
};

/// Best n + m g with |m| <= m_max. Ties go to smaller |m|, then smaller |n|.
/// For groups with several generators, each generator is searched separately.
LabelMatch match_label(double label, const LabelGroup& group, int m_max);

struct Gap {
  double left = 0.0;   // phase where the arc starts (counterclockwise)
  double right = 0.0;  // phase where it ends; may exceed 1 for the wrap-around arc
  double length = 0.0;
  double label = 0.0;  // IDS plateau value on the arc
  std::optional<LabelMatch> match;
};

struct GapOptions {
  double threshold_multiplier = 5.0;
  Normalization normalization = Normalization::PerPaper;
  double reference = 0.0;
};

struct GapReport {
  std::vector<Gap> gaps;  // in counterclockwise order from phase 0
  double mean_spacing = 0.0;
  double threshold = 0.0;
  Normalization normalization = Normalization::PerPaper;
};

/// All arcs between consecutive phases (wrap-around included) longer than
/// threshold_multiplier times the mean spacing.
GapReport detect_gaps(const EigenphaseList& zeros, const GapOptions& options = {});

/// Fills Gap::match for every gap.
void label_gaps(GapReport& report, const LabelGroup& group, int m_max);

/// Gaps sorted by decreasing length, at most `count` of them.
std::vector<Gap> widest_gaps(const GapReport& report, std::size_t count);

/// Label generators of a Markov measure on a subshift of finite type:
/// mu(Xi_u) = p_{u_1} prod P_{u_j u_{j+1}} over admissible words |u| <= max_word_len.
struct MarkovLabels {
  std::vector<double> stationary;
  LabelGroup group;
};
MarkovLabels markov_label_group(const dynamics::StochasticMatrix& P, std::size_t max_word_len);

struct SpacingHistogram {
  std::vector<double> edges;  // bins + 1 edges on [0, max spacing]
  std::vector<std::size_t> counts;
  std::size_t total = 0;
};

/// Histogram of the cyclic spacings between consecutive phases.
SpacingHistogram gap_histogram(const EigenphaseList& zeros, std::size_t bins);

/// Cyclic spacings theta_{k+1} - theta_k (last one wraps through 1).
std::vector<double> spacings(const EigenphaseList& zeros);

}  // namespace leeyang::spectral
