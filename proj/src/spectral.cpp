#include "leeyang/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "leeyang/eigensolver.hpp"
#include "leeyang/error.hpp"
#include "leeyang/ising.hpp"

namespace leeyang::spectral {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// (phase - reference) mod 1 mapped into (0, 1]; a phase sitting exactly on
/// the reference is counted at the end of the turn.
double offset_from(double phase, double reference) {
  double d = phase - reference;
  d -= std::floor(d);
  return d == 0.0 ? 1.0 : d;
}

}  // namespace

EigenphaseList::EigenphaseList(std::vector<double> phases, std::size_t chain_length,
                               std::vector<double> deviations)
    : chain_length_(chain_length) {
  if (deviations.empty()) deviations.assign(phases.size(), 0.0);
  require(deviations.size() == phases.size(), ErrorKind::Shape,
          "one circle deviation per phase expected");
  std::vector<std::size_t> order(phases.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    require(phases[k] >= 0.0 && phases[k] < 1.0, ErrorKind::Domain, "phases must lie in [0, 1)");
    order[k] = k;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return phases[a] < phases[b]; });
  phases_.reserve(order.size());
  deviations_.reserve(order.size());
  for (std::size_t k : order) {
    phases_.push_back(phases[k]);
    deviations_.push_back(deviations[k]);
    max_deviation_ = std::max(max_deviation_, deviations[k]);
  }
  if (chain_length_ == 0) chain_length_ = phases_.size();
}

cplx EigenphaseList::eigenvalue(std::size_t k) const {
  return std::polar(1.0, kTwoPi * phases_[k]);
}

double phase_of(cplx z) {
  double t = std::arg(z) / kTwoPi;
  if (t < 0.0) t += 1.0;
  // arg slightly below zero rounds to exactly 1 after the shift
  if (t >= 1.0) t = 0.0;
  return t;
}

double circular_distance(double a, double b) {
  double d = std::abs(a - b);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

EigenphaseList eigenphases(const cmv::Matrix& m, std::size_t chain_length, std::size_t cap) {
  require(m.rows() == m.cols() && m.rows() > 0, ErrorKind::Shape,
          "eigenphases need a nonempty square matrix");
  require(static_cast<std::size_t>(m.rows()) <= cap, ErrorKind::Resource,
          "matrix dimension " + std::to_string(m.rows()) + " exceeds the eigensolver cap " +
              std::to_string(cap));
  const cmv::Matrix gram = m.adjoint() * m;
  const double defect =
      (gram - cmv::Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
  require(defect <= kUnitarityTolerance, ErrorKind::Numerical,
          "matrix is not unitary (defect " + std::to_string(defect) + ")");

  const std::vector<cplx> values = dense_eigenvalues(m);
  std::vector<double> phases, deviations;
  phases.reserve(values.size());
  deviations.reserve(values.size());
  double worst = 0.0;
  for (const cplx& z : values) {
    deviations.push_back(std::abs(std::abs(z) - 1.0));
    worst = std::max(worst, deviations.back());
    phases.push_back(phase_of(z));
  }
  require(worst <= kCircleTolerance, ErrorKind::Numerical,
          "eigenvalue off the unit circle by " + std::to_string(worst));
  return EigenphaseList(std::move(phases), chain_length, std::move(deviations));
}

EigenphaseList lee_yang_zeros(const CouplingSequence& ps, std::size_t cap) {
  const auto sequence = ising::interleave_with_zeros(ising::couplings_to_verblunsky(ps));
  require(sequence.size() <= cap, ErrorKind::Resource,
          "2N = " + std::to_string(sequence.size()) + " exceeds the eigensolver cap");
  return eigenphases(cmv::floquet_matrix(sequence, std::numbers::pi / 2), ps.size(), cap);
}

EigenphaseList zeros_of_discriminant(const CoefficientSequence& alphas, std::size_t cap) {
  const std::size_t n = alphas.size();
  if (n % 2 == 0) {
    require(n <= cap, ErrorKind::Resource, "period exceeds the eigensolver cap");
    return eigenphases(cmv::floquet_matrix(alphas, std::numbers::pi / 2), n, cap);
  }
  require(2 * n <= cap, ErrorKind::Resource, "doubled period exceeds the eigensolver cap");
  const EigenphaseList doubled = eigenphases(cmv::floquet_for_odd_discriminant(alphas), n, cap);
  const auto& t = doubled.phases();

  // Pair neighbours either as (0,1),(2,3),... or, when a pair straddles
  // phase 0, as (1,2),...,(2n-1,0); keep the tighter pairing.
  auto pairing_error = [&](std::size_t shift) {
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      worst = std::max(worst, circular_distance(t[(2 * k + shift) % (2 * n)],
                                                t[(2 * k + 1 + shift) % (2 * n)]));
    }
    return worst;
  };
  const double err0 = pairing_error(0), err1 = pairing_error(1);
  const std::size_t shift = err0 <= err1 ? 0 : 1;
  const double err = std::min(err0, err1);
  require(err <= kPairingTolerance, ErrorKind::Numerical,
          "doubled eigenvalues do not pair up (worst distance " + std::to_string(err) + ")");

  const auto& dev = doubled.deviations();
  std::vector<double> merged, merged_dev;
  merged.reserve(n);
  merged_dev.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = t[(2 * k + shift) % (2 * n)];
    double b = t[(2 * k + 1 + shift) % (2 * n)];
    if (b - a > 0.5) b -= 1.0;
    if (a - b > 0.5) b += 1.0;
    double mid = 0.5 * (a + b);
    mid -= std::floor(mid);
    if (mid >= 1.0) mid = 0.0;
    merged.push_back(mid);
    merged_dev.push_back(
        std::max(dev[(2 * k + shift) % (2 * n)], dev[(2 * k + 1 + shift) % (2 * n)]));
  }
  return EigenphaseList(std::move(merged), n, std::move(merged_dev));
}

IDSCurve::IDSCurve(const EigenphaseList& zeros, Normalization normalization, double reference)
    : reference_(reference - std::floor(reference)), normalization_(normalization) {
  offsets_.reserve(zeros.size());
  for (double t : zeros.phases()) offsets_.push_back(offset_from(t, reference_));
  std::sort(offsets_.begin(), offsets_.end());
  denominator_ = static_cast<double>(normalization == Normalization::PerPaper
                                         ? zeros.chain_length()
                                         : zeros.size());
  require(denominator_ > 0.0, ErrorKind::Shape, "IDS of an empty spectrum");
}

double IDSCurve::operator()(double theta) const {
  if (theta <= 0.0) return 0.0;
  if (theta >= 1.0) return total_mass();
  const auto count = std::upper_bound(offsets_.begin(), offsets_.end(), theta) - offsets_.begin();
  return static_cast<double>(count) / denominator_;
}

double IDSCurve::total_mass() const { return static_cast<double>(offsets_.size()) / denominator_; }

std::vector<std::pair<double, double>> IDSCurve::jumps() const {
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = 0; k < offsets_.size(); ++k) {
    if (k + 1 < offsets_.size() && offsets_[k + 1] == offsets_[k]) continue;
    out.emplace_back(offsets_[k], static_cast<double>(k + 1) / denominator_);
  }
  return out;
}

IDSCurve ids(const EigenphaseList& zeros, Normalization normalization, double reference) {
  return IDSCurve(zeros, normalization, reference);
}

double ids_sup_distance(const IDSCurve& a, const IDSCurve& b) {
  // Both are right-continuous step functions; the supremum is attained at a
  // jump point or just before one.
  std::vector<double> points(a.offsets());
  points.insert(points.end(), b.offsets().begin(), b.offsets().end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  double best = 0.0;
  double previous = 0.0;
  for (double t : points) {
    // Values on (previous, t) equal the values at `previous`.
    best = std::max(best, std::abs(a(previous) - b(previous)));
    best = std::max(best, std::abs(a(t) - b(t)));
    previous = t;
  }
  return best;
}

LabelGroup LabelGroup::integers() { return LabelGroup(Kind::Integers, {}); }

LabelGroup LabelGroup::rank2(double gamma) {
  require(std::isfinite(gamma), ErrorKind::Domain, "generator must be finite");
  return LabelGroup(Kind::Rank2, {gamma});
}

LabelGroup LabelGroup::generated(std::vector<double> generators) {
  for (double g : generators) require(std::isfinite(g), ErrorKind::Domain, "generator must be finite");
  return LabelGroup(Kind::Generated, std::move(generators));
}

LabelMatch match_label(double label, const LabelGroup& group, int m_max) {
  require(m_max >= 0, ErrorKind::Domain, "m_max must be nonnegative");
  LabelMatch best;
  best.n = std::lround(label);
  best.m = 0;
  best.residual = std::abs(label - static_cast<double>(best.n));
  if (group.kind() == LabelGroup::Kind::Integers) return best;

  auto better = [](const LabelMatch& c, const LabelMatch& b) {
    constexpr double kTie = 1e-15;
    if (c.residual < b.residual - kTie) return true;
    if (c.residual > b.residual + kTie) return false;
    if (std::labs(c.m) != std::labs(b.m)) return std::labs(c.m) < std::labs(b.m);
    return std::labs(c.n) < std::labs(b.n);
  };
  const auto& gens = group.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (long m = -m_max; m <= m_max; ++m) {
      LabelMatch c;
      c.m = m;
      c.generator_index = g;
      const double shifted = label - static_cast<double>(m) * gens[g];
      c.n = std::lround(shifted);
      c.residual = std::abs(shifted - static_cast<double>(c.n));
      if (better(c, best)) best = c;
    }
  }
  return best;
}

GapReport detect_gaps(const EigenphaseList& zeros, const GapOptions& options) {
  require(options.threshold_multiplier > 0.0, ErrorKind::Domain,
          "gap threshold multiplier must be positive");
  GapReport report;
  report.normalization = options.normalization;
  const auto& t = zeros.phases();
  const std::size_t n = t.size();
  if (n < 2) return report;
  report.mean_spacing = 1.0 / static_cast<double>(n);
  report.threshold = options.threshold_multiplier * report.mean_spacing;

  const IDSCurve curve(zeros, options.normalization, options.reference);
  const double reference = curve.reference();
  for (std::size_t k = 0; k < n; ++k) {
    const double left = t[k];
    const double right = (k + 1 < n) ? t[k + 1] : t[0] + 1.0;
    const double length = right - left;
    if (length <= report.threshold) continue;
    Gap gap;
    gap.left = left;
    gap.right = right;
    gap.length = length;
    // An arc holding the reference (or starting on it) sits at the start of
    // the count.
    const double left_offset = offset_from(left, reference);
    const bool contains_reference =
        offset_from(reference, left) < length || left_offset == 1.0;
    gap.label = contains_reference ? 0.0 : curve(left_offset);
    report.gaps.push_back(gap);
  }
  return report;
}

void label_gaps(GapReport& report, const LabelGroup& group, int m_max) {
  for (auto& gap : report.gaps) gap.match = match_label(gap.label, group, m_max);
}

std::vector<Gap> widest_gaps(const GapReport& report, std::size_t count) {
  std::vector<Gap> sorted = report.gaps;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Gap& a, const Gap& b) { return a.length > b.length; });
  if (sorted.size() > count) sorted.resize(count);
  return sorted;
}

MarkovLabels markov_label_group(const dynamics::StochasticMatrix& P, std::size_t max_word_len) {
  require(max_word_len >= 1, ErrorKind::Domain, "maximal word length must be >= 1");
  std::vector<double> p = dynamics::stationary_vector(P);
  const std::size_t k = P.size();

  std::vector<double> values;
  // Depth-first over admissible words; `mass` is mu of the current cylinder.
  std::function<void(std::size_t, std::size_t, double)> visit = [&](std::size_t last,
                                                                    std::size_t len,
                                                                    double mass) {
    values.push_back(mass);
    if (len == max_word_len) return;
    for (std::size_t b = 0; b < k; ++b) {
      if (P[last][b] > 0.0) visit(b, len + 1, mass * P[last][b]);
    }
  };
  for (std::size_t a = 0; a < k; ++a) {
    if (p[a] > 0.0) visit(a, 1, p[a]);
  }
  std::sort(values.begin(), values.end());
  std::vector<double> unique;
  for (double v : values) {
    if (unique.empty() || std::abs(v - unique.back()) > 1e-15 * std::max(1.0, std::abs(v))) {
      unique.push_back(v);
    }
  }
  return {std::move(p), LabelGroup::generated(std::move(unique))};
}

std::vector<double> spacings(const EigenphaseList& zeros) {
  const auto& t = zeros.phases();
  std::vector<double> out;
  if (t.empty()) return out;
  out.reserve(t.size());
  for (std::size_t k = 0; k + 1 < t.size(); ++k) out.push_back(t[k + 1] - t[k]);
  out.push_back(t.front() + 1.0 - t.back());
  return out;
}

SpacingHistogram gap_histogram(const EigenphaseList& zeros, std::size_t bins) {
  require(bins >= 1, ErrorKind::Domain, "histogram needs at least one bin");
  SpacingHistogram h;
  const std::vector<double> s = spacings(zeros);
  const double top = s.empty() ? 1.0 : *std::max_element(s.begin(), s.end());
  const double width = top > 0.0 ? top / static_cast<double>(bins) : 1.0;
  h.edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = width * static_cast<double>(i);
  h.edges.back() = top;
  h.counts.assign(bins, 0);
  for (double v : s) {
    auto idx = static_cast<std::size_t>(v / width);
    h.counts[std::min(idx, bins - 1)]++;
  }
  h.total = s.size();
  return h;
}

}  // namespace leeyang::spectral
