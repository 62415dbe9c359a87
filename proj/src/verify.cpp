#include "leeyang/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "leeyang/cmv.hpp"
#include "leeyang/dynamics.hpp"
#include "leeyang/error.hpp"
#include "leeyang/hp_fraction.hpp"
#include "leeyang/ising.hpp"
#include "leeyang/spectral.hpp"
#include "leeyang/szego.hpp"

namespace leeyang::verify {

namespace {

using nlohmann::json;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(eng); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(eng);
  }
  cplx on_circle() { return std::polar(1.0, uniform(0.0, kTwoPi)); }
  cplx in_disk(double r) { return std::polar(r * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, kTwoPi)); }
  CoefficientSequence alphas(std::size_t n, double r = 0.95) {
    std::vector<cplx> a(n);
    for (auto& v : a) v = in_disk(r);
    return CoefficientSequence(std::move(a));
  }
  std::mt19937_64 eng;
};

double max_abs(const szego::Matrix2& m) { return m.cwiseAbs().maxCoeff(); }

double torus_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 1.0);
  return std::min(d, 1.0 - d);
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Check make_check(std::string name, double residual, double tolerance, std::size_t cases,
                 std::string detail, bool at_least) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  c.at_least = at_least;
  c.cases = cases;
  c.detail = std::move(detail);
  c.pass = std::isfinite(residual) && (at_least ? residual >= tolerance : residual <= tolerance);
  return c;
}

double phase_multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  if (a.empty()) return 0.0;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double best = INFINITY;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size() && worst < best; ++k)
      worst = std::max(worst, torus_distance(a[k], b[(k + shift) % b.size()]));
    best = std::min(best, worst);
    if (best == 0.0) break;
  }
  return best;
}

Check trace_formula(std::uint64_t seed, std::size_t cases, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < cases; ++k) {
    std::vector<double> ps(rng.index(1, 12));
    for (auto& p : ps) p = rng.uniform(1e-3, 3.0);
    const cplx zeta = rng.on_circle();
    const cplx brute = ising::partition_bruteforce(ps, zeta);
    const cplx tr = ising::partition_via_trace(ps, zeta);
    worst = std::max(worst, std::abs(tr - brute) / std::abs(brute));
  }
  return make_check("trace_formula", worst, tol, cases, "N <= 12, p in (0, 3), zeta on the circle");
}

Check determinant_identity(std::uint64_t seed, std::size_t points, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t n : {2u, 4u, 8u, 16u}) {
    const auto a = rng.alphas(n);
    for (std::size_t k = 0; k < points; ++k)
      worst = std::max(worst, szego::det_floquet_identity_check(a, rng.on_circle()).relative_residual);
  }
  return make_check("determinant_identity", worst, tol, 4 * points, "theta = pi/2, N in {2, 4, 8, 16}");
}

Check determinant_identity_pi(std::uint64_t seed, std::size_t points, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t n : {2u, 4u, 8u, 16u}) {
    const auto a = rng.alphas(n);
    for (std::size_t k = 0; k < points; ++k)
      worst = std::max(worst, szego::det_floquet_identity_check_pi(a, rng.on_circle()).relative_residual);
  }
  return make_check("determinant_identity_pi", worst, tol, 4 * points, "theta = pi, N in {2, 4, 8, 16}");
}

Check szego_doubling(std::uint64_t seed, std::size_t cases, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < cases; ++k) {
    const cplx a = rng.in_disk(0.99), z = rng.on_circle();
    const szego::Matrix2 p = szego::szego_matrix(a, z).entries * szego::szego_matrix(0.0, z).entries;
    worst = std::max(worst, max_abs(p - szego::szego_matrix(a, z * z).entries));
  }
  return make_check("szego_doubling", worst, tol, cases, "|alpha| < 0.99, z on the circle");
}

Check discriminant_doubling(std::uint64_t seed, std::size_t cases, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < cases; ++k) {
    const auto a = rng.alphas(2 * rng.index(1, 16));
    const cplx z = rng.on_circle();
    const cplx d = szego::discriminant(a, z).value;
    const cplx d2 = szego::discriminant(a.doubled(), z).value;
    worst = std::max(worst, std::abs(d2 - (d * d - 2.0)) / std::max(1.0, std::abs(d2)));
  }
  return make_check("discriminant_doubling", worst, tol, cases, "even N <= 32, z on the circle");
}

Check similarity(std::uint64_t seed, std::size_t cases, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < cases; ++k) {
    const double beta = std::exp(rng.uniform(1e-2, 3.0));
    const auto [lhs, rhs] = szego::similarity_witness(beta, rng.on_circle());
    worst = std::max(worst, max_abs(lhs - rhs) / std::max(1.0, max_abs(lhs)));
  }
  return make_check("similarity_witness", worst, tol, cases, "beta = e^p, p in (0, 3)");
}

Check bandwidth(std::uint64_t seed, std::size_t max_n, double tol, std::size_t cap) {
  Rng rng(seed);
  double worst = 0.0;
  std::size_t widest = 0, cases = 0, at24 = 0;
  for (std::size_t n = 6; n <= max_n; n += 2) {
    const auto f = cmv::floquet_matrix(rng.alphas(n), rng.uniform(0.0, kTwoPi));
    const auto g = cmv::reorder(f, cmv::band_permutation(n));
    const std::size_t off = cmv::max_offset(g);
    widest = std::max(widest, off);
    if (n == 24) at24 = off;
    const auto e1 = spectral::eigenphases(f, 0, cap);
    const auto e2 = spectral::eigenphases(g, 0, cap);
    worst = std::max(worst, phase_multiset_distance(e1.phases(), e2.phases()));
    ++cases;
  }
  std::ostringstream detail;
  detail << "max offset " << widest << " over even N in [6, " << max_n << "]";
  if (max_n >= 24) detail << "; N = 24 offset " << at24;
  Check c = make_check("bandwidth", worst, tol, cases, detail.str());
  c.pass = c.pass && widest <= 4;
  return c;
}

Check unit_circle(const model::Model& m, double tol, std::size_t cap) {
  const auto zeros = model::model_zeros(m, cap);
  std::ostringstream detail;
  detail << model::to_string(m.spec.kind) << ", " << zeros.size() << " zeros, pipeline "
         << model::to_string(m.pipeline);
  return make_check("unit_circle", zeros.max_deviation(), tol, zeros.size(), detail.str());
}

Check precision_gate(const model::Model& m, double tol) {
  const auto twice = model::recompute_doubled_precision(m);
  double worst = 0.0;
  for (std::size_t i = 0; i < m.alphas.size(); ++i) worst = std::max(worst, std::abs(twice[i] - m.alphas[i]));
  std::ostringstream detail;
  detail << model::to_string(m.spec.kind) << ", N = " << m.alphas.size() << ", " << m.precision_bits
         << " bits against " << 2 * m.precision_bits;
  return make_check("precision_gate", worst, tol, m.alphas.size(), detail.str());
}

Check cat_map_double_divergence(std::size_t n, std::size_t from, double floor) {
  require(from < n, ErrorKind::Config, "divergence window is empty");
  const auto bits = dynamics::cat_map_bits(n);
  const auto x = HighPrecisionFraction::parse("1/sqrt(2)", bits);
  const auto y = HighPrecisionFraction::parse("1/sqrt(3)", bits);
  const auto exact = dynamics::cat_map_orbit(x, y, n);
  const auto naive = dynamics::cat_map_orbit_double(x.to_double(), y.to_double(), n);
  double sum = 0.0, early = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = std::max(torus_distance(naive[k].first, exact[k].first.to_double()),
                              torus_distance(naive[k].second, exact[k].second.to_double()));
    if (k >= from) sum += d;
    if (k < 15) early = std::max(early, d);
  }
  const double mean = sum / static_cast<double>(n - from);
  std::ostringstream detail;
  detail << "mean torus error over steps [" << from << ", " << n << "); max error before step 15: " << early;
  return make_check("cat_map_double_divergence", mean, floor, n - from, detail.str(), true);
}

Check stationary(std::uint64_t seed, std::size_t cases, std::size_t k, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t t = 0; t < cases; ++t) {
    dynamics::StochasticMatrix P(k, std::vector<double>(k));
    for (auto& row : P) {
      double s = 0.0;
      for (auto& v : row) s += (v = rng.uniform(0.0, 1.0));
      for (auto& v : row) v /= s;
    }
    const auto p = dynamics::stationary_vector(P);
    double res = 0.0, total = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      double pj = 0.0;
      for (std::size_t i = 0; i < k; ++i) pj += p[i] * P[i][j];
      res += std::abs(pj - p[j]);
      total += p[j];
    }
    worst = std::max({worst, res, std::abs(total - 1.0)});
  }
  return make_check("stationary_vector", worst, tol, cases, std::to_string(k) + " x " + std::to_string(k));
}

Report run_suite(const io::RunConfig& config) {
  io::validate(config);
  const io::Tolerances& t = config.tolerances;
  const std::uint64_t s = config.seed;
  Report r;
  r.checks.push_back(trace_formula(s, 200, t.trace));
  r.checks.push_back(determinant_identity(s + 1, 50, t.determinant));
  r.checks.push_back(determinant_identity_pi(s + 2, 50, t.determinant));
  r.checks.push_back(szego_doubling(s + 3, 200, t.szego));
  r.checks.push_back(discriminant_doubling(s + 4, 200, t.discriminant));
  r.checks.push_back(similarity(s + 5, 200, t.similarity));
  r.checks.push_back(bandwidth(s + 6, 128, t.bandwidth_phase, config.solver_cap));
  r.checks.push_back(stationary(s + 7, 50, 5, t.stationary));
  const auto m = model::build_model(config.model);
  r.checks.push_back(unit_circle(m, t.circle, config.solver_cap));
  if (m.precision_bits > 0) r.checks.push_back(precision_gate(m, t.precision));
  return r;
}

json to_json(const Check& c) {
  return json{{"name", c.name},   {"residual", c.residual}, {"tolerance", c.tolerance},
              {"comparison", c.at_least ? ">=" : "<="},     {"pass", c.pass},
              {"cases", c.cases}, {"detail", c.detail}};
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return json{{"all_pass", r.all_pass()}, {"checks", checks}};
}

}  // namespace leeyang::verify
