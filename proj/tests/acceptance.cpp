// One line per acceptance criterion; exit status 1 if any line fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "leeyang/dynamics.hpp"
#include "leeyang/ising.hpp"
#include "leeyang/model.hpp"
#include "leeyang/spectral.hpp"
#include "leeyang/verify.hpp"
#include "oracles.hpp"

using namespace leeyang;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = budget_s <= 0.0 || secs <= budget_s;
  const bool ok = o.pass && in_time;
  failures += !ok;
  std::printf("%s  %-28s %s [%.1f s%s]\n", ok ? "PASS" : "FAIL", name, o.detail.c_str(), secs,
              in_time ? "" : ", over budget");
  std::fflush(stdout);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Outcome from(const verify::Check& c) {
  return {c.pass, c.name + " " + sci(c.residual) + (c.at_least ? " >= " : " <= ") + sci(c.tolerance) +
                      " (" + c.detail + ")"};
}

Outcome both(const verify::Check& a, const verify::Check& b) {
  const auto x = from(a), y = from(b);
  return {x.pass && y.pass, x.detail + "; " + y.detail};
}

}  // namespace

int main() {
  constexpr std::uint64_t seed = 42;

  criterion("trace-formula", 10.0, [] {
    gen::Rng rng(seed);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const auto ps = rng.couplings(rng.index(1, 12), 1e-3, 3.0);
      const cplx zeta = rng.on_circle();
      const cplx brute = oracle::partition_sum(ps, zeta);
      worst = std::max(worst, std::abs(ising::partition_via_trace(ps, zeta) - brute) / std::abs(brute));
    }
    return Outcome{worst <= 1e-10, "200 cases, max relative error " + sci(worst) + " <= 1e-10"};
  });

  criterion("zero-set-equivalence", 30.0, [] {
    gen::Rng rng(seed + 1);
    double worst = 0.0;
    bool counts = true;
    int cases = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
      for (int t = 0; t < 6; ++t, ++cases) {
        const auto ps = rng.couplings(n, 0.05, 3.0);
        const auto zeros = spectral::lee_yang_zeros(CouplingSequence(ps));
        const auto roots = oracle::lee_yang_phases(ps);
        counts = counts && zeros.size() == 2 * n && roots.size() == 2 * n;
        worst = std::max(worst, oracle::multiset_distance(zeros.phases(), roots));
      }
    }
    return Outcome{counts && worst <= 1e-7, std::to_string(cases) + " chains N <= 8, counts " +
                                                (counts ? "equal" : "DIFFER") + ", max phase distance " +
                                                sci(worst) + " <= 1e-7"};
  });

  criterion("unit-circle-certificate", 0.0, [] {
    std::vector<model::ModelSpec> specs;
    model::ModelSpec fib;
    fib.iterations = 15;  // |u_15| = 1597
    specs.push_back(fib);
    model::ModelSpec cat;
    cat.kind = model::ModelKind::CatMap;
    cat.length = 1600;
    specs.push_back(cat);
    model::ModelSpec skew;
    skew.kind = model::ModelKind::SkewShift;
    skew.length = 1600;
    specs.push_back(skew);
    skew.sampling = model::SamplingKind::PureCosine;
    specs.push_back(skew);
    model::ModelSpec uamo;
    uamo.kind = model::ModelKind::Uamo;
    uamo.length = 1600;
    specs.push_back(uamo);
    double worst = 0.0;
    std::size_t eigenvalues = 0;
    for (const auto& s : specs) {
      const auto c = verify::unit_circle(model::build_model(s), 1e-10);
      worst = std::max(worst, c.residual);
      eigenvalues += c.cases;
    }
    return Outcome{worst <= 1e-10, "fibonacci 1597, cat-map/skew-shift/pure-cosine/uamo 1600: " +
                                       std::to_string(eigenvalues) + " eigenvalues, max ||l|-1| " + sci(worst) +
                                       " <= 1e-10"};
  });

  criterion("determinant-identity", 0.0, [] {
    return both(verify::determinant_identity(seed + 2, 50, 1e-9),
                verify::determinant_identity_pi(seed + 3, 50, 1e-9));
  });

  criterion("algebraic-identities", 0.0, [] {
    const auto a = verify::szego_doubling(seed + 4, 1000, 1e-13);
    const auto b = verify::discriminant_doubling(seed + 5, 500, 1e-10);
    const auto c = verify::similarity(seed + 6, 1000, 1e-13);
    const auto x = both(a, b), y = from(c);
    return Outcome{x.pass && y.pass, x.detail + "; " + y.detail};
  });

  criterion("bandwidth", 0.0, [] { return from(verify::bandwidth(seed + 7, 512, 1e-10)); });

  criterion("fibonacci-gap-labels", 300.0, [] {
    model::ModelSpec s;
    s.iterations = 14;  // |u_14| = 987
    const auto m = model::build_model(s);
    const auto zeros = model::model_zeros(m);
    auto report = spectral::detect_gaps(zeros);
    spectral::label_gaps(report, spectral::LabelGroup::rank2((std::sqrt(5.0) - 1.0) / 2.0), 30);
    const auto widest = spectral::widest_gaps(report, 10);
    const double bound = 10.0 / static_cast<double>(zeros.chain_length());
    double worst = 0.0;
    std::ostringstream labels;
    for (const auto& g : widest) {
      worst = std::max(worst, g.match->residual);
      labels << " " << g.match->n << (g.match->m < 0 ? "" : "+") << g.match->m << "a";
    }
    return Outcome{widest.size() == 10 && worst <= bound,
                   "N = " + std::to_string(zeros.chain_length()) + ", " + std::to_string(widest.size()) +
                       " widest of " + std::to_string(report.gaps.size()) + " gaps, max residual " + sci(worst) +
                       " <= 10/N = " + sci(bound) + ", labels" + labels.str()};
  });

  criterion("cat-map-precision-gate", 0.0, [] {
    model::ModelSpec s;
    s.kind = model::ModelKind::CatMap;
    s.length = 200;
    return both(verify::precision_gate(model::build_model(s), 1e-14),
                verify::cat_map_double_divergence(200, 40, 0.1));
  });

  criterion("markov-label-generators", 0.0, [] {
    const auto random = from(verify::stationary(seed + 8, 200, 5, 1e-12));
    double worst = 0.0;
    auto exact = [&](const dynamics::StochasticMatrix& P, double p0) {
      const auto p = dynamics::stationary_vector(P);
      worst = std::max({worst, std::abs(p[0] - p0), std::abs(p[1] - (1.0 - p0))});
    };
    exact({{0.0, 1.0}, {0.5, 0.5}}, 1.0 / 3.0);
    exact({{0.5, 0.5}, {0.5, 0.5}}, 0.5);
    exact({{0.75, 0.25}, {0.5, 0.5}}, 2.0 / 3.0);
    exact({{0.9, 0.1}, {0.3, 0.7}}, 0.75);
    exact({{0.2, 0.8}, {0.6, 0.4}}, 3.0 / 7.0);
    return Outcome{random.pass && worst <= 1e-15,
                   random.detail + "; 2-state closed forms max error " + sci(worst) + " <= 1e-15"};
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
