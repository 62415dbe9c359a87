#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "leeyang/sequences.hpp"

namespace gen {

using leeyang::cplx;

// Seeded source for the property tests; failures print the case index so a
// run can be reproduced.
struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(eng); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(eng);
  }
  cplx on_circle() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }
  // Uniform in the disk of radius r.
  cplx in_disk(double r = 0.95) {
    return std::polar(r * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * std::numbers::pi));
  }
  std::vector<double> couplings(std::size_t n, double lo = 0.05, double hi = 3.0) {
    std::vector<double> ps(n);
    for (auto& p : ps) p = uniform(lo, hi);
    return ps;
  }
  leeyang::CoefficientSequence alphas(std::size_t n, double r = 0.95) {
    std::vector<cplx> a(n);
    for (auto& v : a) v = in_disk(r);
    return leeyang::CoefficientSequence(std::move(a));
  }
  std::vector<std::vector<double>> stochastic(std::size_t k) {
    std::vector<std::vector<double>> P(k, std::vector<double>(k));
    for (auto& row : P) {
      double s = 0.0;
      for (auto& v : row) s += (v = uniform(0.05, 1.0));
      for (auto& v : row) v /= s;
    }
    return P;
  }

  std::mt19937_64 eng;
};

}  // namespace gen
