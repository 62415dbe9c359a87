#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "leeyang/io.hpp"

namespace leeyang::verify {

/// One identity or certificate. `residual` is compared with `tolerance`
/// using `at_least` (divergence checks) or at_most (everything else).
struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool at_least = false;
  bool pass = false;
  std::size_t cases = 0;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  bool all_pass() const;
};

Check make_check(std::string name, double residual, double tolerance, std::size_t cases,
                 std::string detail = {}, bool at_least = false);

/// Largest circular distance after the best cyclic alignment of the two sorted phase lists.
double phase_multiset_distance(std::vector<double> a, std::vector<double> b);

/// Trace of the Ising transfer product against spin enumeration, relative error.
Check trace_formula(std::uint64_t seed, std::size_t cases, double tol);
/// det(z - F_N(pi/2)) = z^{N/2} (prod rho) Delta_N(z), N in {2, 4, 8, 16}.
Check determinant_identity(std::uint64_t seed, std::size_t points, double tol);
/// det(z - F_{2N}(pi)) = z^N (prod rho) (Delta_{2N} + 2).
Check determinant_identity_pi(std::uint64_t seed, std::size_t points, double tol);
/// S(alpha, z) S(0, z) = S(alpha, z^2), entrywise.
Check szego_doubling(std::uint64_t seed, std::size_t cases, double tol);
/// Delta_{2N} = Delta_N^2 - 2, relative to max(1, |Delta_{2N}|).
Check discriminant_doubling(std::uint64_t seed, std::size_t cases, double tol);
/// Both sides of the similarity witness, entrywise relative to the largest entry.
Check similarity(std::uint64_t seed, std::size_t cases, double tol);
/// Band reordering for every even N in [6, max_n]: no entry beyond offset 4
/// and the eigenphases agree to `tol`.
Check bandwidth(std::uint64_t seed, std::size_t max_n, double tol,
                std::size_t cap = spectral::kDefaultSolverCap);
/// max ||lambda| - 1| over the zeros of a model.
Check unit_circle(const model::Model& model, double tol,
                  std::size_t cap = spectral::kDefaultSolverCap);
/// Coefficients at the working precision against twice that precision.
Check precision_gate(const model::Model& model, double tol);
/// Mean torus distance between the double-only cat-map orbit and the exact
/// one over steps [from, n). Passes when at least `floor`.
Check cat_map_double_divergence(std::size_t n, std::size_t from, double floor);
/// ||pP - p||_1 and |sum p - 1| on random primitive k x k matrices.
Check stationary(std::uint64_t seed, std::size_t cases, std::size_t k, double tol);

/// Default suite driven by a RunConfig: identities on seeded random inputs
/// plus the unit-circle certificate of the configured model.
Report run_suite(const io::RunConfig& config);

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const Report& r);

}  // namespace leeyang::verify
