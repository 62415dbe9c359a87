#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leeyang/hp_fraction.hpp"
#include "leeyang/sequences.hpp"

namespace leeyang::dynamics {

/// Default ceiling on generated word lengths (letters).
inline constexpr std::size_t kDefaultWordCap = std::size_t{1} << 26;

/// Finite word over a declared alphabet of single-character letters.
class SymbolicWord {
 public:
  SymbolicWord(std::string letters, std::string alphabet);

  const std::string& letters() const noexcept { return letters_; }
  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  std::size_t count(char letter) const;

  friend bool operator==(const SymbolicWord&, const SymbolicWord&) = default;

 private:
  std::string letters_;
  std::string alphabet_;
};

using SubstitutionRules = std::map<char, std::string>;

/// u_k = S^k(a) for the Fibonacci substitution a -> ab, b -> a.
/// |u_k| = F_{k+2} with F_1 = F_2 = 1.
SymbolicWord fibonacci_word(unsigned k, std::size_t cap = kDefaultWordCap);

/// First n letters of the fixed point lim S^k(seed). The seed must be
/// prolongable: rules[seed] starts with seed and has length >= 2.
SymbolicWord substitution_fixed_point(const SubstitutionRules& rules, char seed, std::size_t n,
                                      std::size_t cap = kDefaultWordCap);

/// p_n = map(word_n).
CouplingSequence couplings_from_word(const SymbolicWord& word, const std::map<char, double>& map);

using OrbitPoint = std::pair<HighPrecisionFraction, HighPrecisionFraction>;

/// Working precision for n cat-map steps: ceil(1.39 (2n+1)) + 64 bits.
std::uint32_t cat_map_bits(std::size_t n);
/// Working precision for n skew-shift steps: ceil(2 log2(n+1)) + 128 bits.
std::uint32_t skew_shift_bits(std::size_t n);

/// Iterates T^k(x0, y0), k = 0..n-1, of the cat map (x, y) -> (2x + y, x + y)
/// through the closed form (F_{2k+1} x + F_{2k} y, F_{2k} x + F_{2k-1} y)
/// with exact integer Fibonacci numbers. Inputs below cat_map_bits(n) are
/// zero-padded, i.e. the orbit of their exact dyadic value is computed.
std::vector<OrbitPoint> cat_map_orbit(const HighPrecisionFraction& x0,
                                      const HighPrecisionFraction& y0, std::size_t n);

/// One step of the cat map, exact at the input precision.
OrbitPoint cat_map_step(const OrbitPoint& p);

/// Same map iterated in IEEE double. Loses all accuracy after ~40 steps;
/// kept to demonstrate why the fixed-point engine is needed.
std::vector<std::pair<double, double>> cat_map_orbit_double(double x0, double y0, std::size_t n);

/// T^k(x, y) = (x + k gamma, y + k x + k(k-1)/2 gamma), k = 0..n-1.
std::vector<OrbitPoint> skew_shift_orbit(const HighPrecisionFraction& gamma,
                                         const HighPrecisionFraction& x,
                                         const HighPrecisionFraction& y, std::size_t n);

/// alpha = offset + amplitude * cos(2 pi y).
struct SamplingFunction {
  double offset = 0.5;
  double amplitude = 1.0 / 3.0;

  static SamplingFunction shifted_cosine() { return {0.5, 1.0 / 3.0}; }
  static SamplingFunction pure_cosine(double lambda) { return {0.0, lambda}; }
  /// Throws unless |offset| + |amplitude| < 1.
  static SamplingFunction custom(double offset, double amplitude);

  double bound() const;
};

/// alpha_n = f(orbit_n), f evaluated on the second coordinate.
CoefficientSequence sample_orbit(const std::vector<OrbitPoint>& orbit, const SamplingFunction& f);

/// Unitary almost-Mathieu coefficients, 0-based storage index i equal to the
/// model index: alpha_{2n} = sqrt(1 - lambda2^2), alpha_{2n-1} = lambda1 cos(2 pi (n gamma + x)).
/// Requires 0 < lambda1, lambda2 < 1.
CoefficientSequence uamo_coefficients(double lambda1, double lambda2,
                                      const HighPrecisionFraction& gamma,
                                      const HighPrecisionFraction& x, std::size_t n);
CoefficientSequence uamo_coefficients(double lambda1, double lambda2, double gamma, double x,
                                      std::size_t n);

using StochasticMatrix = std::vector<std::vector<double>>;

/// Throws unless P is square, nonnegative and row-stochastic to 1e-12.
void validate_stochastic(const StochasticMatrix& P);
/// Some power P^k, k <= |A|^2, is strictly positive.
bool is_primitive(const StochasticMatrix& P);
/// Invariant probability vector (pP = p, sum p = 1) by power iteration.
std::vector<double> stationary_vector(const StochasticMatrix& P);

/// Sample path of a stationary Markov chain over letters 'a', 'b', ...,
/// started from the stationary distribution. Deterministic in `seed`.
SymbolicWord markov_word(const StochasticMatrix& transition, std::size_t n,
                         std::uint64_t seed);

}  // namespace leeyang::dynamics
