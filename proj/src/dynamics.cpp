#include "leeyang/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "leeyang/error.hpp"

namespace leeyang::dynamics {

SymbolicWord::SymbolicWord(std::string letters, std::string alphabet)
    : letters_(std::move(letters)), alphabet_(std::move(alphabet)) {
  require(!letters_.empty(), ErrorKind::Domain, "empty word");
  for (char c : letters_) {
    require(alphabet_.find(c) != std::string::npos, ErrorKind::Domain,
            std::string("letter '") + c + "' is not in the alphabet");
  }
}

std::size_t SymbolicWord::count(char letter) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

SymbolicWord fibonacci_word(unsigned k, std::size_t cap) {
  // |u_k| = F_{k+2}; check the cap before allocating anything.
  std::size_t prev = 1, len = 1;  // F_1, F_2
  for (unsigned i = 0; i < k; ++i) {
    std::size_t next = len + prev;
    require(next <= cap && next >= len, ErrorKind::Resource,
            "fibonacci word u_" + std::to_string(k) + " exceeds the length cap");
    prev = len;
    len = next;
  }
  std::string w = "a";
  std::string next;
  for (unsigned i = 0; i < k; ++i) {
    next.clear();
    next.reserve(w.size() * 2);
    for (char c : w) next += (c == 'a') ? "ab" : "a";
    w.swap(next);
  }
  return SymbolicWord(std::move(w), "ab");
}

SymbolicWord substitution_fixed_point(const SubstitutionRules& rules, char seed, std::size_t n,
                                      std::size_t cap) {
  require(n >= 1, ErrorKind::Domain, "requested prefix length must be >= 1");
  require(n <= cap, ErrorKind::Resource, "requested prefix exceeds the length cap");
  std::string alphabet;
  for (const auto& [letter, image] : rules) {
    require(!image.empty(), ErrorKind::Domain, std::string("empty image for '") + letter + "'");
    alphabet += letter;
  }
  for (const auto& [letter, image] : rules) {
    for (char c : image) {
      require(rules.count(c) != 0, ErrorKind::Domain,
              std::string("rule image contains letter '") + c + "' outside the alphabet");
    }
  }
  auto it = rules.find(seed);
  require(it != rules.end(), ErrorKind::Domain, "seed letter has no rule");
  require(it->second.size() >= 2 && it->second.front() == seed, ErrorKind::Domain,
          "substitution is not prolongable at the seed");

  std::string w(1, seed);
  std::string next;
  while (w.size() < n) {
    next.clear();
    for (char c : w) {
      next += rules.at(c);
      if (next.size() >= n) break;
    }
    w.swap(next);
  }
  w.resize(n);
  return SymbolicWord(std::move(w), alphabet);
}

CouplingSequence couplings_from_word(const SymbolicWord& word, const std::map<char, double>& map) {
  std::vector<double> ps;
  ps.reserve(word.size());
  for (char c : word.letters()) {
    auto it = map.find(c);
    require(it != map.end(), ErrorKind::Domain, std::string("no coupling for letter '") + c + "'");
    require(it->second > 0.0, ErrorKind::Domain,
            std::string("coupling for letter '") + c + "' must be positive");
    ps.push_back(it->second);
  }
  return CouplingSequence(std::move(ps));
}

std::uint32_t cat_map_bits(std::size_t n) {
  double bits = std::ceil(1.39 * (2.0 * static_cast<double>(n) + 1.0)) + 64.0;
  require(bits <= static_cast<double>(precision_cap()), ErrorKind::Resource,
          "cat map orbit of length " + std::to_string(n) + " needs more than the precision cap");
  return static_cast<std::uint32_t>(bits);
}

std::uint32_t skew_shift_bits(std::size_t n) {
  double bits = std::ceil(2.0 * std::log2(static_cast<double>(n) + 1.0)) + 128.0;
  require(bits <= static_cast<double>(precision_cap()), ErrorKind::Resource,
          "skew shift orbit needs more than the precision cap");
  return static_cast<std::uint32_t>(bits);
}

std::vector<OrbitPoint> cat_map_orbit(const HighPrecisionFraction& x0,
                                      const HighPrecisionFraction& y0, std::size_t n) {
  const std::uint32_t bits = std::max({cat_map_bits(n), x0.bits(), y0.bits()});
  const HighPrecisionFraction x = x0.with_bits(bits);
  const HighPrecisionFraction y = y0.with_bits(bits);

  std::vector<OrbitPoint> orbit;
  orbit.reserve(n);
  // (f_odd, f_even, f_prev) = (F_{2k+1}, F_{2k}, F_{2k-1}), starting at k = 0.
  mpz_class f_odd = 1, f_even = 0, f_prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    orbit.emplace_back(x * f_odd + y * f_even, x * f_even + y * f_prev);
    mpz_class next_even = f_odd + f_even;
    mpz_class next_odd = next_even + f_odd;
    f_prev = f_odd;
    f_even = std::move(next_even);
    f_odd = std::move(next_odd);
  }
  return orbit;
}

OrbitPoint cat_map_step(const OrbitPoint& p) {
  const auto& [x, y] = p;
  return {x * 2 + y, x + y};
}

std::vector<std::pair<double, double>> cat_map_orbit_double(double x0, double y0, std::size_t n) {
  std::vector<std::pair<double, double>> orbit;
  orbit.reserve(n);
  double x = x0 - std::floor(x0);
  double y = y0 - std::floor(y0);
  for (std::size_t k = 0; k < n; ++k) {
    orbit.emplace_back(x, y);
    double nx = 2.0 * x + y;
    double ny = x + y;
    x = nx - std::floor(nx);
    y = ny - std::floor(ny);
  }
  return orbit;
}

std::vector<OrbitPoint> skew_shift_orbit(const HighPrecisionFraction& gamma,
                                         const HighPrecisionFraction& x,
                                         const HighPrecisionFraction& y, std::size_t n) {
  const std::uint32_t bits = std::max({skew_shift_bits(n), gamma.bits(), x.bits(), y.bits()});
  const HighPrecisionFraction g = gamma.with_bits(bits);
  const HighPrecisionFraction x0 = x.with_bits(bits);
  const HighPrecisionFraction y0 = y.with_bits(bits);

  std::vector<OrbitPoint> orbit;
  orbit.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class kk(static_cast<unsigned long>(k));
    mpz_class tri = kk * (kk - 1) / 2;
    orbit.emplace_back(x0 + g * kk, y0 + x0 * kk + g * tri);
  }
  return orbit;
}

SamplingFunction SamplingFunction::custom(double offset, double amplitude) {
  SamplingFunction f{offset, amplitude};
  require(std::isfinite(offset) && std::isfinite(amplitude) && f.bound() < 1.0, ErrorKind::Domain,
          "sampling function must satisfy |offset| + |amplitude| < 1");
  return f;
}

double SamplingFunction::bound() const { return std::abs(offset) + std::abs(amplitude); }

CoefficientSequence sample_orbit(const std::vector<OrbitPoint>& orbit, const SamplingFunction& f) {
  require(f.bound() < 1.0, ErrorKind::Domain,
          "sampling function range leaves the open unit disk");
  std::vector<double> alphas;
  alphas.reserve(orbit.size());
  for (const auto& point : orbit) alphas.push_back(f.offset + f.amplitude * point.second.cos_2pi());
  return CoefficientSequence::from_real(alphas);
}

CoefficientSequence uamo_coefficients(double lambda1, double lambda2,
                                      const HighPrecisionFraction& gamma,
                                      const HighPrecisionFraction& x, std::size_t n) {
  require(lambda1 > 0.0 && lambda1 < 1.0, ErrorKind::Domain, "lambda1 must lie in (0, 1)");
  require(lambda2 > 0.0 && lambda2 < 1.0, ErrorKind::Domain, "lambda2 must lie in (0, 1)");
  const double even_value = std::sqrt(1.0 - lambda2 * lambda2);
  std::vector<double> alphas(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 2 == 0) {
      alphas[i] = even_value;
    } else {
      // i = 2m - 1
      const mpz_class m(static_cast<unsigned long>((i + 1) / 2));
      alphas[i] = lambda1 * (gamma * m + x).cos_2pi();
    }
  }
  return CoefficientSequence::from_real(alphas);
}

CoefficientSequence uamo_coefficients(double lambda1, double lambda2, double gamma, double x,
                                      std::size_t n) {
  const std::uint32_t bits = skew_shift_bits(n);
  return uamo_coefficients(lambda1, lambda2, HighPrecisionFraction::from_double(gamma, bits),
                           HighPrecisionFraction::from_double(x, bits), n);
}

void validate_stochastic(const StochasticMatrix& P) {
  require(!P.empty(), ErrorKind::Domain, "empty transition matrix");
  for (const auto& row : P) {
    require(row.size() == P.size(), ErrorKind::Shape, "transition matrix must be square");
    double sum = 0.0;
    for (double v : row) {
      require(std::isfinite(v) && v >= 0.0, ErrorKind::Domain,
              "transition probabilities must be nonnegative");
      sum += v;
    }
    require(std::abs(sum - 1.0) <= 1e-12, ErrorKind::Domain,
            "transition matrix rows must sum to 1");
  }
}

bool is_primitive(const StochasticMatrix& P) {
  const std::size_t n = P.size();
  using BoolMatrix = std::vector<std::vector<char>>;
  BoolMatrix base(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i][j] = P[i][j] > 0.0;
  BoolMatrix power = base;
  const std::size_t max_power = std::max<std::size_t>(1, n * n);
  for (std::size_t k = 1; k <= max_power; ++k) {
    bool positive = true;
    for (const auto& row : power)
      for (char v : row) positive = positive && v;
    if (positive) return true;
    BoolMatrix next(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m)
        if (power[i][m])
          for (std::size_t j = 0; j < n; ++j) next[i][j] = next[i][j] || base[m][j];
    power.swap(next);
  }
  return false;
}

std::vector<double> stationary_vector(const StochasticMatrix& P) {
  validate_stochastic(P);
  require(is_primitive(P), ErrorKind::Domain, "transition matrix is not primitive");
  const std::size_t n = P.size();
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  // Iterate the lazy chain (I + P)/2: same invariant vector, no periodic
  // oscillation, and the residual of P itself is tracked for the stop rule.
  constexpr int kMaxIterations = 1'000'000;
  for (int it = 0; it < kMaxIterations; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) next[j] += p[i] * P[i][j];
    double residual = 0.0, total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      residual += std::abs(next[j] - p[j]);
      next[j] = 0.5 * (next[j] + p[j]);
      total += next[j];
    }
    for (double& v : next) v /= total;
    p.swap(next);
    if (residual <= 1e-15) break;
  }
  return p;
}

SymbolicWord markov_word(const StochasticMatrix& transition, std::size_t n, std::uint64_t seed) {
  require(n >= 1, ErrorKind::Domain, "markov word length must be >= 1");
  const std::vector<double> p = stationary_vector(transition);
  require(transition.size() <= 26, ErrorKind::Domain, "at most 26 letters are supported");
  std::string alphabet;
  for (std::size_t i = 0; i < transition.size(); ++i) alphabet += static_cast<char>('a' + i);

  std::mt19937_64 rng(seed);
  // 53 random bits; std::uniform_real_distribution is not reproducible across
  // standard libraries.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto draw = [&](const std::vector<double>& weights) {
    double u = uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc && weights[i] > 0.0) return i;
    }
    for (std::size_t i = weights.size(); i-- > 0;)
      if (weights[i] > 0.0) return i;
    return std::size_t{0};
  };

  std::string letters;
  letters.reserve(n);
  std::size_t state = draw(p);
  letters += alphabet[state];
  for (std::size_t k = 1; k < n; ++k) {
    state = draw(transition[state]);
    letters += alphabet[state];
  }
  return SymbolicWord(std::move(letters), alphabet);
}

}  // namespace leeyang::dynamics
