#include "leeyang/ising.hpp"

#include <cmath>
#include <string>

#include "leeyang/error.hpp"

namespace leeyang::ising {

SpinConfiguration::SpinConfiguration(std::vector<int> sigmas) : sigmas_(std::move(sigmas)) {
  require(!sigmas_.empty(), ErrorKind::Shape, "spin configuration must be nonempty");
  for (int s : sigmas_) require(s == 1 || s == -1, ErrorKind::Domain, "spins must be +1 or -1");
}

double energy(const SpinConfiguration& sigma, std::span<const double> ps, double q) {
  require(sigma.size() == ps.size(), ErrorKind::Shape,
          "spin configuration and couplings differ in length");
  double e = 0.0;
  for (std::size_t n = 0; n < ps.size(); ++n) {
    e -= ps[n] * sigma[n] * sigma.next(n) + q * sigma[n];
  }
  return e;
}

cplx partition_bruteforce(std::span<const double> ps, cplx zeta, std::size_t cap) {
  const std::size_t n = ps.size();
  require(n >= 1, ErrorKind::Shape, "empty coupling sequence");
  require(n <= cap, ErrorKind::Resource,
          "brute-force enumeration limited to N <= " + std::to_string(cap));
  require(zeta != cplx(0.0), ErrorKind::Domain, "zeta must be nonzero");

  std::vector<double> beta(n), inv_beta(n);
  for (std::size_t k = 0; k < n; ++k) {
    beta[k] = std::exp(ps[k]);
    inv_beta[k] = 1.0 / beta[k];
  }
  const cplx inv_zeta = 1.0 / zeta;

  // Bit k of `mask` set means sigma_{k+1} = -1.
  cplx total = 0.0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    cplx weight = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const bool down = (mask >> k) & 1u;
      const bool next_down = (mask >> ((k + 1) % n)) & 1u;
      weight *= (down == next_down) ? beta[k] : inv_beta[k];
      weight *= down ? inv_zeta : zeta;
    }
    total += weight;
  }
  return total;
}

TransferMatrix2 ising_transfer(double beta, cplx zeta) {
  require(std::isfinite(beta) && beta > 0.0, ErrorKind::Domain, "beta must be positive");
  require(zeta != cplx(0.0), ErrorKind::Domain, "zeta must be nonzero");
  TransferMatrix2 m;
  m << beta * zeta, 1.0 / beta, 1.0 / beta, beta / zeta;
  return m;
}

cplx partition_via_trace(std::span<const double> ps, cplx zeta) {
  require(!ps.empty(), ErrorKind::Shape, "empty coupling sequence");
  require(zeta != cplx(0.0), ErrorKind::Domain, "zeta must be nonzero");
  // Accumulate right to left: product = M_N ... M_1.
  TransferMatrix2 product = TransferMatrix2::Identity();
  for (std::size_t n = 0; n < ps.size(); ++n) {
    product = ising_transfer(std::exp(ps[n]), zeta) * product;
  }
  return product.trace();
}

CoefficientSequence couplings_to_verblunsky(const CouplingSequence& ps) {
  std::vector<cplx> alphas;
  alphas.reserve(ps.size());
  for (double p : ps.values()) alphas.emplace_back(std::exp(-2.0 * p), 0.0);
  return CoefficientSequence(std::move(alphas));
}

CoefficientSequence interleave_with_zeros(const CoefficientSequence& alphas) {
  std::vector<cplx> out;
  out.reserve(2 * alphas.size());
  for (const auto& a : alphas.values()) {
    out.emplace_back(0.0, 0.0);
    out.push_back(a);
  }
  return CoefficientSequence(std::move(out));
}

}  // namespace leeyang::ising
