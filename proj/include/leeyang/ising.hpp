#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

#include "leeyang/sequences.hpp"

namespace leeyang::ising {

/// Largest chain length accepted by the 2^N enumeration.
inline constexpr std::size_t kDefaultBruteForceCap = 20;

/// Spins sigma_1..sigma_N in {+1, -1}; sigma_{N+1} = sigma_1 is implied.
class SpinConfiguration {
 public:
  explicit SpinConfiguration(std::vector<int> sigmas);
  std::size_t size() const noexcept { return sigmas_.size(); }
  int operator[](std::size_t n) const { return sigmas_[n]; }
  /// sigma_{n+1} with the periodic closure.
  int next(std::size_t n) const { return sigmas_[(n + 1) % sigmas_.size()]; }

 private:
  std::vector<int> sigmas_;
};

using TransferMatrix2 = Eigen::Matrix2cd;

/// E(sigma, q) = -sum_n (p_n sigma_n sigma_{n+1} + q sigma_n).
double energy(const SpinConfiguration& sigma, std::span<const double> ps, double q);

/// Z_N(zeta) = sum over all 2^N configurations of prod_n beta_n^{sigma_n sigma_{n+1}} zeta^{sigma_n}.
/// Couplings may be any reals here; the ferromagnetic sign is only needed downstream.
cplx partition_bruteforce(std::span<const double> ps, cplx zeta,
                          std::size_t cap = kDefaultBruteForceCap);
inline cplx partition_bruteforce(const CouplingSequence& ps, cplx zeta,
                                 std::size_t cap = kDefaultBruteForceCap) {
  return partition_bruteforce(ps.values(), zeta, cap);
}

/// M(beta, zeta) = [[beta zeta, 1/beta], [1/beta, beta/zeta]].
TransferMatrix2 ising_transfer(double beta, cplx zeta);

/// Tr[M(beta_N, zeta) ... M(beta_1, zeta)].
cplx partition_via_trace(std::span<const double> ps, cplx zeta);
inline cplx partition_via_trace(const CouplingSequence& ps, cplx zeta) {
  return partition_via_trace(ps.values(), zeta);
}

/// alpha_n = beta_n^{-2} = exp(-2 p_n), same order.
CoefficientSequence couplings_to_verblunsky(const CouplingSequence& ps);

/// (alpha_1, ..., alpha_N) -> (0, alpha_1, 0, alpha_2, ..., 0, alpha_N). With
/// the transfer product written highest index leftmost, the rightmost
/// factor of each pair is S(0, z).
CoefficientSequence interleave_with_zeros(const CoefficientSequence& alphas);

}  // namespace leeyang::ising
