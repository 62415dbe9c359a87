#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace leeyang {

using cplx = std::complex<double>;

/// Verblunsky coefficients alpha_0, ..., alpha_{N-1}, stored 0-based.
/// Every entry lies strictly inside the unit disk.
class CoefficientSequence {
 public:
  CoefficientSequence() = default;
  explicit CoefficientSequence(std::vector<cplx> alphas);
  /// Convenience for real-valued models.
  static CoefficientSequence from_real(std::span<const double> alphas);

  std::size_t size() const noexcept { return alphas_.size(); }
  bool empty() const noexcept { return alphas_.empty(); }
  const cplx& operator[](std::size_t n) const { return alphas_[n]; }
  std::span<const cplx> values() const noexcept { return alphas_; }

  /// rho_n = sqrt(1 - |alpha_n|^2)
  double rho(std::size_t n) const;
  /// Product of all rho_n.
  double rho_product() const;
  double max_modulus() const;

  /// Sequence repeated twice; used to move odd periods to even ones.
  CoefficientSequence doubled() const;
  /// (alpha_k, alpha_{k+1}, ..., alpha_{k-1})
  CoefficientSequence rotated(std::size_t k) const;

  friend bool operator==(const CoefficientSequence&, const CoefficientSequence&) = default;

 private:
  std::vector<cplx> alphas_;
};

/// Normalized Ising couplings p_1, ..., p_N (stored 0-based), all positive.
class CouplingSequence {
 public:
  CouplingSequence() = default;
  explicit CouplingSequence(std::vector<double> ps);

  std::size_t size() const noexcept { return ps_.size(); }
  double operator[](std::size_t n) const { return ps_[n]; }
  std::span<const double> values() const noexcept { return ps_; }
  /// beta_n = exp(p_n)
  double beta(std::size_t n) const;

  friend bool operator==(const CouplingSequence&, const CouplingSequence&) = default;

 private:
  std::vector<double> ps_;
};

}  // namespace leeyang
