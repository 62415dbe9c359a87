#include "leeyang/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "leeyang/error.hpp"

namespace leeyang {

CoefficientSequence::CoefficientSequence(std::vector<cplx> alphas) : alphas_(std::move(alphas)) {
  require(!alphas_.empty(), ErrorKind::Shape, "coefficient sequence must be nonempty");
  for (std::size_t n = 0; n < alphas_.size(); ++n) {
    const cplx a = alphas_[n];
    require(std::isfinite(a.real()) && std::isfinite(a.imag()) && std::abs(a) < 1.0,
            ErrorKind::Domain,
            "Verblunsky coefficient alpha_" + std::to_string(n) + " is not in the open unit disk");
  }
}

CoefficientSequence CoefficientSequence::from_real(std::span<const double> alphas) {
  return CoefficientSequence(std::vector<cplx>(alphas.begin(), alphas.end()));
}

double CoefficientSequence::rho(std::size_t n) const {
  // 1 - |a|^2 = (1 - |a|)(1 + |a|) keeps relative accuracy near the circle.
  const double r = std::abs(alphas_[n]);
  return std::sqrt((1.0 - r) * (1.0 + r));
}

double CoefficientSequence::rho_product() const {
  double prod = 1.0;
  for (std::size_t n = 0; n < alphas_.size(); ++n) prod *= rho(n);
  return prod;
}

double CoefficientSequence::max_modulus() const {
  double m = 0.0;
  for (const auto& a : alphas_) m = std::max(m, std::abs(a));
  return m;
}

CoefficientSequence CoefficientSequence::doubled() const {
  std::vector<cplx> out(alphas_);
  out.insert(out.end(), alphas_.begin(), alphas_.end());
  return CoefficientSequence(std::move(out));
}

CoefficientSequence CoefficientSequence::rotated(std::size_t k) const {
  std::vector<cplx> out(alphas_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return CoefficientSequence(std::move(out));
}

CouplingSequence::CouplingSequence(std::vector<double> ps) : ps_(std::move(ps)) {
  require(!ps_.empty(), ErrorKind::Shape, "coupling sequence must be nonempty");
  for (std::size_t n = 0; n < ps_.size(); ++n) {
    require(std::isfinite(ps_[n]) && ps_[n] > 0.0, ErrorKind::Domain,
            "coupling p_" + std::to_string(n + 1) + " must be positive");
  }
}

double CouplingSequence::beta(std::size_t n) const { return std::exp(ps_[n]); }

}  // namespace leeyang
