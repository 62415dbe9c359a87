#include "leeyang/szego.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "leeyang/cmv.hpp"
#include "leeyang/error.hpp"
#include "leeyang/ising.hpp"

namespace leeyang::szego {

namespace {

double relative(cplx lhs, cplx rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

cplx det_shifted(const cmv::FloquetMatrix& f, cplx z) {
  cmv::Matrix a = -f.entries();
  a.diagonal().array() += z;
  return a.partialPivLu().determinant();
}

}  // namespace

SzegoMatrix szego_matrix(cplx alpha, cplx z) {
  const double r = std::abs(alpha);
  require(r < 1.0, ErrorKind::Domain, "|alpha| must be < 1");
  const double inv_rho = 1.0 / std::sqrt((1.0 - r) * (1.0 + r));
  Matrix2 s;
  s << z, -std::conj(alpha), -alpha * z, 1.0;
  return {inv_rho * s, alpha, z};
}

Matrix2 transfer_product(const CoefficientSequence& alphas, cplx z) {
  require(z != cplx(0.0), ErrorKind::Domain, "z must be nonzero");
  Matrix2 product = Matrix2::Identity();
  for (const cplx& a : alphas.values()) product = szego_matrix(a, z).entries * product;
  return product;
}

DiscriminantValue discriminant(const CoefficientSequence& alphas, cplx z,
                               DiscriminantFlavor flavor) {
  const cplx trace = transfer_product(alphas, z).trace();
  if (flavor == DiscriminantFlavor::Unnormalized) return {trace, flavor};
  require(alphas.size() % 2 == 0, ErrorKind::Shape,
          "the normalized discriminant needs an even period; use the unnormalized trace");
  const int half = static_cast<int>(alphas.size() / 2);
  return {std::pow(z, -half) * trace, flavor};
}

cplx tilde_discriminant(const CouplingSequence& ps, cplx z) {
  require(z != cplx(0.0), ErrorKind::Domain, "z must be nonzero");
  const Matrix2 s0 = szego_matrix(0.0, z).entries;
  Matrix2 product = Matrix2::Identity();
  for (double p : ps.values()) {
    product = szego_matrix(std::exp(-2.0 * p), z).entries * s0 * product;
  }
  return product.trace();
}

std::pair<Matrix2, Matrix2> similarity_witness(double beta, cplx zeta) {
  require(std::isfinite(beta) && beta > 1.0, ErrorKind::Domain,
          "similarity witness needs beta > 1");
  require(zeta != cplx(0.0), ErrorKind::Domain, "zeta must be nonzero");
  Matrix2 left = Matrix2::Zero(), right = Matrix2::Zero();
  left(0, 0) = -1.0;
  left(1, 1) = zeta;
  right(0, 0) = -1.0;
  right(1, 1) = 1.0 / zeta;
  const Matrix2 conjugated = left * ising::ising_transfer(beta, zeta) * right;

  // The scalar is rho(beta^{-2}) = sqrt(1 - beta^{-4}), the normalization of S.
  const double alpha = 1.0 / (beta * beta);
  const double rho = std::sqrt((1.0 - alpha) * (1.0 + alpha));
  const Matrix2 scaled = (beta / zeta) * rho * szego_matrix(alpha, zeta * zeta).entries;
  return {conjugated, scaled};
}

DeterminantCheck det_floquet_identity_check(const CoefficientSequence& alphas, cplx z) {
  require(alphas.size() % 2 == 0, ErrorKind::Shape, "determinant identity needs an even period");
  require(z != cplx(0.0), ErrorKind::Domain, "z must be nonzero");
  const auto f = cmv::floquet_matrix(alphas, std::numbers::pi / 2);
  const cplx lhs = det_shifted(f, z);
  const int half = static_cast<int>(alphas.size() / 2);
  const cplx rhs = std::pow(z, half) * alphas.rho_product() * discriminant(alphas, z).value;
  return {lhs, rhs, relative(lhs, rhs)};
}

DeterminantCheck det_floquet_identity_check_pi(const CoefficientSequence& alphas, cplx z) {
  require(z != cplx(0.0), ErrorKind::Domain, "z must be nonzero");
  const CoefficientSequence twice = alphas.doubled();
  const auto f = cmv::floquet_matrix(twice, std::numbers::pi);
  const cplx lhs = det_shifted(f, z);
  const int n = static_cast<int>(alphas.size());
  const cplx delta = discriminant(twice, z).value;
  const cplx rhs = std::pow(z, n) * twice.rho_product() * (delta + 2.0);
  return {lhs, rhs, relative(lhs, rhs)};
}

}  // namespace leeyang::szego
