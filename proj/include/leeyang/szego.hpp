#pragma once

#include <Eigen/Dense>

#include <utility>

#include "leeyang/sequences.hpp"

namespace leeyang::szego {

using Matrix2 = Eigen::Matrix2cd;

/// S(alpha, z) = (1 - |alpha|^2)^{-1/2} [[z, -conj(alpha)], [-alpha z, 1]], det S = z.
struct SzegoMatrix {
  Matrix2 entries;
  cplx alpha;
  cplx z;
};

SzegoMatrix szego_matrix(cplx alpha, cplx z);

/// S(alpha_{N-1}, z) ... S(alpha_1, z) S(alpha_0, z), accumulated right to
/// left (index 0 first). det = z^N.
Matrix2 transfer_product(const CoefficientSequence& alphas, cplx z);

enum class DiscriminantFlavor {
  Unnormalized,  // T_N(z) = Tr(product); any N
  Normalized,    // Delta_N(z) = z^{-N/2} T_N(z); even N only
};

struct DiscriminantValue {
  cplx value;
  DiscriminantFlavor flavor;
};

/// The trace of the period's transfer product. A cyclic relabelling of the
/// sequence leaves it unchanged, so 0-based and 1-based periods agree.
DiscriminantValue discriminant(const CoefficientSequence& alphas, cplx z,
                               DiscriminantFlavor flavor = DiscriminantFlavor::Normalized);

/// Tr[S(beta_N^{-2}, z) S(0, z) ... S(beta_1^{-2}, z) S(0, z)].
cplx tilde_discriminant(const CouplingSequence& ps, cplx z);

/// Both sides of diag(-1, zeta) M(beta, zeta) diag(-1, 1/zeta)
///   = (beta / zeta) sqrt(1 - beta^{-4}) S(beta^{-2}, zeta^2).
/// The scalar is rho(beta^{-2}); sqrt(1 - beta^{-2}) does not balance the
/// identity. Requires beta > 1.
std::pair<Matrix2, Matrix2> similarity_witness(double beta, cplx zeta);

struct DeterminantCheck {
  cplx lhs;
  cplx rhs;
  double relative_residual;
};

/// det(z - F_N(pi/2)) against z^{N/2} (prod rho_j) Delta_N(z), N even.
DeterminantCheck det_floquet_identity_check(const CoefficientSequence& alphas, cplx z);

/// det(z - F_{2N}(pi)) of the doubled sequence against
/// z^N (prod_{j<2N} rho_j) (Delta_{2N}(z) + 2), any N.
DeterminantCheck det_floquet_identity_check_pi(const CoefficientSequence& alphas, cplx z);

}  // namespace leeyang::szego
