#pragma once

#include <Eigen/Dense>

#include <vector>

#include "leeyang/sequences.hpp"

namespace leeyang {

/// All eigenvalues of a dense complex matrix (LAPACK zgeev, no vectors).
/// Throws ErrorKind::Numerical if the QR iteration does not converge.
std::vector<cplx> dense_eigenvalues(const Eigen::MatrixXcd& m);

}  // namespace leeyang
