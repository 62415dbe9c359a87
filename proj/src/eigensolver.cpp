#include "leeyang/eigensolver.hpp"

#include <lapacke.h>

#include <string>

#include "leeyang/error.hpp"

namespace leeyang {

std::vector<cplx> dense_eigenvalues(const Eigen::MatrixXcd& m) {
  require(m.rows() == m.cols(), ErrorKind::Shape, "eigenvalues need a square matrix");
  const auto n = static_cast<lapack_int>(m.rows());
  std::vector<cplx> w(static_cast<std::size_t>(n));
  if (n == 0) return w;
  Eigen::MatrixXcd work = m;  // zgeev overwrites its input; Eigen is column-major
  static_assert(sizeof(cplx) == sizeof(lapack_complex_double));
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'N', n, reinterpret_cast<lapack_complex_double*>(work.data()), n,
      reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1, nullptr, 1);
  require(info == 0, ErrorKind::Numerical,
          "zgeev failed to converge (info = " + std::to_string(info) + ")");
  return w;
}

}  // namespace leeyang
