#include "leeyang/cmv.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "leeyang/error.hpp"
#include "leeyang/io.hpp"

namespace leeyang::cmv {

namespace {

double rho_of(cplx a) {
  const double r = std::abs(a);
  return std::sqrt((1.0 - r) * (1.0 + r));
}

void check_even(const CoefficientSequence& alphas) {
  require(!alphas.empty(), ErrorKind::Shape, "empty coefficient sequence");
  require(alphas.size() % 2 == 0, ErrorKind::Shape,
          "Floquet CMV matrices need an even period, got N = " + std::to_string(alphas.size()));
}

}  // namespace

Eigen::Matrix2cd theta_block(cplx alpha) {
  require(std::abs(alpha) < 1.0, ErrorKind::Domain, "|alpha| must be < 1");
  const double rho = rho_of(alpha);
  Eigen::Matrix2cd t;
  t << std::conj(alpha), rho, rho, -alpha;
  return t;
}

double FloquetMatrix::unitarity_defect() const {
  const Matrix gram = entries_.adjoint() * entries_;
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

FloquetMatrix floquet_matrix(const CoefficientSequence& alphas, double theta) {
  check_even(alphas);
  const auto N = static_cast<Eigen::Index>(alphas.size());
  const cplx up = std::polar(1.0, theta);     // e^{i theta}
  const cplx down = std::polar(1.0, -theta);  // e^{-i theta}
  auto a = [&](Eigen::Index n) { return alphas[static_cast<std::size_t>(n)]; };
  auto ac = [&](Eigen::Index n) { return std::conj(a(n)); };
  auto r = [&](Eigen::Index n) { return alphas.rho(static_cast<std::size_t>(n)); };

  Matrix F = Matrix::Zero(N, N);
  if (N == 2) {
    F(0, 0) = -a(1) * ac(0) + up * r(1) * r(0);
    F(0, 1) = down * r(1) * ac(0) + ac(1) * r(0);
    F(1, 0) = -a(1) * r(0) - up * r(1) * a(0);
    F(1, 1) = down * r(1) * r(0) - ac(1) * a(0);
  } else if (N == 4) {
    F(0, 0) = -ac(0) * a(3);
    F(0, 1) = ac(1) * r(0);
    F(0, 2) = r(1) * r(0);
    F(0, 3) = down * ac(0) * r(3);
    F(1, 0) = -r(0) * a(3);
    F(1, 1) = -ac(1) * a(0);
    F(1, 2) = -r(1) * a(0);
    F(1, 3) = down * r(0) * r(3);
    F(2, 0) = up * r(3) * r(2);
    F(2, 1) = ac(2) * r(1);
    F(2, 2) = -ac(2) * a(1);
    F(2, 3) = ac(3) * r(2);
    F(3, 0) = -up * r(3) * a(2);
    F(3, 1) = r(2) * r(1);
    F(3, 2) = -r(2) * a(1);
    F(3, 3) = -ac(3) * a(2);
  } else {
    // Row pair (2k, 2k+1) touches columns prev = 2k-1, 2k, 2k+1, next = 2k+2
    // (mod N); the wrap-around entries pick up e^{-i theta} / e^{i theta}.
    for (Eigen::Index k = 0; 2 * k < N; ++k) {
      const Eigen::Index even = 2 * k, odd = 2 * k + 1;
      const Eigen::Index prev = (even + N - 1) % N, next = (odd + 1) % N;
      const cplx ph_prev = (k == 0) ? down : cplx(1.0);
      const cplx ph_next = (odd == N - 1) ? up : cplx(1.0);
      F(even, prev) = ph_prev * ac(even) * r(prev);
      F(even, even) = -ac(even) * a(prev);
      F(even, odd) = ac(odd) * r(even);
      F(even, next) = ph_next * r(odd) * r(even);
      F(odd, prev) = ph_prev * r(even) * r(prev);
      F(odd, even) = -r(even) * a(prev);
      F(odd, odd) = -ac(odd) * a(even);
      F(odd, next) = -ph_next * r(odd) * a(even);
    }
  }
  return FloquetMatrix(std::move(F), theta);
}

FloquetFactors floquet_factors(const CoefficientSequence& alphas, double theta) {
  check_even(alphas);
  const auto N = static_cast<Eigen::Index>(alphas.size());
  Matrix L = Matrix::Zero(N, N);
  Matrix M = Matrix::Zero(N, N);
  for (Eigen::Index k = 0; 2 * k < N; ++k) {
    L.block<2, 2>(2 * k, 2 * k) = theta_block(alphas[static_cast<std::size_t>(2 * k)]);
  }
  for (Eigen::Index j = 1; j + 2 < N; j += 2) {
    M.block<2, 2>(j, j) = theta_block(alphas[static_cast<std::size_t>(j)]);
  }
  const cplx last = alphas[alphas.size() - 1];
  const double rho_last = alphas.rho(alphas.size() - 1);
  M(0, 0) = -last;
  M(0, N - 1) = std::polar(rho_last, -theta);
  M(N - 1, 0) = std::polar(rho_last, theta);
  M(N - 1, N - 1) = std::conj(last);
  return {std::move(L), std::move(M)};
}

FloquetMatrix floquet_for_odd_discriminant(const CoefficientSequence& alphas) {
  require(alphas.size() % 2 == 1, ErrorKind::Shape,
          "odd-period construction called with an even period; use floquet_matrix");
  return floquet_matrix(alphas.doubled(), std::numbers::pi);
}

BandPermutation::BandPermutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size() + 1, 0);
  for (std::size_t v : image_) {
    require(v >= 1 && v <= image_.size() && !seen[v], ErrorKind::Domain,
            "band permutation is not a bijection");
    seen[v] = 1;
  }
}

Eigen::PermutationMatrix<Eigen::Dynamic> BandPermutation::matrix() const {
  Eigen::VectorXi idx(static_cast<Eigen::Index>(image_.size()));
  for (std::size_t j = 0; j < image_.size(); ++j) idx(static_cast<Eigen::Index>(j)) = static_cast<int>(image_[j] - 1);
  // Eigen's PermutationMatrix(indices) maps e_j to e_{indices(j)}.
  return Eigen::PermutationMatrix<Eigen::Dynamic>(idx);
}

BandPermutation band_permutation(std::size_t n) {
  require(n >= 2 && n % 2 == 0, ErrorKind::Shape, "band permutation needs an even size >= 2");
  std::vector<std::size_t> p(n);
  const std::size_t half = n / 2;
  for (std::size_t j = 1; j <= n; ++j) {
    std::size_t v;
    if (j % 2 == 1) {
      v = (j <= half) ? 2 * j - 1 : 2 * n + 1 - 2 * j;
    } else {
      v = (j <= half) ? 2 * j : 2 * n + 2 - 2 * j;
    }
    p[j - 1] = v;
  }
  return BandPermutation(std::move(p));
}

Matrix reorder(const FloquetMatrix& f, const BandPermutation& p) {
  const auto& F = f.entries();
  require(static_cast<std::size_t>(F.rows()) == p.size(), ErrorKind::Shape,
          "permutation and matrix sizes differ");
  const auto n = F.rows();
  Matrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto pj = static_cast<Eigen::Index>(p(static_cast<std::size_t>(j) + 1) - 1);
    for (Eigen::Index k = 0; k < n; ++k) {
      out(pj, static_cast<Eigen::Index>(p(static_cast<std::size_t>(k) + 1) - 1)) = F(j, k);
    }
  }
  return out;
}

std::size_t max_offset(const Matrix& m, double tol) {
  std::size_t best = 0;
  for (Eigen::Index j = 0; j < m.rows(); ++j)
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      if (std::abs(m(j, k)) > tol) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::abs(j - k)));
  return best;
}

cplx IndexedCoefficients::at(long i) const {
  require(contains(i), ErrorKind::Shape, "coefficient alpha_" + std::to_string(i) + " not available");
  return alphas[static_cast<std::size_t>(i - first_index)];
}

double IndexedCoefficients::rho_at(long i) const { return rho_of(at(i)); }

Matrix extended_cmv_section(const IndexedCoefficients& alphas, long first, long last) {
  require(first <= last, ErrorKind::Shape, "empty window");
  require(first % 2 == 0, ErrorKind::Shape, "window must start at an even index");
  require(alphas.contains(first - 1) && alphas.contains(last + 1), ErrorKind::Shape,
          "window needs coefficients alpha_" + std::to_string(first - 1) + " .. alpha_" +
              std::to_string(last + 1));

  // Nonzero entries of row j of L (blocks Theta(alpha_{2n}) on {2n, 2n+1}).
  auto l_entry = [&](long j, long m) -> cplx {
    if (j % 2 == 0) {
      if (m == j) return std::conj(alphas.at(j));
      if (m == j + 1) return alphas.rho_at(j);
    } else {
      if (m == j - 1) return alphas.rho_at(j - 1);
      if (m == j) return -alphas.at(j - 1);
    }
    return 0.0;
  };
  // M has blocks Theta(alpha_{2n+1}) on {2n+1, 2n+2}.
  auto m_entry = [&](long m, long k) -> cplx {
    if (m % 2 != 0) {
      if (k == m) return std::conj(alphas.at(m));
      if (k == m + 1) return alphas.rho_at(m);
    } else {
      if (k == m - 1) return alphas.rho_at(m - 1);
      if (k == m) return -alphas.at(m - 1);
    }
    return 0.0;
  };

  const long size = last - first + 1;
  Matrix E = Matrix::Zero(size, size);
  for (long j = first; j <= last; ++j) {
    const long m_lo = (j % 2 == 0) ? j : j - 1;
    for (long m = m_lo; m <= m_lo + 1; ++m) {
      const cplx l = l_entry(j, m);
      for (long k = std::max(first, m - 1); k <= std::min(last, m + 1); ++k) {
        E(j - first, k - first) += l * m_entry(m, k);
      }
    }
  }
  return E;
}

void write_matrix_triplets(std::ostream& out, const Matrix& m, double tol) {
  out << "row,col,re,im\n";
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      const cplx v = m(j, k);
      if (std::abs(v) > tol) {
        out << j << ',' << k << ',' << io::format_double(v.real()) << ','
            << io::format_double(v.imag()) << '\n';
      }
    }
  }
}

}  // namespace leeyang::cmv
