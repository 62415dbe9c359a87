#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "leeyang/sequences.hpp"

namespace leeyang::cmv {

using Matrix = Eigen::MatrixXcd;

/// Theta(alpha) = [[conj(alpha), rho], [rho, -alpha]], rho = sqrt(1 - |alpha|^2).
Eigen::Matrix2cd theta_block(cplx alpha);

/// Floquet CMV matrix F_N(theta) = L_N(theta) M_N(theta) of an N-periodic
/// coefficient sequence with the twisted boundary condition
/// u_{n+N} = e^{i theta} u_n. N is even.
class FloquetMatrix {
 public:
  FloquetMatrix(Matrix entries, double theta) : entries_(std::move(entries)), theta_(theta) {}

  const Matrix& entries() const noexcept { return entries_; }
  double theta() const noexcept { return theta_; }
  Eigen::Index dimension() const noexcept { return entries_.rows(); }

  /// max |(F^* F - I)_{jk}|
  double unitarity_defect() const;

 private:
  Matrix entries_;
  double theta_;
};

/// Entrywise construction following the closed forms for N = 2, N = 4 and
/// N >= 6. Throws for odd N.
FloquetMatrix floquet_matrix(const CoefficientSequence& alphas, double theta);

/// The two block factors L_N(theta), M_N(theta).
struct FloquetFactors {
  Matrix L;
  Matrix M;
};
FloquetFactors floquet_factors(const CoefficientSequence& alphas, double theta);

/// F_{2N}(pi) of the period-doubled sequence; its spectrum carries the zeros
/// of the discriminant of an odd period N.
FloquetMatrix floquet_for_odd_discriminant(const CoefficientSequence& alphas);

/// Permutation p of {1..N} (stored 1-based in `image`) that brings any
/// Floquet CMV matrix to bandwidth <= 9 under F -> P F P^*, P_{ij} = delta_{i,p(j)}.
class BandPermutation {
 public:
  explicit BandPermutation(std::vector<std::size_t> image);

  std::size_t size() const noexcept { return image_.size(); }
  /// p(j), both 1-based.
  std::size_t operator()(std::size_t j) const { return image_[j - 1]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  Eigen::PermutationMatrix<Eigen::Dynamic> matrix() const;

 private:
  std::vector<std::size_t> image_;
};

/// For N = 2 mod 4 the value p(N/2) is not covered by the four cases; it is
/// set to N - 1, continuing the 2j - 1 branch.
BandPermutation band_permutation(std::size_t n);

/// P F P^*
Matrix reorder(const FloquetMatrix& f, const BandPermutation& p);

/// Largest |j - k| over entries with |m_{jk}| > tol.
std::size_t max_offset(const Matrix& m, double tol = 0.0);

/// Coefficients alpha_i for i in [first_index, first_index + size).
struct IndexedCoefficients {
  CoefficientSequence alphas;
  long first_index = 0;

  bool contains(long i) const {
    return i >= first_index && i < first_index + static_cast<long>(alphas.size());
  }
  cplx at(long i) const;
  double rho_at(long i) const;
};

/// Principal submatrix of the extended CMV matrix E = L M on rows/cols
/// [first, last]. `first` must be even so that entry (0, 0) of E is
/// -conj(alpha_0) alpha_{-1}. Needs alpha_i for first-1 <= i <= last+1.
Matrix extended_cmv_section(const IndexedCoefficients& alphas, long first, long last);

/// Nonzero entries as CSV rows "row,col,re,im" (0-based) with a header.
void write_matrix_triplets(std::ostream& out, const Matrix& m, double tol = 0.0);

}  // namespace leeyang::cmv
