#pragma once

// Reference computations written independently of the library: plain loops,
// scans and textbook formulas. Slow and only meant for small inputs.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Z_N by direct enumeration; each configuration's weight is rebuilt from scratch.
inline cplx partition_sum(const std::vector<double>& ps, cplx zeta) {
  const std::size_t n = ps.size();
  cplx total = 0.0;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    cplx w = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const int s = (mask >> i) & 1 ? 1 : -1;
      const int t = (mask >> ((i + 1) % n)) & 1 ? 1 : -1;
      w *= std::exp(ps[i] * s * t) * (s > 0 ? zeta : 1.0 / zeta);
    }
    total += w;
  }
  return total;
}

// zeta^N Z_N(zeta) = sum_k c_k zeta^{2k}, k = number of up spins.
inline std::vector<double> partition_coefficients(const std::vector<double>& ps) {
  const std::size_t n = ps.size();
  std::vector<double> c(n + 1, 0.0);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    double bond = 0.0;
    std::size_t up = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int s = (mask >> i) & 1 ? 1 : -1;
      const int t = (mask >> ((i + 1) % n)) & 1 ? 1 : -1;
      bond += ps[i] * s * t;
      up += s > 0;
    }
    c[up] += std::exp(bond);
  }
  return c;
}

// All sign changes of f on [0, 1) found on a grid of `grid` points and
// refined by bisection. With periodic = true the wrap interval is scanned too.
template <class F>
std::vector<double> scan_roots(F f, std::size_t grid, bool periodic) {
  std::vector<double> roots;
  const std::size_t last = periodic ? grid : grid - 1;
  double a = 0.0, fa = f(0.0);
  for (std::size_t i = 1; i <= last; ++i) {
    const double b = static_cast<double>(i) / static_cast<double>(grid);
    const double fb = (i == grid) ? f(0.0) : f(b);
    if (fa == 0.0) {
      roots.push_back(a);
    } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
      double lo = a, hi = b, flo = fa;
      for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      double r = 0.5 * (lo + hi);
      if (r >= 1.0) r -= 1.0;
      roots.push_back(r);
    }
    a = b;
    fa = fb;
  }
  return roots;
}

// Scans a finer and finer grid until `expected` roots show up.
template <class F>
std::vector<double> roots_with_count(F f, std::size_t expected, bool periodic) {
  for (std::size_t grid = 64 * expected; grid <= 4096 * expected * 64; grid *= 4) {
    auto roots = scan_roots(f, grid, periodic);
    if (roots.size() == expected) return roots;
  }
  throw std::runtime_error("oracle root scan did not find the expected number of roots");
}

// Phases theta in [0, 1) of the 2N roots of zeta^N Z_N(zeta). All of them
// lie on the circle, where Z_N(e^{2 pi i theta}) = sum_k c_k cos(2 pi (2k - N) theta) is real.
inline std::vector<double> lee_yang_phases(const std::vector<double>& ps) {
  const auto c = partition_coefficients(ps);
  const long n = static_cast<long>(ps.size());
  auto f = [&](double t) {
    double s = 0.0;
    for (long k = 0; k <= n; ++k) s += c[k] * std::cos(kTwoPi * static_cast<double>(2 * k - n) * t);
    return s;
  };
  return roots_with_count(f, 2 * ps.size(), true);
}

inline double rho(cplx a) { return std::sqrt(1.0 - std::norm(a)); }

inline Eigen::Matrix2cd theta_block(cplx a) {
  Eigen::Matrix2cd t;
  t << std::conj(a), rho(a), rho(a), -a;
  return t;
}

// L_N(theta) M_N(theta) assembled as block-diagonal matrices and multiplied.
inline Matrix floquet_LM(const std::vector<cplx>& a, double theta) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.size());
  Matrix L = Matrix::Zero(n, n), M = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; j += 2) L.block(j, j, 2, 2) = theta_block(a[j]);
  for (Eigen::Index j = 1; j + 1 < n; j += 2) M.block(j, j, 2, 2) = theta_block(a[j]);
  const cplx e = std::polar(1.0, theta);
  M(0, 0) = -a[n - 1];
  M(0, n - 1) = std::conj(e) * rho(a[n - 1]);
  M(n - 1, 0) = e * rho(a[n - 1]);
  M(n - 1, n - 1) = std::conj(a[n - 1]);
  return L * M;
}

// Product S(a_{N-1}, z) ... S(a_0, z) written out with explicit 2x2 arithmetic.
inline Eigen::Matrix2cd transfer_naive(const std::vector<cplx>& a, cplx z) {
  cplx p00 = 1.0, p01 = 0.0, p10 = 0.0, p11 = 1.0;
  for (const cplx& al : a) {
    const double r = rho(al);
    const cplx s00 = z / r, s01 = -std::conj(al) / r, s10 = -al * z / r, s11 = 1.0 / r;
    const cplx q00 = s00 * p00 + s01 * p10, q01 = s00 * p01 + s01 * p11;
    const cplx q10 = s10 * p00 + s11 * p10, q11 = s10 * p01 + s11 * p11;
    p00 = q00;
    p01 = q01;
    p10 = q10;
    p11 = q11;
  }
  Eigen::Matrix2cd out;
  out << p00, p01, p10, p11;
  return out;
}

// Phases of the N zeros of the discriminant on the circle. On z = e^{2 pi i t}
// the function e^{-i pi N t} Tr(product) is real (continuous branch of z^{-N/2}).
inline std::vector<double> discriminant_phases(const std::vector<cplx>& a) {
  const double n = static_cast<double>(a.size());
  auto f = [&](double t) {
    const cplx z = std::polar(1.0, kTwoPi * t);
    return (std::polar(1.0, -std::numbers::pi * n * t) * transfer_naive(a, z).trace()).real();
  };
  // For odd N the function is antiperiodic, so the wrap interval is not scanned.
  return roots_with_count(f, a.size(), a.size() % 2 == 0);
}

// Distance between two sorted phase multisets on R/Z, aligned by the best
// cyclic shift.
inline double multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  auto circ = [](double x, double y) {
    double d = std::fmod(std::abs(x - y), 1.0);
    return std::min(d, 1.0 - d);
  };
  double best = INFINITY;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size() && worst < best; ++k)
      worst = std::max(worst, circ(a[k], b[(k + shift) % b.size()]));
    best = std::min(best, worst);
  }
  return best;
}

}  // namespace oracle
