#include "udelta/matrix.hpp"

namespace udelta {

Int denominator_lcm(const RatMat& m) {
  Int l(1);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      l = lcm(l, Int(m(i, j).get_den()));
  return l;
}

Int det_bareiss(IntMat m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw error("det_bareiss: not square");
  if (n == 0) return Int(1);
  Int sign(1), prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Int(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rat det_exact(const RatMat& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw error("det_exact: not square");
  if (n == 0) return rat(1);
  IntMat z(n, n);
  Int scale(1);
  for (Eigen::Index i = 0; i < n; ++i) {
    Int d(1);
    for (Eigen::Index j = 0; j < n; ++j) d = lcm(d, Int(m(i, j).get_den()));
    for (Eigen::Index j = 0; j < n; ++j)
      z(i, j) = Int(m(i, j).get_num()) * (d / m(i, j).get_den());
    scale *= d;
  }
  Rat r(det_bareiss(std::move(z)), scale);
  r.canonicalize();
  return r;
}

Rat det_cofactor(const RatMat& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw error("det_cofactor: not square");
  if (n == 0) return rat(1);
  if (n == 1) return m(0, 0);
  Rat acc(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    RatMat minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      Eigen::Index c = 0;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, c++) = m(i, k);
      }
    }
    Rat term = m(0, j) * det_cofactor(minor);
    acc += (j % 2 == 0) ? term : Rat(-term);
  }
  return acc;
}

RatMat solve_exact(RatMat a, RatMat b) {
  const Eigen::Index n = a.rows();
  if (n != a.cols() || b.rows() != n) throw error("solve_exact: shape");
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw near_singular_error("solve_exact: singular matrix");
    if (p != k) {
      a.row(k).swap(a.row(p));
      b.row(k).swap(b.row(p));
    }
    Rat piv = a(k, k);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k) / piv;
      a.row(i) -= f * a.row(k);
      b.row(i) -= f * b.row(k);
    }
  }
  for (Eigen::Index k = 0; k < n; ++k) b.row(k) /= a(k, k);
  return b;
}

RatMat inverse_exact(const RatMat& m) {
  return solve_exact(m, RatMat::Identity(m.rows(), m.cols()));
}

int rank_exact(RatMat m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index p = row;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    m.row(row).swap(m.row(p));
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      Rat f = m(i, col) / m(row, col);
      m.row(i) -= f * m.row(row);
    }
    ++row;
    ++rank;
  }
  return rank;
}

CRat det_exact(const CRatMat& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw error("det_exact: not square");
  std::vector<CRat> a(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  CRat det(rat(1));
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a[p * n + k].is_zero()) ++p;
    if (p == n) return CRat();
    if (p != k) {
      for (Eigen::Index j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      det = -det;
    }
    CRat piv = a[k * n + k];
    det *= piv;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a[i * n + k].is_zero()) continue;
      CRat f = a[i * n + k] / piv;
      for (Eigen::Index j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return det;
}

CRatMat solve_exact(CRatMat a, CRatMat b) {
  // [re -im; im re] block trick keeps everything in Rat.
  const Eigen::Index n = a.rows();
  RatMat big(2 * n, 2 * n), rhs(2 * n, b.cols());
  big.topLeftCorner(n, n) = a.re;
  big.topRightCorner(n, n) = -a.im;
  big.bottomLeftCorner(n, n) = a.im;
  big.bottomRightCorner(n, n) = a.re;
  rhs.topRows(n) = b.re;
  rhs.bottomRows(n) = b.im;
  RatMat sol = solve_exact(std::move(big), std::move(rhs));
  return {sol.topRows(n), sol.bottomRows(n)};
}

CRatMat inverse_exact(const CRatMat& m) {
  CRatMat id(RatMat::Identity(m.rows(), m.cols()));
  return solve_exact(m, id);
}

}  // namespace udelta
