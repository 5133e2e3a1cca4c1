#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "udelta/numtraits.hpp"
#include "udelta/rational.hpp"

namespace udelta {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using RatMat = Mat<Rat>;
using IntMat = Mat<Int>;
using RatVec = Vec<Rat>;
using IntVec = Vec<Int>;
using CMat = Eigen::MatrixXcd;
using DMat = Eigen::MatrixXd;

// Complex matrices with exact rational entries, stored as (re, im) pair so
// all arithmetic stays inside Eigen-over-Rat.
struct CRatMat {
  RatMat re, im;

  CRatMat() = default;
  CRatMat(RatMat r, RatMat i) : re(std::move(r)), im(std::move(i)) {}
  explicit CRatMat(const RatMat& r)
      : re(r), im(RatMat::Zero(r.rows(), r.cols())) {}

  Eigen::Index rows() const { return re.rows(); }
  Eigen::Index cols() const { return re.cols(); }
  CRat operator()(Eigen::Index i, Eigen::Index j) const {
    return {re(i, j), im(i, j)};
  }
  CRatMat operator+(const CRatMat& o) const { return {re + o.re, im + o.im}; }
  CRatMat operator-(const CRatMat& o) const { return {re - o.re, im - o.im}; }
  CRatMat operator*(const CRatMat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CRatMat transpose() const { return {re.transpose(), im.transpose()}; }
  CMat to_complex() const;
};

template <class S>
bool mat_eq(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

inline IntMat int_mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMat m(rows.size(), rows.begin()->size());
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = Int(v);
    ++i;
  }
  return m;
}

inline RatMat rat_mat(std::initializer_list<std::initializer_list<long>> rows) {
  RatMat m(rows.size(), rows.begin()->size());
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = rat(v);
    ++i;
  }
  return m;
}

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline DMat to_double(const RatMat& m) {
  DMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = to_double(m(i, j));
  return r;
}

inline DMat to_double(const IntMat& m) {
  DMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = to_double(m(i, j));
  return r;
}

inline CMat CRatMat::to_complex() const {
  CMat r(rows(), cols());
  for (Eigen::Index i = 0; i < rows(); ++i)
    for (Eigen::Index j = 0; j < cols(); ++j)
      r(i, j) = std::complex<double>(udelta::to_double(re(i, j)),
                                     udelta::to_double(im(i, j)));
  return r;
}

inline bool is_symmetric(const RatMat& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

inline bool is_integral(const RatMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

inline IntMat to_int(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw error("to_int: non-integral entry");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

// Least common multiple of all denominators.
Int denominator_lcm(const RatMat& m);

// Fraction-free Bareiss determinant of an integer matrix.
Int det_bareiss(IntMat m);

// Exact determinant over Rat: per-row denominator clearing, then Bareiss.
Rat det_exact(const RatMat& m);

// Cofactor-expansion determinant; O(n!) reference used by tests as the
// independent oracle for det_exact.
Rat det_cofactor(const RatMat& m);

// Exact Gaussian elimination. solve_exact throws near_singular_error on a
// singular system; rank/inverse never do.
RatMat solve_exact(RatMat a, RatMat b);
RatMat inverse_exact(const RatMat& m);
int rank_exact(RatMat m);

CRat det_exact(const CRatMat& m);
CRatMat solve_exact(CRatMat a, CRatMat b);
CRatMat inverse_exact(const CRatMat& m);

}  // namespace udelta
