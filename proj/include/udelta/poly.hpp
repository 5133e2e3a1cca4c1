#pragma once

#include <utility>
#include <vector>

#include "udelta/matrix.hpp"
#include "udelta/quadform.hpp"

namespace udelta {

// Univariate polynomials over Rat, coefficients ascending. The zero
// polynomial is an empty coefficient list.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat& a) { return RatPoly({a}); }
  static RatPoly x() { return RatPoly({rat(0), rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const { return c_.empty() ? rat(0) : c_.back(); }
  Rat operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : rat(0);
  }

  Rat eval(const Rat& t) const;
  std::complex<double> eval(const std::complex<double>& t) const;

  RatPoly derivative() const;
  RatPoly monic() const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator-() const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);

// Monic gcd.
RatPoly poly_gcd(RatPoly a, RatPoly b);

// Yun's squarefree decomposition: list of (factor, multiplicity), product of
// factor^multiplicity equals the input up to a constant.
std::vector<std::pair<RatPoly, int>> squarefree_decomp(const RatPoly& p);

// Distinct roots of a squarefree polynomial in the open interval (0, +inf),
// by Sturm's theorem.
int sturm_positive_roots(const RatPoly& squarefree);

// Roots in (0, +inf) counted with multiplicity.
int count_positive_roots_mult(const RatPoly& p);

// det(a + t b) as an exact polynomial in t, by interpolation at
// t = 0, 1, ..., n.
RatPoly det_poly(const RatMat& a, const RatMat& b);

// Index i(x) of a nondegenerate symmetric class x relative to an ample
// (positive definite) H: the positive-root count of det(x + t H).
int line_index(const RatMat& x, const RatMat& h);

}  // namespace udelta
