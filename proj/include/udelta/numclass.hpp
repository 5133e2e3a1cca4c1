#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <vector>

#include "udelta/lagrangian.hpp"

namespace udelta {

// Even-degree elements of the exterior algebra on 2n generators. Generator
// 2k is dx_{k+1}, generator 2k+1 is dy_{k+1}; the orientation class is the
// full wedge dx_1 ^ dy_1 ^ ... ^ dx_n ^ dy_n, i.e. the all-ones mask with
// coefficient +1. Coefficients are indexed by subset bitmask.
template <class S>
class CohClass {
 public:
  explicit CohClass(Eigen::Index n)
      : n_(n), coef_(static_cast<size_t>(1) << (2 * n), S(0)) {}

  Eigen::Index n() const { return n_; }
  uint32_t full_mask() const {
    return (static_cast<uint32_t>(1) << (2 * n_)) - 1;
  }
  const S& operator[](uint32_t mask) const { return coef_[mask]; }
  S& operator[](uint32_t mask) { return coef_[mask]; }
  size_t size() const { return coef_.size(); }

  static CohClass unit(Eigen::Index n) {
    CohClass c(n);
    c[0] = S(1);
    return c;
  }
  // The orientation (top) class: the numerical class of a point.
  static CohClass point(Eigen::Index n) {
    CohClass c(n);
    c[c.full_mask()] = S(1);
    return c;
  }

  CohClass operator+(const CohClass& o) const {
    CohClass r(n_);
    for (size_t m = 0; m < coef_.size(); ++m) r.coef_[m] = coef_[m] + o.coef_[m];
    return r;
  }
  CohClass operator-() const {
    CohClass r(n_);
    for (size_t m = 0; m < coef_.size(); ++m) r.coef_[m] = -coef_[m];
    return r;
  }
  CohClass operator*(const S& s) const {
    CohClass r(n_);
    for (size_t m = 0; m < coef_.size(); ++m) r.coef_[m] = coef_[m] * s;
    return r;
  }
  bool operator==(const CohClass& o) const { return coef_ == o.coef_; }

 private:
  Eigen::Index n_;
  std::vector<S> coef_;
};

// Koszul sign of e_A ^ e_B for disjoint masks.
inline int wedge_sign(uint32_t a, uint32_t b) {
  int inversions = 0;
  while (b) {
    uint32_t low = b & (~b + 1);
    int j = std::countr_zero(low);
    inversions += std::popcount(a >> (j + 1));
    b ^= low;
  }
  return (inversions & 1) ? -1 : 1;
}

template <class S>
CohClass<S> wedge(const CohClass<S>& x, const CohClass<S>& y) {
  CohClass<S> r(x.n());
  const uint32_t full = x.full_mask();
  for (uint32_t a = 0; a <= full; ++a) {
    if (x[a] == S(0)) continue;
    for (uint32_t b = 0; b <= full; ++b) {
      if (a & b) continue;
      if (y[b] == S(0)) continue;
      S term = x[a] * y[b];
      if (wedge_sign(a, b) < 0) term = -term;
      r[a | b] = r[a | b] + term;
    }
  }
  return r;
}

namespace detail {
template <class S>
S scalar_from_rat(const Rat& r) {
  return S(r);
}
template <>
inline std::complex<double> scalar_from_rat<std::complex<double>>(const Rat& r) {
  return {to_double(r), 0.0};
}
}  // namespace detail

// Degree-2 class sum_{i,j} phi_ij dx_i ^ dy_j of a symmetric matrix; entry
// access through a callable (i, j) -> S so one body serves Rat, CRat and
// complex coefficients.
template <class S, class Entry>
CohClass<S> two_form(Eigen::Index n, Entry entry) {
  CohClass<S> r(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      uint32_t mask = (1u << (2 * i)) | (1u << (2 * j + 1));
      S v = entry(i, j);
      if (2 * i > 2 * j + 1) v = -v;  // dx_i ^ dy_j against generator order
      r[mask] = r[mask] + v;
    }
  return r;
}

inline CohClass<Rat> ns_to_form(const RatMat& phi) {
  return two_form<Rat>(phi.rows(), [&](auto i, auto j) { return phi(i, j); });
}
inline CohClass<CRat> ns_to_form(const CRatMat& phi) {
  return two_form<CRat>(phi.rows(), [&](auto i, auto j) { return phi(i, j); });
}
inline CohClass<std::complex<double>> ns_to_form(const CMat& phi) {
  return two_form<std::complex<double>>(phi.rows(),
                                        [&](auto i, auto j) { return phi(i, j); });
}

// scale * exp(two-form), truncated at top degree.
template <class S>
CohClass<S> exp_class(const CohClass<S>& form, const S& scale) {
  const Eigen::Index n = form.n();
  CohClass<S> acc = CohClass<S>::unit(n);
  CohClass<S> pow = CohClass<S>::unit(n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    pow = wedge(pow, form);
    pow = pow * detail::scalar_from_rat<S>(Rat(1, static_cast<long>(k)));
    acc = acc + pow;
  }
  return acc * scale;
}

template <class M, class S>
CohClass<S> ell(const M& symmetric, const S& scale) {
  return exp_class(ns_to_form(symmetric), scale);
}

// Euler form: the orientation coefficient of x^v ^ y, where the dual twist
// is (-1)^k on degree-2k parts of x.
template <class S>
S chi_pair(const CohClass<S>& x, const CohClass<S>& y) {
  const uint32_t full = x.full_mask();
  S acc(0);
  for (uint32_t a = 0; a <= full; ++a) {
    if (x[a] == S(0)) continue;
    uint32_t b = full & ~a;
    if (y[b] == S(0)) continue;
    S term = x[a] * y[b];
    int sign = wedge_sign(a, b);
    if ((std::popcount(a) / 2) % 2 != 0) sign = -sign;
    if (sign < 0) term = -term;
    acc = acc + term;
  }
  return acc;
}

CohClass<CRat> to_crat(const CohClass<Rat>& x);
CohClass<std::complex<double>> to_complex(const CohClass<Rat>& x);
CohClass<std::complex<double>> to_complex(const CohClass<CRat>& x);

// Rank of the simple semihomogeneous bundle with slope phi: the index of
// {v : phi v integral} in Z^n.
Int semihomog_rank(const RatMat& phi);

// rk(phi) * exp(form(phi)).
CohClass<Rat> ch_semihomog(const RatMat& phi);

// Basis of the subalgebra generated by the exponentials of NS classes,
// computed once per dimension from a deterministic spanning family.
class SubalgebraBasis {
 public:
  explicit SubalgebraBasis(Eigen::Index n);

  Eigen::Index n() const { return n_; }
  int dim() const { return static_cast<int>(cols_.cols()); }
  const RatMat& columns() const { return cols_; }

  // Coordinates of an ambient class in the basis; throws
  // rank_deficient_error when the class is outside the subalgebra.
  RatVec coords(const CohClass<Rat>& x) const;
  CohClass<Rat> from_coords(const RatVec& v) const;

 private:
  Eigen::Index n_;
  RatMat cols_;                 // ambient x dim
  std::vector<int> pivot_rows;  // dim rows with invertible minor
  RatMat solver_;               // inverse of that minor
};

const SubalgebraBasis& subalgebra_basis(Eigen::Index n);

// The exact matrix of the spin representation on the subalgebra basis,
// pinned by rho(s) ell(phi) = f_s(phi) ell(g(phi)) on rational samples.
struct RhoMap {
  const SubalgebraBasis* basis;
  RatMat mat;

  CohClass<Rat> apply(const CohClass<Rat>& x) const;
  CohClass<Rat> apply_inverse(const CohClass<Rat>& x) const;
};

RhoMap rho_hat(const SpinElement& s);

// sigma = (omega, z).
struct PhasePoint {
  SiegelPoint omega;
  std::complex<double> z;
};

// Numerical class of the lift: transport to the skyscraper chart by an
// integral completion, pull the point class back through the spin
// representation, and fix the deck parity from the transported offset. The
// phase compatibility at the base point is asserted before returning.
CohClass<Rat> class_of(const LiftedLagrangian& lt);

// Period of the holomorphic volume form over the oriented mirror torus of
// the lift: the branch-signed determinant of kappa_omega on the swapped
// block lattice.
std::complex<double> mirror_integral(const LiftedLagrangian& lt,
                                     const SiegelPoint& w,
                                     double reality_tol = 1e-6);

// Z_sigma(F) = -exp(pi i z) chi(ell(omega), [F]).
std::complex<double> charge(const PhasePoint& sigma,
                            const LiftedLagrangian& lt);
std::complex<double> charge_of_class(const PhasePoint& sigma,
                                     const CohClass<Rat>& cls);

}  // namespace udelta
