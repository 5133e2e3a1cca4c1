#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "udelta/argcont.hpp"
#include "udelta/matrix.hpp"

namespace udelta {

// Standard symplectic form (0, I; -I, 0) on Z^{2n}.
IntMat standard_j(Eigen::Index n);

// An exact rational symplectic matrix in block form (a, b; c, d),
// g^T J g = J. The group of the whole artifact.
class SpElement {
 public:
  // Validates the symplectic identity; throws not_symplectic_error with the
  // first violated entry.
  static SpElement check(const RatMat& g);

  Eigen::Index n() const { return mat_.rows() / 2; }
  const RatMat& mat() const { return mat_; }
  RatMat a() const { return mat_.topLeftCorner(n(), n()); }
  RatMat b() const { return mat_.topRightCorner(n(), n()); }
  RatMat c() const { return mat_.bottomLeftCorner(n(), n()); }
  RatMat d() const { return mat_.bottomRightCorner(n(), n()); }

  bool is_integral() const { return udelta::is_integral(mat_); }
  bool in_u0() const;               // det b != 0
  bool lower_triangular() const;    // b == 0
  bool upper_triangular() const;    // c == 0

  SpElement operator*(const SpElement& o) const;
  SpElement inverse() const;  // -J g^T J, exact
  bool operator==(const SpElement& o) const { return mat_eq(mat_, o.mat_); }

  static SpElement identity(Eigen::Index n);
  // (I, phi; 0, I) with phi symmetric.
  static SpElement upper_unipotent(const RatMat& phi);
  // (I, 0; phi, I) with phi symmetric.
  static SpElement lower_unipotent(const RatMat& phi);
  // (a^{-1}, 0; 0, a^T) for invertible a.
  static SpElement torus(const RatMat& a);
  // J itself as a group element.
  static SpElement j_element(Eigen::Index n);

 private:
  explicit SpElement(RatMat g) : mat_(std::move(g)) {}
  RatMat mat_;
};

// A point of the Siegel domain: complex symmetric with positive definite
// imaginary part. Exact rational real/imaginary parts are retained when the
// point was built from them, so downstream pairings can stay exact.
class SiegelPoint {
 public:
  explicit SiegelPoint(const CMat& omega);
  SiegelPoint(const RatMat& re, const RatMat& im);

  Eigen::Index n() const { return omega_.rows(); }
  const CMat& omega() const { return omega_; }
  const std::optional<CRatMat>& exact() const { return exact_; }

  // i * I with exact parts; the base point of every branch in the artifact.
  static SiegelPoint base_point(Eigen::Index n);

 private:
  CMat omega_;
  std::optional<CRatMat> exact_;
};

// Fractional-linear action (c + d w)(a + b w)^{-1}; throws
// near_singular_error if |det(a + b w)| < eps.
SiegelPoint sp_act(const SpElement& g, const SiegelPoint& w,
                   double eps = 1e-12);

// det(a + b w)^2.
std::complex<double> delta_eval(const SpElement& g, const CMat& omega);
CRat delta_eval_exact(const SpElement& g, const CRatMat& omega);

// chi = det, deg = det^2 on complex symmetric classes.
std::complex<double> chi_eval(const CMat& x);
std::complex<double> deg_eval(const CMat& x);

// --- branch-continuation helpers over the Siegel domain ---

using OmegaFunction = std::function<std::complex<double>(const CMat&)>;

// Continue Arg f along the straight segment from `from` to `to`, starting
// at the branch value theta_from.
double continue_along_segment(const OmegaFunction& f, const CMat& from,
                              const CMat& to, double theta_from);

// Continue Arg f along the vertical ray omega = i t I, t moving
// geometrically from t_from to t_to.
double continue_vertical_ray(const OmegaFunction& f, Eigen::Index n,
                             double t_from, double t_to, double theta_from);

// Anchoring data for a branch at one end of the vertical ray: the parameter
// value t and the principal-argument correction of det(I + (z/t) M)^power
// there. The t escalates (doubling toward infinity, or halving toward zero)
// from 2^10 resp. 2^-10 until ||M||/|t'| < 1/2 and |correction| < 0.1, where
// t' is t for the infinity anchor and 1/t for the zero anchor.
struct RayAnchor {
  double t = 0.0;
  double correction = 0.0;
};
RayAnchor ray_anchor_infinity(const DMat& m, std::complex<double> z, int power);
RayAnchor ray_anchor_zero(const DMat& m, std::complex<double> z, int power);

}  // namespace udelta
