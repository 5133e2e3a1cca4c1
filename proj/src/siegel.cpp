#include "udelta/siegel.hpp"

#include <Eigen/Cholesky>

#include "udelta/quadform.hpp"

namespace udelta {

IntMat standard_j(Eigen::Index n) {
  IntMat j = IntMat::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

SpElement SpElement::check(const RatMat& g) {
  const Eigen::Index m = g.rows();
  if (m != g.cols() || m % 2 != 0) throw error("SpElement: not even square");
  RatMat j = to_rat(standard_j(m / 2));
  RatMat lhs = g.transpose() * j * g;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index k = 0; k < m; ++k)
      if (lhs(i, k) != j(i, k))
        throw not_symplectic_error(
            "SpElement: (g^T J g)(" + std::to_string(i) + "," +
            std::to_string(k) + ") = " + rat_string(lhs(i, k)));
  return SpElement(g);
}

bool SpElement::in_u0() const { return det_exact(b()) != 0; }

bool SpElement::lower_triangular() const {
  RatMat bb = b();
  for (Eigen::Index i = 0; i < bb.rows(); ++i)
    for (Eigen::Index j = 0; j < bb.cols(); ++j)
      if (bb(i, j) != 0) return false;
  return true;
}

bool SpElement::upper_triangular() const {
  RatMat cc = c();
  for (Eigen::Index i = 0; i < cc.rows(); ++i)
    for (Eigen::Index j = 0; j < cc.cols(); ++j)
      if (cc(i, j) != 0) return false;
  return true;
}

SpElement SpElement::operator*(const SpElement& o) const {
  return SpElement(mat_ * o.mat_);
}

SpElement SpElement::inverse() const {
  RatMat j = to_rat(standard_j(n()));
  return SpElement(RatMat(-j * mat_.transpose() * j));
}

SpElement SpElement::identity(Eigen::Index n) {
  return SpElement(RatMat::Identity(2 * n, 2 * n));
}

SpElement SpElement::upper_unipotent(const RatMat& phi) {
  if (!is_symmetric(phi)) throw error("upper_unipotent: phi not symmetric");
  const Eigen::Index n = phi.rows();
  RatMat g = RatMat::Identity(2 * n, 2 * n);
  g.topRightCorner(n, n) = phi;
  return SpElement(g);
}

SpElement SpElement::lower_unipotent(const RatMat& phi) {
  if (!is_symmetric(phi)) throw error("lower_unipotent: phi not symmetric");
  const Eigen::Index n = phi.rows();
  RatMat g = RatMat::Identity(2 * n, 2 * n);
  g.bottomLeftCorner(n, n) = phi;
  return SpElement(g);
}

SpElement SpElement::torus(const RatMat& a) {
  const Eigen::Index n = a.rows();
  RatMat g = RatMat::Zero(2 * n, 2 * n);
  g.topLeftCorner(n, n) = inverse_exact(a);
  g.bottomRightCorner(n, n) = a.transpose();
  return SpElement(g);
}

SpElement SpElement::j_element(Eigen::Index n) {
  return SpElement(to_rat(standard_j(n)));
}

namespace {

void validate_siegel(const CMat& omega) {
  const Eigen::Index n = omega.rows();
  if (omega.cols() != n) throw error("SiegelPoint: not square");
  if ((omega - omega.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw error("SiegelPoint: omega not symmetric");
  Eigen::LLT<DMat> llt(omega.imag());
  if (llt.info() != Eigen::Success)
    throw error("SiegelPoint: Im(omega) not positive definite");
}

}  // namespace

SiegelPoint::SiegelPoint(const CMat& omega) : omega_(omega) {
  validate_siegel(omega_);
  // Kill roundoff asymmetry so downstream dets see an exactly symmetric
  // matrix.
  omega_ = 0.5 * (omega_ + omega_.transpose()).eval();
}

SiegelPoint::SiegelPoint(const RatMat& re, const RatMat& im) {
  if (!is_symmetric(re) || !is_symmetric(im))
    throw error("SiegelPoint: exact parts not symmetric");
  if (!is_positive_definite(im))
    throw error("SiegelPoint: Im(omega) not positive definite");
  exact_ = CRatMat(re, im);
  omega_ = exact_->to_complex();
}

SiegelPoint SiegelPoint::base_point(Eigen::Index n) {
  return SiegelPoint(RatMat::Zero(n, n), RatMat::Identity(n, n));
}

SiegelPoint sp_act(const SpElement& g, const SiegelPoint& w, double eps) {
  const Eigen::Index n = g.n();
  if (w.n() != n) throw error("sp_act: dimension mismatch");
  if (w.exact()) {
    CRatMat om = *w.exact();
    CRatMat a(g.a()), b(g.b()), c(g.c()), d(g.d());
    CRatMat den = a + b * om;
    CRat det = det_exact(den);
    if (std::abs(det.to_complex()) < eps)
      throw near_singular_error("sp_act: det(a + b omega) ~ 0");
    CRatMat res = (c + d * om) * inverse_exact(den);
    RatMat re = RatMat(Rat(1, 2) * (res.re + res.re.transpose()));
    RatMat im = RatMat(Rat(1, 2) * (res.im + res.im.transpose()));
    if (!mat_eq(re, res.re) || !mat_eq(im, res.im))
      throw error("sp_act: result not symmetric");
    return SiegelPoint(re, im);
  }
  CMat a = to_double(g.a()), b = to_double(g.b());
  CMat c = to_double(g.c()), d = to_double(g.d());
  CMat den = a + b * w.omega();
  if (std::abs(den.determinant()) < eps)
    throw near_singular_error("sp_act: det(a + b omega) ~ 0");
  CMat res = (c + d * w.omega()) * den.inverse();
  return SiegelPoint(res);
}

std::complex<double> delta_eval(const SpElement& g, const CMat& omega) {
  CMat a = to_double(g.a()), b = to_double(g.b());
  std::complex<double> det = (a + b * omega).determinant();
  return det * det;
}

CRat delta_eval_exact(const SpElement& g, const CRatMat& omega) {
  CRatMat a(g.a()), b(g.b());
  CRat det = det_exact(CRatMat(a + b * omega));
  return det * det;
}

std::complex<double> chi_eval(const CMat& x) { return x.determinant(); }

std::complex<double> deg_eval(const CMat& x) {
  std::complex<double> d = x.determinant();
  return d * d;
}

double continue_along_segment(const OmegaFunction& f, const CMat& from,
                              const CMat& to, double theta_from) {
  PathSegment seg;
  seg.eval = [&f, &from, &to](double t) {
    return f(CMat((1.0 - t) * from + t * to));
  };
  return arg_continue(seg, BranchValue{theta_from}).theta;
}

double continue_vertical_ray(const OmegaFunction& f, Eigen::Index n,
                             double t_from, double t_to, double theta_from) {
  const CMat eye = CMat::Identity(n, n);
  const double la = std::log(t_from), lb = std::log(t_to);
  PathSegment seg;
  seg.eval = [&](double s) {
    double t = std::exp((1.0 - s) * la + s * lb);
    return f(CMat(std::complex<double>(0.0, t) * eye));
  };
  return arg_continue(seg, BranchValue{theta_from}).theta;
}

namespace {

double anchor_correction(const DMat& m, std::complex<double> scale,
                         int power) {
  CMat probe = CMat::Identity(m.rows(), m.cols()) + scale * m;
  std::complex<double> det = probe.determinant();
  return std::arg(power == 2 ? det * det : det);
}

}  // namespace

RayAnchor ray_anchor_infinity(const DMat& m, std::complex<double> z,
                              int power) {
  double t = 1024.0;
  double norm = m.norm();
  for (;;) {
    double corr = anchor_correction(m, z / t, power);
    if (norm / t < 0.5 && std::abs(corr) < 0.1) return {t, corr};
    t *= 2.0;
    if (t > 1e80) throw precision_error("ray anchor: no acceptable T found");
  }
}

RayAnchor ray_anchor_zero(const DMat& m, std::complex<double> z, int power) {
  double t = 1.0 / 1024.0;
  double norm = m.norm();
  for (;;) {
    double corr = anchor_correction(m, z * t, power);
    if (norm * t < 0.5 && std::abs(corr) < 0.1) return {t, corr};
    t *= 0.5;
    if (t < 1e-80) throw precision_error("ray anchor: no acceptable eps found");
  }
}

}  // namespace udelta
