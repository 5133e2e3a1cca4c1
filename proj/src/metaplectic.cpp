#include "udelta/metaplectic.hpp"

#include <cmath>

#include "udelta/lattice.hpp"

namespace udelta {

namespace {

constexpr double kPi = 3.14159265358979323846;

CMat base_omega(Eigen::Index n) {
  return CMat::Identity(n, n) * std::complex<double>(0.0, 1.0);
}

OmegaFunction delta_fn(const SpElement& g) {
  return [g](const CMat& omega) { return delta_eval(g, omega); };
}

}  // namespace

MetaElement::MetaElement(SpElement g, double base_arg)
    : g_(std::move(g)), base_arg_(base_arg) {
  std::complex<double> v = delta_eval(g_, base_omega(g_.n()));
  if (std::abs(wrap_angle(base_arg_ - std::arg(v))) > 1e-9)
    throw error("MetaElement: base_arg inconsistent with delta at base point");
}

double MetaElement::branch_at(const CMat& omega) const {
  return continue_along_segment(delta_fn(g_), base_omega(g_.n()), omega,
                                base_arg_);
}

std::complex<double> MetaElement::f_at(const CMat& omega) const {
  double theta = branch_at(omega);
  double mag = std::abs(delta_eval(g_, omega));
  return {-theta / (2 * kPi), std::log(mag) / (2 * kPi)};
}

std::complex<double> SpinElement::f_at(const CMat& omega) const {
  CMat den = to_double(g.a()) + to_double(g.b()) * omega;
  return static_cast<double>(sign) * den.determinant();
}

Rat SpinElement::f_at(const RatMat& phi) const {
  Rat det = det_exact(RatMat(g.a() + g.b() * phi));
  return sign > 0 ? det : Rat(-det);
}

MetaElement canonical_lift(const SpElement& g) {
  const Eigen::Index n = g.n();
  if (g.lower_triangular()) return MetaElement(g, 0.0);
  if (g.in_u0()) {
    // det(a + i t b) = (it)^n det(b) det(I - (i/t) b^{-1} a); anchored to
    // n pi at the top of the ray, squared correction included.
    RatMat ba = solve_exact(g.b(), g.a());
    RayAnchor top = ray_anchor_infinity(to_double(ba), {0.0, -1.0}, 2);
    double theta = continue_vertical_ray(delta_fn(g), n, top.t, 1.0,
                                         n * kPi + top.correction);
    return MetaElement(g, theta);
  }
  if (g.upper_triangular()) {
    // det(a + i t b)^2 = det(a)^2 det(I + i t a^{-1} b)^2 -> positive reals
    // as t -> 0.
    RatMat psi = solve_exact(g.a(), g.b());
    RayAnchor bot = ray_anchor_zero(to_double(psi), {0.0, 1.0}, 2);
    double theta =
        continue_vertical_ray(delta_fn(g), n, bot.t, 1.0, bot.correction);
    return MetaElement(g, theta);
  }
  throw unsupported_element_error(
      "canonical_lift: element outside U^0 and both parabolics");
}

MetaElement section_lift(const SpElement& g) {
  if (!g.in_u0() && g.upper_triangular() && !g.lower_triangular()) {
    RatMat psi = solve_exact(g.a(), g.b());
    MetaElement hom = canonical_lift(g);
    return central_shift(hom, index_sym_degenerate(psi));
  }
  return canonical_lift(g);
}

MetaElement lift_any(const SpElement& g) {
  if (g.in_u0() || g.lower_triangular() || g.upper_triangular())
    return section_lift(g);
  const Eigen::Index n = g.n();
  if (det_exact(g.a()) != 0) {
    // g = (g J^{-1}) J with b(g J^{-1}) = -a invertible.
    SpElement j = SpElement::j_element(n);
    return meta_mul(section_lift(g * j.inverse()), section_lift(j));
  }
  // Push g into U^0 by a unipotent: b(g g+_psi) = a psi + b.
  for (long k = 1; k < 64; ++k) {
    RatMat psi = RatMat::Identity(n, n) * rat(k);
    SpElement up = SpElement::upper_unipotent(psi);
    SpElement gu = g * up;
    if (!gu.in_u0()) continue;
    return meta_mul(section_lift(gu), meta_inv(section_lift(up)));
  }
  throw unsupported_element_error("lift_any: could not factor through U^0");
}

MetaElement meta_mul(const MetaElement& m1, const MetaElement& m2) {
  const Eigen::Index n = m1.g().n();
  SiegelPoint moved = sp_act(m2.g(), SiegelPoint::base_point(n));
  double theta1 = m1.branch_at(moved.omega());
  return MetaElement(m1.g() * m2.g(), theta1 + m2.base_arg());
}

MetaElement meta_inv(const MetaElement& m) {
  const Eigen::Index n = m.g().n();
  SpElement gi = m.g().inverse();
  SiegelPoint moved = sp_act(gi, SiegelPoint::base_point(n));
  return MetaElement(gi, -m.branch_at(moved.omega()));
}

MetaElement central_shift(const MetaElement& m, long k) {
  return MetaElement(m.g(), m.base_arg() + 2 * kPi * k);
}

long lambda_exact(const SpElement& g1, const SpElement& g2) {
  SpElement g12 = g1 * g2;
  if (!g1.in_u0() || !g2.in_u0() || !g12.in_u0())
    throw error("lambda_exact: triple not inside U^0");
  RatMat arg = solve_exact(g1.b(), g12.b()) * inverse_exact(g2.b());
  if (!is_symmetric(arg))
    throw error("lambda_exact: argument matrix not symmetric");
  return -index_sym(arg);
}

long lambda_general(const SpElement& g1, const SpElement& g2, double tol) {
  MetaElement prod = meta_mul(section_lift(g1), section_lift(g2));
  MetaElement ref = section_lift(g1 * g2);
  double lam = (ref.base_arg() - prod.base_arg()) / (2 * kPi);
  double rounded = std::round(lam);
  if (std::abs(lam - rounded) > tol)
    throw integrality_error("lambda_general: non-integral cocycle value " +
                            std::to_string(lam));
  return static_cast<long>(rounded);
}

Int q_of(const SpElement& g) {
  Int d = denominator_lcm(g.mat());
  IntMat gz(g.mat().rows(), g.mat().cols());
  for (Eigen::Index i = 0; i < gz.rows(); ++i)
    for (Eigen::Index j = 0; j < gz.cols(); ++j) {
      Rat v = g.mat()(i, j) * Rat(d);
      gz(i, j) = v.get_num();
    }
  IntLattice pre = preimage_lattice(gz, d);
  Int idx = det_bareiss(pre.basis());
  if (idx < 0) idx = -idx;
  return idx * idx;
}

Int n_of(const SpElement& g1, const SpElement& g2) {
  Int s1 = sqrt(q_of(g1)), s2 = sqrt(q_of(g2)), s12 = sqrt(q_of(g1 * g2));
  Int num = s1 * s2;
  if (num % s12 != 0)
    throw integrality_error("n_of: non-integral multiplicity");
  return num / s12;
}

SpinElement spin_of(const MetaElement& m, double tol) {
  const Eigen::Index n = m.g().n();
  CMat den = to_double(m.g().a()) + to_double(m.g().b()) * base_omega(n);
  double half = m.base_arg() / 2;
  double root_arg = std::arg(den.determinant());
  if (std::abs(wrap_angle(root_arg - half)) < tol) return {m.g(), +1};
  if (std::abs(wrap_angle(root_arg + kPi - half)) < tol) return {m.g(), -1};
  throw error("spin_of: sign undetermined at base point");
}

}  // namespace udelta
