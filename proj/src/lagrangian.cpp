#include "udelta/lagrangian.hpp"

#include <cmath>

namespace udelta {

namespace {

constexpr double kPi = 3.14159265358979323846;

CMat base_omega(Eigen::Index n) {
  return CMat::Identity(n, n) * std::complex<double>(0.0, 1.0);
}

}  // namespace

LagrangianLattice LagrangianLattice::make(const RatMat& x, const RatMat& y) {
  const Eigen::Index n = x.rows();
  if (x.cols() != n || y.rows() != n || y.cols() != n)
    throw error("LagrangianLattice: x, y must be n x n");
  if (!is_symmetric(RatMat(x.transpose() * y)))
    throw not_isotropic_error("LagrangianLattice: x^T y not symmetric");
  RatMat stacked(2 * n, n);
  stacked.topRows(n) = x;
  stacked.bottomRows(n) = y;
  if (rank_exact(stacked) != n)
    throw rank_deficient_error("LagrangianLattice: rank below n");
  return from_columns(stacked);
}

LagrangianLattice LagrangianLattice::from_columns(const RatMat& columns) {
  const Eigen::Index n = columns.rows() / 2;
  if (columns.rows() != 2 * n || columns.cols() != n)
    throw error("LagrangianLattice: expected 2n x n columns");
  IntLattice sat = saturate(lattice_from_columns(columns));
  if (sat.rank() != n)
    throw rank_deficient_error("LagrangianLattice: rank below n");
  IntMat b = sat.basis();
  IntMat xty = b.topRows(n).transpose() * b.bottomRows(n);
  if (!mat_eq(xty, IntMat(xty.transpose())))
    throw not_isotropic_error("LagrangianLattice: basis not isotropic");
  return LagrangianLattice(std::move(b));
}

LagrangianLattice LagrangianLattice::skyscraper(Eigen::Index n) {
  RatMat cols = RatMat::Zero(2 * n, n);
  cols.bottomRows(n) = RatMat::Identity(n, n);
  return from_columns(cols);
}

LagrangianLattice LagrangianLattice::graph(const RatMat& phi) {
  if (!is_symmetric(phi)) throw error("graph: phi not symmetric");
  return make(RatMat::Identity(phi.rows(), phi.rows()), phi);
}

std::optional<RatMat> LagrangianLattice::as_graph() const {
  RatMat x = to_rat(x_block());
  if (det_exact(x) == 0) return std::nullopt;
  RatMat psi = to_rat(y_block()) * inverse_exact(x);
  return psi;
}

std::complex<double> LagrangianLattice::delta_at(const CMat& omega) const {
  CMat x = to_double(x_block()), y = to_double(y_block());
  std::complex<double> det = (omega * x - y).determinant();
  return det * det;
}

CRat LagrangianLattice::delta_at_exact(const CRatMat& omega) const {
  CRatMat x(to_rat(x_block())), y(to_rat(y_block()));
  CRat det = det_exact(CRatMat(omega * x - y));
  return det * det;
}

bool is_transversal(const LagrangianLattice& l1, const LagrangianLattice& l2) {
  const Eigen::Index n = l1.n();
  if (l2.n() != n) throw error("is_transversal: dimension mismatch");
  IntMat joint(2 * n, 2 * n);
  joint.leftCols(n) = l1.basis();
  joint.rightCols(n) = l2.basis();
  return rank_exact(to_rat(joint)) == 2 * n;
}

LiftedLagrangian::LiftedLagrangian(LagrangianLattice l, double base_arg)
    : lattice_(std::move(l)), base_arg_(base_arg) {
  std::complex<double> v = lattice_.delta_at(base_omega(lattice_.n()));
  if (std::abs(wrap_angle(base_arg_ - std::arg(v))) > 1e-9)
    throw error("LiftedLagrangian: base_arg inconsistent with delta");
}

double LiftedLagrangian::branch_at(const CMat& omega) const {
  const LagrangianLattice& l = lattice_;
  OmegaFunction f = [&l](const CMat& w) { return l.delta_at(w); };
  return continue_along_segment(f, base_omega(l.n()), omega, base_arg_);
}

LiftedLagrangian lift_skyscraper(Eigen::Index n) {
  return LiftedLagrangian(LagrangianLattice::skyscraper(n), 0.0);
}

LiftedLagrangian lift_graph(const RatMat& phi) {
  const Eigen::Index n = phi.rows();
  LagrangianLattice l = LagrangianLattice::graph(phi);
  // det(i t X - Y)^2 = det(i t I - phi)^2 det(B)^2 on the canonical basis;
  // det(B)^2 > 0 drops out of the argument.
  RayAnchor top = ray_anchor_infinity(to_double(phi), {0.0, 1.0}, 2);
  OmegaFunction f = [&l](const CMat& w) { return l.delta_at(w); };
  double theta =
      continue_vertical_ray(f, n, top.t, 1.0, -n * kPi + top.correction);
  return LiftedLagrangian(std::move(l), theta);
}

LiftedLagrangian ud_act(const MetaElement& m, const LiftedLagrangian& lt) {
  const Eigen::Index n = m.g().n();
  RatMat moved_cols = m.g().mat() * to_rat(lt.lattice().basis());
  LagrangianLattice image = LagrangianLattice::from_columns(moved_cols);
  SiegelPoint pulled = sp_act(m.g().inverse(), SiegelPoint::base_point(n));
  double theta_delta = lt.branch_at(pulled.omega());
  double theta_meta = m.branch_at(pulled.omega());
  return LiftedLagrangian(std::move(image), theta_delta - theta_meta);
}

SpElement symplectic_complete(const LagrangianLattice& l) {
  const Eigen::Index n = l.n();
  if (l == LagrangianLattice::skyscraper(n)) return SpElement::identity(n);
  IntMat v = l.basis();
  IntMat j = standard_j(n);
  // Integral W with <v_i, w_j> = delta_ij, then the isotropy correction
  // W += V S with S - S^T = -(W^T J W).
  IntMat pairing = v.transpose() * j;  // n x 2n, primitive
  IntMat w = right_inverse(pairing);
  IntMat skew = w.transpose() * j * w;
  IntMat s = IntMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < i; ++k) s(i, k) = skew(i, k);
  w += v * s;
  IntMat basis(2 * n, 2 * n);
  basis.leftCols(n) = v;
  basis.rightCols(n) = w;
  RatMat g = to_rat(-j) * inverse_exact(to_rat(basis));
  SpElement result = SpElement::check(g);
  // g v_i = e_{n+i} by construction, so g L is the skyscraper lattice.
  return result;
}

long deck_offset(const LiftedLagrangian& lt, const LiftedLagrangian& reference,
                 double tol) {
  if (!(lt.lattice() == reference.lattice()))
    throw error("deck_offset: lifts over different lattices");
  double k = (lt.base_arg() - reference.base_arg()) / (2 * kPi);
  double rounded = std::round(k);
  if (std::abs(k - rounded) > tol)
    throw integrality_error("deck_offset: non-integral offset " +
                            std::to_string(k));
  return static_cast<long>(rounded);
}

long index_pair(const LiftedLagrangian& lt1, const LiftedLagrangian& lt2,
                double tol) {
  if (!is_transversal(lt1.lattice(), lt2.lattice()))
    throw not_transversal_error("index_pair: lattices not transversal");
  SpElement g = symplectic_complete(lt2.lattice());
  MetaElement m = lift_any(g);
  LiftedLagrangian moved1 = ud_act(m, lt1);
  LiftedLagrangian moved2 = ud_act(m, lt2);
  std::optional<RatMat> psi = moved1.lattice().as_graph();
  if (!psi)
    throw error("index_pair: transported first lattice is not a graph");
  long k1 = deck_offset(moved1, lift_graph(*psi), tol);
  long k2 = deck_offset(moved2, lift_skyscraper(lt2.lattice().n()), tol);
  return k1 - k2;
}

}  // namespace udelta
