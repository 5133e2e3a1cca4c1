#include "udelta/phases.hpp"

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace udelta {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double phase(const PhasePoint& sigma, const LiftedLagrangian& lt) {
  return sigma.z.real() + lt.branch_at(sigma.omega.omega()) / (2 * kPi);
}

double phase_compat(const PhasePoint& sigma, const LiftedLagrangian& lt) {
  CohClass<Rat> cls = class_of(lt);
  CohClass<std::complex<double>> l =
      ell(sigma.omega.omega(), std::complex<double>(1, 0));
  std::complex<double> val =
      std::exp(std::complex<double>(0, kPi) * sigma.z) *
      chi_pair(l, to_complex(cls));
  return std::abs(wrap_angle(std::arg(val) - kPi * phase(sigma, lt)));
}

bool inequality_check(const PhasePoint& sigma, const LiftedLagrangian& lt1,
                      const LiftedLagrangian& lt2, double slack) {
  long idx = index_pair(lt1, lt2);
  return phase(sigma, lt1) <= phase(sigma, lt2) + idx + slack;
}

PhasePoint meta_act(const MetaElement& m, const PhasePoint& sigma) {
  SiegelPoint moved = sp_act(m.g(), sigma.omega);
  std::complex<double> f = m.f_at(sigma.omega.omega());
  return PhasePoint{moved, sigma.z - f};
}

double equivariance_check(const MetaElement& m, const PhasePoint& sigma,
                          const LiftedLagrangian& lt) {
  PhasePoint moved_sigma = meta_act(m, sigma);
  LiftedLagrangian moved_lt = ud_act(m, lt);
  return std::abs(phase(moved_sigma, moved_lt) - phase(sigma, lt));
}

double surface_bridgeland_phase(const SiegelPoint& w,
                                const LiftedLagrangian& lt,
                                std::complex<double> z) {
  const Eigen::Index n = lt.lattice().n();
  if (n != 2) throw error("surface_bridgeland_phase: requires n = 2");
  PhasePoint sigma{w, z};
  if (lt.lattice() == LagrangianLattice::skyscraper(n)) {
    long k = deck_offset(lt, lift_skyscraper(n));
    return 1.0 + z.real() + k;
  }
  std::optional<RatMat> psi = lt.lattice().as_graph();
  if (!psi)
    throw unsupported_element_error(
        "surface_bridgeland_phase: lift is neither graph nor skyscraper");
  LiftedLagrangian canonical = lift_graph(*psi);
  long k = deck_offset(lt, canonical);
  std::complex<double> zc = charge(PhasePoint{w, 0.0}, canonical);
  double win = std::arg(zc) / kPi;  // principal, in (-1, 1]
  if (zc.imag() > 0) {
    // heart representative lies in (0, 1]
    if (win <= 0) win += 2.0;
  } else {
    // shifted representative in (-1, 0]
    if (win > 0) win -= 2.0;
  }
  return win + z.real() + k;
}

double closed_form_graph_phase(const PhasePoint& sigma, const RatMat& phi) {
  const Eigen::Index n = phi.rows();
  DMat alpha = sigma.omega.omega().imag();
  DMat beta = sigma.omega.omega().real() - to_double(phi);
  Eigen::LLT<DMat> llt(alpha);
  if (llt.info() != Eigen::Success)
    throw error("closed_form_graph_phase: Im(omega) not positive definite");
  DMat l = llt.matrixL();
  DMat sym = l.triangularView<Eigen::Lower>().solve(beta);
  sym = l.triangularView<Eigen::Lower>().solve(DMat(sym.transpose()));
  Eigen::SelfAdjointEigenSolver<DMat> eig(0.5 * (sym + sym.transpose()));
  double theta = -2.0 * kPi * n;
  for (Eigen::Index k = 0; k < n; ++k)
    theta += 2.0 * std::atan2(1.0, eig.eigenvalues()(k));
  return sigma.z.real() + theta / (2 * kPi);
}

PhaseReport make_phase_report(const PhasePoint& sigma,
                              const LiftedLagrangian& lt) {
  PhaseReport rep;
  rep.phase = phase(sigma, lt);
  rep.charge = charge(sigma, lt);
  rep.compat_residual = phase_compat(sigma, lt);
  std::optional<RatMat> psi = lt.lattice().as_graph();
  if (psi)
    rep.deck = deck_offset(lt, lift_graph(*psi));
  else if (lt.lattice() == LagrangianLattice::skyscraper(lt.lattice().n()))
    rep.deck = deck_offset(lt, lift_skyscraper(lt.lattice().n()));
  if (rep.compat_residual > 1e-6)
    throw error("phase report: compatibility residual too large");
  return rep;
}

}  // namespace udelta
