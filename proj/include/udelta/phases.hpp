#pragma once

#include "udelta/numclass.hpp"

namespace udelta {

// phi_sigma = Re(z) + (1/2 pi) Arg delta(L), continued from the base point.
double phase(const PhasePoint& sigma, const LiftedLagrangian& lt);

// Angular distance between Arg(exp(pi i z) chi(ell(omega), [F])) and
// pi * phase, mod 2 pi.
double phase_compat(const PhasePoint& sigma, const LiftedLagrangian& lt);

// phase(lt1) <= phase(lt2) + index_pair(lt1, lt2) + slack.
bool inequality_check(const PhasePoint& sigma, const LiftedLagrangian& lt1,
                      const LiftedLagrangian& lt2, double slack = 1e-9);

// |phase(m sigma, m lt) - phase(sigma, lt)| for the covering action on
// (omega, z).
double equivariance_check(const MetaElement& m, const PhasePoint& sigma,
                          const LiftedLagrangian& lt);

// The covering action on sigma: (g(omega), z - f_g(omega)).
PhasePoint meta_act(const MetaElement& m, const PhasePoint& sigma);

// Surface-side stability phase at sigma = (omega, z), n = 2 only: the
// skyscraper has phase 1 + Re z; a graph lift is placed in (0,1] or (-1,0]
// by the sign of Im Z of its canonical representative, deck shifts adding
// integers.
double surface_bridgeland_phase(const SiegelPoint& w,
                                const LiftedLagrangian& lt,
                                std::complex<double> z = 0.0);

// Independent route to the graph phase: det(omega - phi) factored through
// the real spectrum of B^{-1}(Re omega - phi)B^{-T}, Im omega = B B^T.
double closed_form_graph_phase(const PhasePoint& sigma, const RatMat& phi);

struct PhaseReport {
  double phase = 0.0;
  std::complex<double> charge;
  double compat_residual = 0.0;
  long deck = 0;  // offset against the canonical lift when one exists
};

PhaseReport make_phase_report(const PhasePoint& sigma,
                              const LiftedLagrangian& lt);

}  // namespace udelta
