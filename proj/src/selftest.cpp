#include "udelta/selftest.hpp"

#include <cmath>
#include <sstream>

namespace udelta::selftest {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

uint64_t Rng::next() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
}

double Rng::real01() { return (next() >> 11) * 0x1.0p-53; }

Rat random_rat(Rng& rng, long max_num, long max_den) {
  return rat(rng.uniform(-max_num, max_num), rng.uniform(1, max_den));
}

RatMat random_symmetric(Rng& rng, Eigen::Index n, long max_num, long max_den) {
  RatMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      Rat v = random_rat(rng, max_num, max_den);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

RatMat random_symmetric_nondeg(Rng& rng, Eigen::Index n, long max_num,
                               long max_den) {
  for (int tries = 0; tries < 256; ++tries) {
    RatMat m = random_symmetric(rng, n, max_num, max_den);
    if (det_exact(m) != 0) return m;
  }
  throw error("random_symmetric_nondeg: sampling failed");
}

IntMat random_unimodular(Rng& rng, Eigen::Index n) {
  IntMat m = IntMat::Identity(n, n);
  for (Eigen::Index step = 0; step < 3 * n; ++step) {
    Eigen::Index i = rng.uniform(0, n - 1);
    Eigen::Index j = rng.uniform(0, n - 1);
    switch (rng.uniform(0, 2)) {
      case 0:
        if (i != j) m.row(i) += Int(rng.uniform(-2, 2)) * m.row(j);
        break;
      case 1:
        if (i != j) m.row(i).swap(m.row(j));
        break;
      default:
        m.row(i) = -m.row(i);
    }
  }
  return m;
}

RatMat random_spd(Rng& rng, Eigen::Index n) {
  RatMat q(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) q(i, j) = rat(rng.uniform(-2, 2));
  return RatMat(q.transpose() * q + RatMat::Identity(n, n));
}

SpElement random_sp(Rng& rng, Eigen::Index n, int factors, bool integral) {
  SpElement g = SpElement::identity(n);
  for (int k = 0; k < factors; ++k) {
    switch (rng.uniform(0, 3)) {
      case 0: {
        RatMat phi = integral ? to_rat(to_int(random_symmetric(rng, n, 2, 1)))
                              : random_symmetric(rng, n, 2, 2);
        g = g * SpElement::upper_unipotent(phi);
        break;
      }
      case 1: {
        RatMat phi = integral ? to_rat(to_int(random_symmetric(rng, n, 2, 1)))
                              : random_symmetric(rng, n, 2, 2);
        g = g * SpElement::lower_unipotent(phi);
        break;
      }
      case 2: {
        RatMat a = to_rat(random_unimodular(rng, n));
        if (!integral && rng.uniform(0, 1) == 0) a(0, 0) *= rat(2);
        g = g * SpElement::torus(a);
        break;
      }
      default:
        g = g * SpElement::j_element(n);
    }
  }
  return g;
}

SpElement random_sp_u0(Rng& rng, Eigen::Index n, int factors, bool integral) {
  for (int tries = 0; tries < 256; ++tries) {
    SpElement g = random_sp(rng, n, factors, integral);
    if (g.in_u0()) return g;
  }
  throw error("random_sp_u0: sampling failed");
}

SiegelPoint random_siegel(Rng& rng, Eigen::Index n) {
  RatMat beta = random_symmetric(rng, n, 2, 2);
  return SiegelPoint(beta, random_spd(rng, n));
}

LiftedLagrangian random_lift(Rng& rng, Eigen::Index n, bool transported) {
  LiftedLagrangian base = rng.uniform(0, 3) == 0
                              ? lift_skyscraper(n)
                              : lift_graph(random_symmetric(rng, n, 2, 2));
  LiftedLagrangian lt = base.deck(rng.uniform(-2, 2));
  if (transported && rng.uniform(0, 1) == 0) {
    MetaElement m = lift_any(random_sp(rng, n, 3, /*integral=*/true));
    lt = ud_act(m, lt);
  }
  return lt;
}

namespace {

struct Check {
  int checks = 0;
  int failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (failures <= 8) detail << "  FAIL " << what << "\n";
    }
  }
  SuiteResult result(const std::string& name) const {
    return {name, failures == 0, checks, failures, detail.str()};
  }
};

int scaled(const SuiteOptions& opt, int def) {
  return opt.samples > 0 ? opt.samples : def;
}

// --- criterion 1: index theorem ---------------------------------------

SuiteResult suite_index_theorem(const SuiteOptions& opt) {
  Check ck;
  Rng rng(opt.seed);
  for (Eigen::Index n = 1; n <= 3; ++n) {
    int cases = scaled(opt, 100);
    for (int c = 0; c < cases; ++c) {
      RatMat x = random_symmetric_nondeg(rng, n, 5, 3);
      int ix = line_index(x, RatMat(RatMat::Identity(n, n)));
      DMat xd = to_double(x);
      Eigen::SelfAdjointEigenSolver<DMat> eig(xd);
      double sigma_min = eig.eigenvalues().cwiseAbs().minCoeff();
      double t_end = std::min(1e-8 * sigma_min / n, 0.05);
      // chi branch: anchored n*pi/2 at the top of the ray.
      RayAnchor top = ray_anchor_infinity(xd, {0.0, -1.0}, 1);
      OmegaFunction chi = [&xd](const CMat& w) {
        return CMat(xd + w).determinant();
      };
      double theta = continue_vertical_ray(chi, n, top.t, t_end,
                                           n * kPi / 2 + top.correction);
      ck.expect(std::abs(theta - ix * kPi) < opt.tol,
                "Arg chi limit != i(x) pi  (n=" + std::to_string(n) + ")");
      // deg branch: anchored n*pi, limit 2 pi i(x).
      RayAnchor top2 = ray_anchor_infinity(xd, {0.0, -1.0}, 2);
      OmegaFunction deg = [&xd](const CMat& w) {
        std::complex<double> d = CMat(xd + w).determinant();
        return d * d;
      };
      double theta2 = continue_vertical_ray(deg, n, top2.t, t_end,
                                            n * kPi + top2.correction);
      ck.expect(std::abs(theta2 - 2 * kPi * ix) < opt.tol,
                "Arg deg limit != 2 pi i(x)");
    }
  }
  return ck.result("index-theorem");
}

// --- criterion 2: cocycle battery --------------------------------------

bool section_liftable(const SpElement& g) {
  return g.in_u0() || g.lower_triangular() || g.upper_triangular();
}

SuiteResult suite_cocycle(const SuiteOptions& opt) {
  Check ck;
  Rng rng(opt.seed + 1);
  int pairs = scaled(opt, 200);
  for (int c = 0; c < pairs; ++c) {
    Eigen::Index n = 1 + (c % 3);
    SpElement g1 = random_sp(rng, n, 3, false);
    SpElement g2 = random_sp(rng, n, 3, false);
    if (!section_liftable(g1) || !section_liftable(g2) ||
        !section_liftable(g1 * g2)) {
      --c;
      continue;
    }
    long lam = 0;
    try {
      lam = lambda_general(g1, g2, opt.tol);
      ck.expect(true, "");
    } catch (const error& e) {
      ck.expect(false, std::string("lambda_general: ") + e.what());
      continue;
    }
    if (g1.in_u0() && g2.in_u0() && (g1 * g2).in_u0())
      ck.expect(lam == lambda_exact(g1, g2), "lambda general != exact");
  }
  // 2-cocycle identity.
  int triples = scaled(opt, 60);
  for (int c = 0; c < triples; ++c) {
    Eigen::Index n = 1 + (c % 2);
    SpElement g1 = random_sp_u0(rng, n, 3, false);
    SpElement g2 = random_sp_u0(rng, n, 3, false);
    SpElement g3 = random_sp_u0(rng, n, 3, false);
    SpElement g12 = g1 * g2, g23 = g2 * g3;
    if (!section_liftable(g12) || !section_liftable(g23) ||
        !section_liftable(g12 * g3)) {
      --c;
      continue;
    }
    long lhs = lambda_general(g1, g2) + lambda_general(g12, g3);
    long rhs = lambda_general(g2, g3) + lambda_general(g1, g23);
    ck.expect(lhs == rhs, "2-cocycle identity violated");
  }
  // lambda(t, g) = 0.
  for (int c = 0; c < scaled(opt, 50); ++c) {
    Eigen::Index n = 1 + (c % 3);
    RatMat a = to_rat(random_unimodular(rng, n));
    if (rng.uniform(0, 1)) a(0, 0) *= rat(2);
    SpElement t = SpElement::torus(a);
    SpElement g = random_sp_u0(rng, n, 3, false);
    if (!(t * g).in_u0()) {
      --c;
      continue;
    }
    ck.expect(lambda_general(t, g) == 0, "lambda(t, g) != 0");
  }
  // lambda(g+_phi1, g+_phi2) = i(phi1+phi2) - i(phi1) - i(phi2).
  for (int c = 0; c < scaled(opt, 100); ++c) {
    Eigen::Index n = 1 + (c % 3);
    RatMat p1 = random_symmetric_nondeg(rng, n);
    RatMat p2 = random_symmetric_nondeg(rng, n);
    if (det_exact(RatMat(p1 + p2)) == 0) {
      --c;
      continue;
    }
    long expected = index_sym(RatMat(p1 + p2)) - index_sym(p1) - index_sym(p2);
    long got = lambda_exact(SpElement::upper_unipotent(p1),
                            SpElement::upper_unipotent(p2));
    ck.expect(got == expected, "unipotent cocycle value mismatch");
    long got2 = lambda_general(SpElement::upper_unipotent(p1),
                               SpElement::upper_unipotent(p2));
    ck.expect(got2 == expected, "unipotent cocycle value mismatch (branch)");
  }
  return ck.result("cocycle");
}

// --- criterion 3: N and q ----------------------------------------------

SuiteResult suite_nq(const SuiteOptions& opt) {
  Check ck;
  Rng rng(opt.seed + 2);
  for (int c = 0; c < scaled(opt, 200); ++c) {
    Eigen::Index n = 1 + (c % 3);
    SpElement g1 = random_sp(rng, n, 3, false);
    SpElement g2 = random_sp(rng, n, 3, false);
    try {
      Int nn = n_of(g1, g2);
      ck.expect(nn >= 1, "N not positive");
    } catch (const integrality_error& e) {
      ck.expect(false, std::string("N integrality: ") + e.what());
    }
  }
  for (int c = 0; c < scaled(opt, 200); ++c) {
    Eigen::Index n = 1 + (c % 3);
    SpElement g = random_sp(rng, n, 4, false);
    ck.expect(q_of(g) == q_of(g.inverse()), "q(g) != q(g^{-1})");
  }
  RatMat t(2, 2);
  t << rat(1, 2), rat(0), rat(0), rat(2);
  ck.expect(q_of(SpElement::check(t)) == 4, "q(diag(1/2, 2)) != 4");
  return ck.result("nq");
}

// --- criterion 4: exact pairing table ----------------------------------

SuiteResult suite_pairing(const SuiteOptions& opt) {
  Check ck;
  Rng rng(opt.seed + 3);
  for (Eigen::Index n = 1; n <= 3; ++n) {
    CohClass<Rat> h = ns_to_form(RatMat(RatMat::Identity(n, n)));
    std::vector<CohClass<Rat>> powers{CohClass<Rat>::unit(n)};
    for (Eigen::Index i = 1; i <= n; ++i)
      powers.push_back(wedge(powers.back(), h));
    Rat nfact(1);
    for (Eigen::Index k = 2; k <= n; ++k) nfact *= rat(k);
    for (Eigen::Index i = 0; i <= n; ++i) {
      Rat expect = (i % 2 == 0) ? nfact : Rat(-nfact);
      ck.expect(chi_pair(powers[i], powers[n - i]) == expect,
                "chi(H^i, H^{n-i}) != (-1)^i n!");
    }
  }
  for (int c = 0; c < scaled(opt, 50); ++c) {
    Eigen::Index n = 1 + (c % 3);
    long r = rng.uniform(1, 7);
    long d = rng.uniform(-7, 7);
    Int g = gcd(Int(r), Int(d));
    if (g != 1) {
      --c;
      continue;
    }
    CRat tau(random_rat(rng, 4, 3), rat(rng.uniform(1, 4), rng.uniform(1, 3)));
    CRatMat tau_h(RatMat(RatMat::Identity(n, n) * tau.re),
                  RatMat(RatMat::Identity(n, n) * tau.im));
    CohClass<CRat> l = ell(tau_h, CRat(rat(1)));
    RatMat slope = RatMat(RatMat::Identity(n, n) * rat(d, r));
    CohClass<CRat> v = to_crat(ch_semihomog(slope));
    CRat expect(rat(1));
    CRat base = CRat(rat(d)) - CRat(rat(r)) * tau;
    for (Eigen::Index k = 0; k < n; ++k) expect *= base;
    ck.expect(chi_pair(l, v) == expect, "chi(ell(tau H), [V_{r,d}]) mismatch");
  }
  return ck.result("pairing");
}

// --- criterion 5: spin representation ----------------------------------

SuiteResult suite_rho(const SuiteOptions& opt) {
  Check ck;
  Rng rng(opt.seed + 4);
  for (int c = 0; c < scaled(opt, 100); ++c) {
    Eigen::Index n = 1 + (c % 2);
    SpinElement s1{random_sp(rng, n, 3, true),
                   rng.uniform(0, 1) ? 1 : -1};
    SpinElement s2{random_sp(rng, n, 3, true),
                   rng.uniform(0, 1) ? 1 : -1};
    RhoMap r1 = rho_hat(s1), r2 = rho_hat(s2), r12 = rho_hat(spin_mul(s1, s2));
    ck.expect(mat_eq(RatMat(r1.mat * r2.mat), r12.mat),
              "rho not multiplicative");
    CohClass<Rat> x = ell(random_symmetric(rng, n, 2, 2), random_rat(rng));
    CohClass<Rat> y = ell(random_symmetric(rng, n, 2, 2), random_rat(rng));
    ck.expect(chi_pair(r1.apply(x), r1.apply(y)) == chi_pair(x, y),
              "chi invariance violated");
  }
  // n = 1 Fourier element: 1 -> -pt, pt -> 1.
  RhoMap f = rho_hat(SpinElement{SpElement::j_element(1), +1});
  CohClass<Rat> one = CohClass<Rat>::unit(1), pt = CohClass<Rat>::point(1);
  ck.expect(f.apply(one) == -pt, "rho(J): 1 -> -pt failed");
  ck.expect(f.apply(pt) == one, "rho(J): pt -> 1 failed");
  return ck.result("rho");
}

// --- criterion 6: mirror identity --------------------------------------

SuiteResult suite_mirror(const SuiteOptions& opt) {
  Check ck;
  Rng rng(opt.seed + 5);
  int lifts = scaled(opt, 100);
  for (int c = 0; c < lifts; ++c) {
    Eigen::Index n = 1 + (c % 3);
    LiftedLagrangian lt = random_lift(rng, n);
    CohClass<Rat> cls(n);
    try {
      cls = class_of(lt);
    } catch (const error& e) {
      ck.expect(false, std::string("class_of: ") + e.what());
      continue;
    }
    for (int k = 0; k < 10; ++k) {
      SiegelPoint w = random_siegel(rng, n);
      std::complex<double> chi =
          chi_pair(ell(w.omega(), std::complex<double>(1, 0)),
                   to_complex(cls));
      std::complex<double> mir;
      try {
        mir = mirror_integral(lt, w);
      } catch (const reality_error& e) {
        ck.expect(false, std::string("reality: ") + e.what());
        continue;
      }
      double scale = std::max(std::abs(chi), 1e-30);
      ck.expect(std::abs(mir - chi) <= 1e-9 * scale,
                "mirror integral != chi pairing");
    }
  }
  return ck.result("mirror");
}

// --- criterion 7: phase theorem battery --------------------------------

SuiteResult suite_phase_theorem(const SuiteOptions& opt) {
  Check ck;
  Rng rng(opt.seed + 6);
  // (i) equivariance
  for (int c = 0; c < scaled(opt, 200); ++c) {
    Eigen::Index n = 1 + (c % 3);
    MetaElement m = lift_any(random_sp(rng, n, 3, rng.uniform(0, 1) == 0));
    PhasePoint sigma{random_siegel(rng, n),
                     {rng.real01() * 4 - 2, rng.real01() * 2 - 1}};
    LiftedLagrangian lt = random_lift(rng, n);
    ck.expect(equivariance_check(m, sigma, lt) < opt.tol,
              "phase equivariance residual too large");
  }
  // (ii) charge compatibility
  for (int c = 0; c < scaled(opt, 500); ++c) {
    Eigen::Index n = 1 + (c % 3);
    PhasePoint sigma{random_siegel(rng, n),
                     {rng.real01() * 4 - 2, rng.real01() * 2 - 1}};
    LiftedLagrangian lt = random_lift(rng, n);
    ck.expect(phase_compat(sigma, lt) < opt.tol,
              "phase/charge compatibility residual too large");
  }
  // (iii) closed-form graph phase
  for (int c = 0; c < scaled(opt, 100); ++c) {
    Eigen::Index n = 1 + (c % 3);
    RatMat phi = random_symmetric(rng, n, 2, 2);
    PhasePoint sigma{random_siegel(rng, n), {rng.real01() * 2 - 1, 0.0}};
    double by_branch = phase(sigma, lift_graph(phi));
    double by_spectrum = closed_form_graph_phase(sigma, phi);
    ck.expect(std::abs(by_branch - by_spectrum) < opt.tol,
              "graph phase: continuation != closed form");
  }
  // (iv) inequality on transversal pairs
  for (int c = 0; c < scaled(opt, 500); ++c) {
    Eigen::Index n = 1 + (c % 3);
    LiftedLagrangian lt1 = random_lift(rng, n);
    LiftedLagrangian lt2 = random_lift(rng, n);
    if (!is_transversal(lt1.lattice(), lt2.lattice())) {
      --c;
      continue;
    }
    PhasePoint sigma{random_siegel(rng, n),
                     {rng.real01() * 4 - 2, rng.real01() * 2 - 1}};
    ck.expect(inequality_check(sigma, lt1, lt2), "phase inequality violated");
  }
  return ck.result("phase-theorem");
}

// --- criterion 8: surface comparison -----------------------------------

SuiteResult suite_surface(const SuiteOptions& opt) {
  Check ck;
  Rng rng(opt.seed + 7);
  const Eigen::Index n = 2;
  for (int c = 0; c < scaled(opt, 200); ++c) {
    LiftedLagrangian lt =
        rng.uniform(0, 3) == 0
            ? lift_skyscraper(n).deck(rng.uniform(-2, 2))
            : lift_graph(random_symmetric(rng, n, 2, 2))
                  .deck(rng.uniform(-2, 2));
    SiegelPoint w = random_siegel(rng, n);
    double br = surface_bridgeland_phase(w, lt);
    double ph = phase(PhasePoint{w, 0.0}, lt);
    ck.expect(std::abs(br - (ph + 1.0)) < opt.tol,
              "surface phase != phase + 1");
  }
  // hand-derived spot values at omega = i I
  SiegelPoint base = SiegelPoint::base_point(n);
  LiftedLagrangian v = lift_graph(RatMat(-RatMat::Identity(n, n)));
  double ph = phase(PhasePoint{base, 0.0}, v);
  ck.expect(std::abs(ph + 1.5) < opt.tol, "phase(V_{-I}) != -3/2");
  ck.expect(std::abs(surface_bridgeland_phase(base, v) + 0.5) < opt.tol,
            "surface phase(V_{-I}) != -1/2");
  return ck.result("surface");
}

// --- criterion 9: elliptic standard stability --------------------------

SuiteResult suite_elliptic(const SuiteOptions& opt) {
  Check ck;
  SiegelPoint base = SiegelPoint::base_point(1);
  PhasePoint sigma{base, 0.0};
  ck.expect(std::abs(phase(sigma, lift_skyscraper(1)) + 1.0 - 1.0) < 1e-9,
            "skyscraper standard phase != 1");
  for (long r = 1; r <= 10; ++r)
    for (long d = -10; d <= 10; ++d) {
      Int g = gcd(Int(r), Int(d));
      if (g != 1) continue;
      RatMat phi(1, 1);
      phi(0, 0) = rat(d, r);
      double lhs = phase(sigma, lift_graph(phi)) + 1.0;
      double rhs = std::arg(std::complex<double>(-static_cast<double>(d),
                                                 static_cast<double>(r))) /
                   kPi;
      ck.expect(std::abs(lhs - rhs) < 1e-9, "standard stability phase");
    }
  (void)opt;
  return ck.result("elliptic");
}

// --- criterion 10: symplectic completion -------------------------------

SuiteResult suite_completion(const SuiteOptions& opt) {
  Check ck;
  Rng rng(opt.seed + 9);
  for (Eigen::Index n = 1; n <= 3; ++n) {
    for (int c = 0; c < scaled(opt, 200); ++c) {
      SpElement g = random_sp(rng, n, 4, true);
      RatMat cols =
          g.mat() * to_rat(LagrangianLattice::skyscraper(n).basis());
      LagrangianLattice l = LagrangianLattice::from_columns(cols);
      SpElement comp = symplectic_complete(l);
      ck.expect(comp.is_integral(), "completion not integral");
      RatMat moved = comp.mat() * to_rat(l.basis());
      ck.expect(LagrangianLattice::from_columns(moved) ==
                    LagrangianLattice::skyscraper(n),
                "completion does not move L to the skyscraper");
    }
  }
  for (int c = 0; c < scaled(opt, 200); ++c) {
    Eigen::Index n = 1 + (c % 3);
    RatMat p1 = random_symmetric(rng, n, 2, 2);
    RatMat p2 = random_symmetric(rng, n, 2, 2);
    if (det_exact(RatMat(p2 - p1)) == 0) {
      --c;
      continue;
    }
    LiftedLagrangian lt1 = lift_graph(p1), lt2 = lift_graph(p2);
    long i12 = index_pair(lt1, lt2);
    long i21 = index_pair(lt2, lt1);
    ck.expect(i12 + i21 == static_cast<long>(n),
              "index reversal identity violated");
    ck.expect(i12 == index_sym(RatMat(p2 - p1)),
              "graph-graph index != i(phi2 - phi1)");
  }
  return ck.result("completion");
}

}  // namespace

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all = {
      {"index-theorem", suite_index_theorem},
      {"cocycle", suite_cocycle},
      {"nq", suite_nq},
      {"pairing", suite_pairing},
      {"rho", suite_rho},
      {"mirror", suite_mirror},
      {"phase-theorem", suite_phase_theorem},
      {"surface", suite_surface},
      {"elliptic", suite_elliptic},
      {"completion", suite_completion},
  };
  return all;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& [n, fn] : suites())
    if (n == name) return fn(opt);
  throw error("unknown suite: " + name);
}

}  // namespace udelta::selftest
