#include <cmath>

#include "doctest.h"

#include "udelta/selftest.hpp"
#include "udelta/siegel.hpp"

using namespace udelta;
using selftest::Rng;

TEST_CASE("sp_check accepts the generators and rejects junk") {
  CHECK_NOTHROW(SpElement::check(RatMat(RatMat::Identity(4, 4))));
  CHECK_NOTHROW(SpElement::check(to_rat(standard_j(2))));
  RatMat bad = RatMat::Identity(4, 4);
  bad(0, 1) = rat(1);
  CHECK_THROWS_AS(SpElement::check(bad), not_symplectic_error);

  Rng rng(31);
  for (int c = 0; c < 20; ++c) {
    Eigen::Index n = 1 + (c % 3);
    SpElement g = selftest::random_sp(rng, n, 4, false);
    CHECK_NOTHROW(SpElement::check(g.mat()));
    CHECK((g * g.inverse()) == SpElement::identity(n));
  }
}

TEST_CASE("sp_act fixed points and group action") {
  SiegelPoint i1 = SiegelPoint::base_point(1);
  SpElement j = SpElement::j_element(1);
  SiegelPoint moved = sp_act(j, i1);
  CHECK(moved.omega()(0, 0).real() == doctest::Approx(0.0));
  CHECK(moved.omega()(0, 0).imag() == doctest::Approx(1.0));

  Rng rng(32);
  for (int c = 0; c < 20; ++c) {
    Eigen::Index n = 1 + (c % 3);
    SpElement g1 = selftest::random_sp(rng, n, 3, false);
    SpElement g2 = selftest::random_sp(rng, n, 3, false);
    SiegelPoint w = selftest::random_siegel(rng, n);
    SiegelPoint lhs = sp_act(g1, sp_act(g2, w));
    SiegelPoint rhs = sp_act(g1 * g2, w);
    CHECK((lhs.omega() - rhs.omega()).cwiseAbs().maxCoeff() < 1e-9);
    // the action lands back in the domain: ctor asserts Im > 0
    CHECK(sp_act(g1, w).n() == n);
  }
}

TEST_CASE("sp_act keeps exact rational points exact") {
  SiegelPoint w(rat_mat({{1, 0}, {0, -1}}),
                rat_mat({{2, 1}, {1, 2}}));
  Rng rng(33);
  SpElement g = selftest::random_sp(rng, 2, 3, false);
  SiegelPoint moved = sp_act(g, w);
  REQUIRE(moved.exact().has_value());
  // exact path agrees with the double path
  CMat direct = sp_act(g, SiegelPoint(w.omega())).omega();
  CHECK((moved.omega() - direct).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("delta evaluation and cocycle identity") {
  SpElement low = SpElement::lower_unipotent(rat_mat({{3}}));
  SiegelPoint i1 = SiegelPoint::base_point(1);
  CHECK(delta_eval(low, i1.omega()).real() == doctest::Approx(1.0));

  SpElement j = SpElement::j_element(1);
  std::complex<double> dj = delta_eval(j, i1.omega());
  CHECK(dj.real() == doctest::Approx(-1.0));
  CHECK(dj.imag() == doctest::Approx(0.0));

  Rng rng(34);
  for (int c = 0; c < 25; ++c) {
    Eigen::Index n = 1 + (c % 3);
    SpElement g1 = selftest::random_sp(rng, n, 3, false);
    SpElement g2 = selftest::random_sp(rng, n, 3, false);
    SiegelPoint w = selftest::random_siegel(rng, n);
    std::complex<double> lhs = delta_eval(g1 * g2, w.omega());
    std::complex<double> rhs =
        delta_eval(g1, sp_act(g2, w).omega()) * delta_eval(g2, w.omega());
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
  }
}

TEST_CASE("delta never vanishes on sampled domain points") {
  Rng rng(35);
  for (int c = 0; c < 400; ++c) {
    Eigen::Index n = 1 + (c % 3);
    SpElement g = selftest::random_sp(rng, n, 3, false);
    SiegelPoint w = selftest::random_siegel(rng, n);
    CHECK(std::abs(delta_eval(g, w.omega())) > 1e-12);
  }
}

TEST_CASE("deg(b) > 0 on U^0") {
  Rng rng(36);
  for (int c = 0; c < 50; ++c) {
    Eigen::Index n = 1 + (c % 3);
    SpElement g = selftest::random_sp_u0(rng, n, 3, false);
    Rat db = det_exact(g.b());
    CHECK(db * db > 0);
  }
}

TEST_CASE("chi and deg evaluators") {
  CMat x = CMat::Identity(2, 2) * std::complex<double>(0, 1);
  CHECK(chi_eval(x).real() == doctest::Approx(-1.0));
  CHECK(deg_eval(x).real() == doctest::Approx(1.0));
}

TEST_CASE("exact delta matches double delta") {
  Rng rng(37);
  for (int c = 0; c < 20; ++c) {
    Eigen::Index n = 1 + (c % 2);
    SpElement g = selftest::random_sp(rng, n, 3, false);
    SiegelPoint w = selftest::random_siegel(rng, n);
    REQUIRE(w.exact().has_value());
    CRat exact = delta_eval_exact(g, *w.exact());
    std::complex<double> approx = delta_eval(g, w.omega());
    CHECK(std::abs(exact.to_complex() - approx) <= 1e-9 * std::abs(approx));
  }
}
