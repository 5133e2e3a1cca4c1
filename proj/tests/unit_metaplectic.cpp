#include <cmath>

#include "doctest.h"

#include "udelta/metaplectic.hpp"
#include "udelta/selftest.hpp"

using namespace udelta;
using selftest::Rng;

namespace {
constexpr double kPi = 3.14159265358979323846;

SpElement sp1(long a, long b, long c, long d) {
  RatMat m(2, 2);
  m << rat(a), rat(b), rat(c), rat(d);
  return SpElement::check(m);
}
}  // namespace

TEST_CASE("canonical lifts at n = 1") {
  // J: branch anchored pi at i infinity stays pi along the ray
  CHECK(canonical_lift(SpElement::j_element(1)).base_arg() ==
        doctest::Approx(kPi));
  // upper unipotent with phi = 1: delta = (1 + omega)^2, value pi/2 at i
  CHECK(canonical_lift(sp1(1, 1, 0, 1)).base_arg() ==
        doctest::Approx(kPi / 2));
  // phi = -1 sits in U^0; the infinity anchor gives 3 pi / 2
  CHECK(canonical_lift(sp1(1, -1, 0, 1)).base_arg() ==
        doctest::Approx(3 * kPi / 2));
  // lower triangular: real positive branch
  CHECK(canonical_lift(sp1(1, 0, 5, 1)).base_arg() == doctest::Approx(0.0));
  CHECK(canonical_lift(sp1(-1, 0, 0, -1)).base_arg() == doctest::Approx(0.0));
}

TEST_CASE("section lift shifts the degenerate upper branch by the index") {
  RatMat psi = rat_mat({{-1, 0}, {0, 0}});  // degenerate, one negative square
  SpElement g = SpElement::upper_unipotent(psi);
  double hom = canonical_lift(g).base_arg();
  double sec = section_lift(g).base_arg();
  CHECK(sec - hom == doctest::Approx(2 * kPi));
}

TEST_CASE("meta_mul squares J to the shifted central element") {
  MetaElement j = canonical_lift(SpElement::j_element(1));
  MetaElement j2 = meta_mul(j, j);
  CHECK(j2.g() == sp1(-1, 0, 0, -1));
  CHECK(j2.base_arg() == doctest::Approx(2 * kPi));
}

TEST_CASE("meta_mul unit and inverse") {
  Rng rng(41);
  for (int c = 0; c < 15; ++c) {
    Eigen::Index n = 1 + (c % 3);
    MetaElement m = lift_any(selftest::random_sp(rng, n, 3, false));
    MetaElement e = canonical_lift(SpElement::identity(n));
    CHECK(meta_mul(e, m).base_arg() == doctest::Approx(m.base_arg()));
    CHECK(meta_mul(m, e).base_arg() == doctest::Approx(m.base_arg()));
    MetaElement round = meta_mul(m, meta_inv(m));
    CHECK(round.g() == SpElement::identity(n));
    CHECK(round.base_arg() == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("meta_mul associativity and central shifts commute") {
  Rng rng(42);
  for (int c = 0; c < 10; ++c) {
    Eigen::Index n = 1 + (c % 2);
    MetaElement m1 = lift_any(selftest::random_sp(rng, n, 3, false));
    MetaElement m2 = lift_any(selftest::random_sp(rng, n, 3, false));
    MetaElement m3 = lift_any(selftest::random_sp(rng, n, 3, false));
    double lhs = meta_mul(meta_mul(m1, m2), m3).base_arg();
    double rhs = meta_mul(m1, meta_mul(m2, m3)).base_arg();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    MetaElement shifted = central_shift(m2, 3);
    CHECK(meta_mul(m1, shifted).base_arg() ==
          doctest::Approx(meta_mul(m1, m2).base_arg() + 6 * kPi));
  }
}

TEST_CASE("lambda spot values") {
  // lambda(g+_1, g+_1) = 0
  CHECK(lambda_exact(sp1(1, 1, 0, 1), sp1(1, 1, 0, 1)) == 0);
  CHECK(lambda_general(sp1(1, 1, 0, 1), sp1(1, 1, 0, 1)) == 0);
  // phi1 = 1, phi2 = -2: both routes zero
  CHECK(lambda_exact(sp1(1, 1, 0, 1), sp1(1, -2, 0, 1)) == 0);
  // phi1 = phi2 = -1: i(-2) - i(-1) - i(-1) = -1
  CHECK(lambda_exact(sp1(1, -1, 0, 1), sp1(1, -1, 0, 1)) == -1);
  CHECK(lambda_general(sp1(1, -1, 0, 1), sp1(1, -1, 0, 1)) == -1);
}

TEST_CASE("lambda of inverse pairs") {
  Rng rng(43);
  for (int c = 0; c < 20; ++c) {
    Eigen::Index n = 1 + (c % 2);
    SpElement g = selftest::random_sp_u0(rng, n, 3, false);
    if (!g.inverse().in_u0()) {
      --c;
      continue;
    }
    long lg = lambda_general(g, g.inverse());
    CHECK(lg == lambda_exact(g, g.inverse()));
  }
}

TEST_CASE("q spot values") {
  CHECK(q_of(SpElement::identity(2)) == 1);
  CHECK(q_of(sp1(1, 0, 0, 1)) == 1);
  RatMat t(2, 2);
  t << rat(1, 2), rat(0), rat(0), rat(2);
  CHECK(q_of(SpElement::check(t)) == 4);
  RatMat h(2, 2);
  h << rat(1), rat(1, 2), rat(0), rat(1);
  CHECK(q_of(SpElement::check(h)) == 4);
}

TEST_CASE("N spot value for a torus pair") {
  RatMat t(2, 2);
  t << rat(1, 2), rat(0), rat(0), rat(2);
  SpElement g = SpElement::check(t);
  CHECK(n_of(g, g.inverse()) == 4);
  CHECK(n_of(SpElement::identity(1), SpElement::j_element(1)) == 1);
}

TEST_CASE("spin_of examples") {
  MetaElement central = central_shift(canonical_lift(SpElement::identity(1)), 1);
  CHECK(spin_of(central).sign == -1);
  CHECK(spin_of(canonical_lift(SpElement::j_element(1))).sign == +1);
  SpElement low = sp1(-1, 0, 3, -1);
  CHECK(spin_of(canonical_lift(low)).sign == -1);  // sign(det a)
  SpElement low2 = sp1(1, 0, 3, 1);
  CHECK(spin_of(canonical_lift(low2)).sign == +1);
}

TEST_CASE("spin_of is a homomorphism onto the split cover") {
  Rng rng(44);
  for (int c = 0; c < 15; ++c) {
    Eigen::Index n = 1 + (c % 2);
    MetaElement m1 = lift_any(selftest::random_sp(rng, n, 3, false));
    MetaElement m2 = lift_any(selftest::random_sp(rng, n, 3, false));
    SpinElement lhs = spin_of(meta_mul(m1, m2));
    SpinElement rhs = spin_mul(spin_of(m1), spin_of(m2));
    CHECK(lhs.sign == rhs.sign);
    // the two sign candidates differ at rational probes
    RatMat probe = selftest::random_symmetric(rng, n, 2, 2);
    if (det_exact(RatMat(lhs.g.a() + lhs.g.b() * probe)) != 0)
      CHECK(lhs.f_at(probe) == rhs.f_at(probe));
  }
}
