#include <cmath>

#include "doctest.h"

#include "udelta/argcont.hpp"
#include "udelta/poly.hpp"
#include "udelta/selftest.hpp"

using namespace udelta;
using selftest::Rng;

namespace {
constexpr double kPi = 3.14159265358979323846;

RatPoly linear(long root) {
  return RatPoly({rat(-root), rat(1)});  // t - root
}
}  // namespace

TEST_CASE("squarefree decomposition") {
  RatPoly p = linear(1) * linear(1) * linear(-2);  // (t-1)^2 (t+2)
  auto dec = squarefree_decomp(p);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 1);
  CHECK(dec[0].first == linear(-2).monic());
  CHECK(dec[1].second == 2);
  CHECK(dec[1].first == linear(1).monic());

  RatPoly q({rat(1), rat(0), rat(1)});  // t^2 + 1
  auto dq = squarefree_decomp(q);
  REQUIRE(dq.size() == 1);
  CHECK(dq[0].second == 1);
  CHECK(dq[0].first == q.monic());
}

TEST_CASE("squarefree recovers constructed multiplicities") {
  Rng rng(21);
  for (int c = 0; c < 20; ++c) {
    long r1 = rng.uniform(-4, 4);
    long r2 = r1 + rng.uniform(1, 3);  // distinct roots
    int m1 = rng.uniform(1, 3), m2 = rng.uniform(1, 3);
    RatPoly p = RatPoly::constant(rat(rng.uniform(1, 3)));
    for (int k = 0; k < m1; ++k) p = p * linear(r1);
    for (int k = 0; k < m2; ++k) p = p * linear(r2);
    auto dec = squarefree_decomp(p);
    int found = 0;
    for (const auto& [f, m] : dec) {
      for (long r : {r1, r2})
        if (f.eval(rat(r)) == 0) {
          CHECK(m == (r == r1 ? m1 : m2));
          ++found;
        }
    }
    CHECK(found == (m1 == m2 ? 2 : 2));
  }
}

TEST_CASE("positive root counting") {
  CHECK(count_positive_roots_mult(linear(1) * linear(1) * linear(-2)) == 2);
  CHECK(count_positive_roots_mult(RatPoly({rat(1), rat(0), rat(1)})) == 0);
  // root exactly at zero is not in (0, inf)
  CHECK(count_positive_roots_mult(RatPoly({rat(0), rat(1)})) == 0);
  CHECK(count_positive_roots_mult(linear(2) * RatPoly({rat(0), rat(1)})) == 1);
}

TEST_CASE("positive roots of det(phi + t I) equal the negative inertia") {
  Rng rng(22);
  for (int c = 0; c < 30; ++c) {
    Eigen::Index n = 1 + (c % 3);
    RatMat phi = selftest::random_symmetric_nondeg(rng, n, 4, 2);
    RatPoly p = det_poly(phi, RatMat(RatMat::Identity(n, n)));
    CHECK(count_positive_roots_mult(p) == signature_sym(phi).n_minus);
  }
}

TEST_CASE("line_index spot values") {
  RatMat h1 = RatMat::Identity(1, 1);
  RatMat x(1, 1);
  x(0, 0) = rat(1);
  CHECK(line_index(x, h1) == 0);
  x(0, 0) = rat(-1);
  CHECK(line_index(x, h1) == 1);
  CHECK(line_index(rat_mat({{1, 0}, {0, -1}}),
                   RatMat(RatMat::Identity(2, 2))) == 1);
  // independent of the ample class used
  Rng rng(23);
  for (int c = 0; c < 20; ++c) {
    Eigen::Index n = 1 + (c % 3);
    RatMat xx = selftest::random_symmetric_nondeg(rng, n, 3, 2);
    RatMat h = selftest::random_spd(rng, n);
    CHECK(line_index(xx, h) ==
          line_index(xx, RatMat(RatMat::Identity(n, n))));
  }
}

TEST_CASE("arg_continue basics") {
  PathSegment constant{[](double) { return std::complex<double>(2.0, 1.0); }};
  double theta0 = std::atan2(1.0, 2.0);
  CHECK(arg_continue(constant, {theta0}).theta == doctest::Approx(theta0));

  PathSegment loop{[](double t) {
    return std::exp(std::complex<double>(0.0, 2 * kPi * t));
  }};
  CHECK(arg_continue(loop, {0.0}).theta == doctest::Approx(2 * kPi));

  PathSegment seg{[](double t) {
    return std::complex<double>(t, 1.0);  // i -> 1 + i
  }};
  CHECK(arg_continue(seg, {kPi / 2}).theta == doctest::Approx(kPi / 4));
}

TEST_CASE("arg_continue against dense sampling oracle") {
  Rng rng(24);
  for (int c = 0; c < 10; ++c) {
    double w1 = rng.uniform(-3, 3), w2 = rng.uniform(1, 4);
    PathSegment seg{[w1, w2](double t) {
      std::complex<double> a(std::cos(w1 * t) + 1.5, std::sin(w2 * t));
      return a * a;
    }};
    double start = std::arg(seg.eval(0.0));
    double fast = arg_continue(seg, {start}).theta;
    double slow = naive_continue(seg, start, 10000);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-9));
  }
}

TEST_CASE("arg_continue additive and reversible") {
  PathSegment seg{[](double t) {
    return std::complex<double>(1.0 - t, 1.0 + t * t);
  }};
  double start = std::arg(seg.eval(0.0));
  double forward = arg_continue(seg, {start}).theta;
  PathSegment back{[&seg](double t) { return seg.eval(1.0 - t); }};
  double round = arg_continue(back, {forward}).theta;
  CHECK(round == doctest::Approx(start).epsilon(1e-12));
}

TEST_CASE("arg_continue guards") {
  PathSegment vanishing{[](double t) {
    return std::complex<double>(t - 0.5, 0.0);
  }};
  CHECK_THROWS_AS(arg_continue(vanishing, {kPi}), non_vanishing_error);
  PathSegment bad_start{[](double) { return std::complex<double>(1.0, 0.0); }};
  CHECK_THROWS_AS(arg_continue(bad_start, {1.0}), error);
}

TEST_CASE("window inequality for lines through i H") {
  // Any branch of Arg chi(iH + t x) moves less than i(x) pi/2 up and
  // (n - i(x)) pi/2 down as t grows.
  Rng rng(25);
  for (int c = 0; c < 15; ++c) {
    Eigen::Index n = 1 + (c % 3);
    RatMat x = selftest::random_symmetric_nondeg(rng, n, 3, 2);
    RatMat h = selftest::random_spd(rng, n);
    int ix = line_index(x, h);
    DMat xd = to_double(x), hd = to_double(h);
    auto chi_at = [&](double t) {
      CMat m = t * xd;
      m += std::complex<double>(0, 1) * hd;
      return m.determinant();
    };
    double t1 = 3.0 * rng.real01(), t2 = 3.0 * rng.real01();
    if (t1 > t2) std::swap(t1, t2);
    if (t2 - t1 < 1e-3) continue;
    PathSegment seg{[&](double s) { return chi_at(t1 + s * (t2 - t1)); }};
    double start = std::arg(seg.eval(0.0));
    double end = arg_continue(seg, {start}).theta;
    CHECK(end < start + ix * kPi / 2 + 1e-9);
    CHECK(end > start - (n - ix) * kPi / 2 - 1e-9);
  }
}
