#include "doctest.h"

#include "udelta/lattice.hpp"
#include "udelta/quadform.hpp"
#include "udelta/selftest.hpp"
#include "udelta/textio.hpp"

using namespace udelta;
using selftest::Rng;

namespace {

RatMat random_rat_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols,
                         long range) {
  RatMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      m(i, j) = rat(rng.uniform(-range, range), rng.uniform(1, 3));
  return m;
}

IntMat random_int_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols,
                         long range) {
  IntMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.uniform(-range, range);
  return m;
}

}  // namespace

TEST_CASE("det_exact basics") {
  CHECK(det_exact(RatMat(RatMat::Identity(3, 3))) == 1);
  CHECK(det_exact(rat_mat({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("det_exact agrees with cofactor expansion") {
  Rng rng(11);
  for (int c = 0; c < 40; ++c) {
    RatMat m = random_rat_matrix(rng, 4, 4, 5);
    CHECK(det_exact(m) == det_cofactor(m));
  }
}

TEST_CASE("det_exact multiplicative") {
  Rng rng(12);
  for (int c = 0; c < 25; ++c) {
    RatMat a = random_rat_matrix(rng, 3, 3, 4);
    RatMat b = random_rat_matrix(rng, 3, 3, 4);
    CHECK(det_exact(RatMat(a * b)) == det_exact(a) * det_exact(b));
  }
}

TEST_CASE("hnf fixed points") {
  IntMat id = IntMat::Identity(2, 2);
  HnfResult r = hnf(id);
  CHECK(mat_eq(r.h, id));
  CHECK(mat_eq(r.u, id));
  IntMat d = int_mat({{2, 0}, {0, 3}});
  CHECK(mat_eq(hnf(d).h, d));
}

TEST_CASE("hnf reproduces M U = H with unimodular U") {
  Rng rng(13);
  for (int c = 0; c < 30; ++c) {
    IntMat m = random_int_matrix(rng, 4, 2, 6);
    HnfResult r = hnf(m);
    CHECK(mat_eq(IntMat(m * r.u), r.h));
    Int du = det_bareiss(r.u);
    CHECK((du == 1 || du == -1));
  }
}

TEST_CASE("hnf canonical under basis change") {
  Rng rng(14);
  for (int c = 0; c < 30; ++c) {
    IntMat m = random_int_matrix(rng, 4, 3, 5);
    if (hnf(m).rank != 3) continue;
    IntMat u = selftest::random_unimodular(rng, 3);
    HnfResult r1 = hnf(m);
    HnfResult r2 = hnf(IntMat(m * u));
    CHECK(mat_eq(r1.h, r2.h));
    CHECK(mat_eq(hnf(r1.h).h, r1.h));  // idempotent
  }
}

TEST_CASE("snf divisibility chain and factorization") {
  Rng rng(15);
  for (int c = 0; c < 30; ++c) {
    IntMat m = random_int_matrix(rng, 3, 4, 6);
    SnfResult s = snf(m);
    CHECK(mat_eq(IntMat(s.u * m * s.v), s.s));
    for (int k = 0; k + 1 < s.rank; ++k) {
      CHECK(s.s(k, k) > 0);
      CHECK(s.s(k + 1, k + 1) % s.s(k, k) == 0);
    }
    Int du = det_bareiss(s.u), dv = det_bareiss(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
  }
}

TEST_CASE("saturate") {
  IntLattice two(2, int_mat({{2}, {0}}));
  CHECK(mat_eq(saturate(two).basis(), int_mat({{1}, {0}})));
  IntLattice l24(2, int_mat({{2}, {4}}));
  CHECK(mat_eq(saturate(l24).basis(), int_mat({{1}, {2}})));
  IntLattice l35(2, int_mat({{3}, {5}}));
  CHECK(saturate(l35) == l35);  // coprime stays put
}

TEST_CASE("sublattice_index") {
  IntLattice z2(2, IntMat::Identity(2, 2));
  IntLattice two_z2(2, IntMat(2 * IntMat::Identity(2, 2)));
  CHECK(sublattice_index(two_z2, z2) == 4);
  CHECK_THROWS_AS(sublattice_index(z2, two_z2), error);
}

TEST_CASE("sublattice_index matches smith normal form oracle") {
  Rng rng(16);
  for (int c = 0; c < 25; ++c) {
    IntMat sup_basis = selftest::random_unimodular(rng, 3);
    IntMat coord = random_int_matrix(rng, 3, 3, 3);
    if (det_bareiss(coord) == 0) continue;
    IntLattice sup(3, sup_basis);
    IntLattice sub(3, IntMat(sup_basis * coord));
    SnfResult s = snf(coord);
    Int expected(1);
    for (int k = 0; k < 3; ++k) expected *= s.s(k, k);
    CHECK(sublattice_index(sub, sup) == expected);
  }
}

TEST_CASE("sublattice_index multiplicative on chains") {
  Rng rng(17);
  for (int c = 0; c < 20; ++c) {
    IntMat m1 = random_int_matrix(rng, 3, 3, 3);
    IntMat m2 = random_int_matrix(rng, 3, 3, 3);
    if (det_bareiss(m1) == 0 || det_bareiss(m2) == 0) continue;
    IntLattice a(3, IntMat::Identity(3, 3));
    IntLattice b(3, m1);
    IntLattice cc(3, IntMat(m1 * m2));
    CHECK(sublattice_index(cc, a) ==
          sublattice_index(cc, b) * sublattice_index(b, a));
  }
}

TEST_CASE("signature basics") {
  CHECK(signature_sym(RatMat(RatMat::Identity(3, 3))).n_plus == 3);
  Signature s = signature_sym(rat_mat({{1, 0}, {0, -1}}));
  CHECK(s.n_plus == 1);
  CHECK(s.n_minus == 1);
  CHECK(s.n_zero == 0);
  // zero diagonal takes the off-diagonal split path
  Signature h = signature_sym(rat_mat({{0, 1}, {1, 0}}));
  CHECK(h.n_plus == 1);
  CHECK(h.n_minus == 1);
}

TEST_CASE("signature congruence-invariant") {
  Rng rng(18);
  for (int c = 0; c < 25; ++c) {
    RatMat s = selftest::random_symmetric(rng, 3, 4, 2);
    RatMat p = to_rat(selftest::random_unimodular(rng, 3));
    Signature a = signature_sym(s);
    Signature b = signature_sym(RatMat(p.transpose() * s * p));
    CHECK(a.n_plus == b.n_plus);
    CHECK(a.n_minus == b.n_minus);
    CHECK(a.n_zero == b.n_zero);
  }
}

TEST_CASE("matrix text round trip") {
  RatMat m = parse_rat_matrix("1,0;0,1");
  CHECK(mat_eq(m, RatMat(RatMat::Identity(2, 2))));
  RatMat q = parse_rat_matrix("-1/2, 3; 0, 5/7");
  CHECK(q(0, 0) == rat(-1, 2));
  CHECK(q(1, 1) == rat(5, 7));
  CHECK(parse_rat_matrix(matrix_string(q))(0, 0) == q(0, 0));
  CHECK_THROWS_AS(parse_rat_matrix("1,2;3"), parse_error);
}
