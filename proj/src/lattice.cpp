#include "udelta/lattice.hpp"

#include <vector>

namespace udelta {

namespace {

void col_addmul(IntMat& m, Eigen::Index dst, Eigen::Index src, const Int& f) {
  m.col(dst) += f * m.col(src);
}

}  // namespace

HnfResult hnf(const IntMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  HnfResult res{m, IntMat::Identity(cols, cols), 0};
  IntMat& h = res.h;
  IntMat& u = res.u;
  Eigen::Index piv_col = 0;
  for (Eigen::Index r = 0; r < rows && piv_col < cols; ++r) {
    // Clear row r across the active columns with extended-gcd column ops.
    for (Eigen::Index j = piv_col + 1; j < cols; ++j) {
      if (h(r, j) == 0) continue;
      if (h(r, piv_col) == 0) {
        h.col(piv_col).swap(h.col(j));
        u.col(piv_col).swap(u.col(j));
        continue;
      }
      Int g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                 h(r, piv_col).get_mpz_t(), h(r, j).get_mpz_t());
      Int a = h(r, piv_col) / g, b = h(r, j) / g;
      IntVec hc = p * h.col(piv_col) + q * h.col(j);
      IntVec hj = a * h.col(j) - b * h.col(piv_col);
      IntVec uc = p * u.col(piv_col) + q * u.col(j);
      IntVec uj = a * u.col(j) - b * u.col(piv_col);
      h.col(piv_col) = hc;
      h.col(j) = hj;
      u.col(piv_col) = uc;
      u.col(j) = uj;
    }
    if (h(r, piv_col) == 0) continue;
    if (h(r, piv_col) < 0) {
      h.col(piv_col) = -h.col(piv_col);
      u.col(piv_col) = -u.col(piv_col);
    }
    for (Eigen::Index k = 0; k < piv_col; ++k) {
      Int q = floor_div(h(r, k), h(r, piv_col));
      if (q != 0) {
        col_addmul(h, k, piv_col, -q);
        col_addmul(u, k, piv_col, -q);
      }
    }
    ++piv_col;
  }
  res.rank = static_cast<int>(piv_col);
  return res;
}

SnfResult snf(const IntMat& m) {
  SnfResult res{m, IntMat::Identity(m.rows(), m.rows()),
                IntMat::Identity(m.cols(), m.cols()), 0};
  IntMat& s = res.s;
  const Eigen::Index rows = s.rows(), cols = s.cols();
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // Move a nonzero entry to (t, t).
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows && pi < 0; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (s(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != t) {
      s.row(t).swap(s.row(pi));
      res.u.row(t).swap(res.u.row(pi));
    }
    if (pj != t) {
      s.col(t).swap(s.col(pj));
      res.v.col(t).swap(res.v.col(pj));
    }
    bool again = true;
    while (again) {
      again = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        if (s(i, t) % s(t, t) != 0) {
          Int g, p, q;
          mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                     s(t, t).get_mpz_t(), s(i, t).get_mpz_t());
          Int a = s(t, t) / g, b = s(i, t) / g;
          IntVec rt = p * s.row(t).transpose() + q * s.row(i).transpose();
          IntVec ri = a * s.row(i).transpose() - b * s.row(t).transpose();
          IntVec ut = p * res.u.row(t).transpose() + q * res.u.row(i).transpose();
          IntVec ui = a * res.u.row(i).transpose() - b * res.u.row(t).transpose();
          s.row(t) = rt.transpose();
          s.row(i) = ri.transpose();
          res.u.row(t) = ut.transpose();
          res.u.row(i) = ui.transpose();
        } else {
          Int f = s(i, t) / s(t, t);
          s.row(i) -= f * s.row(t);
          res.u.row(i) -= f * res.u.row(t);
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        if (s(t, j) % s(t, t) != 0) {
          Int g, p, q;
          mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                     s(t, t).get_mpz_t(), s(t, j).get_mpz_t());
          Int a = s(t, t) / g, b = s(t, j) / g;
          IntVec ct = p * s.col(t) + q * s.col(j);
          IntVec cj = a * s.col(j) - b * s.col(t);
          IntVec vt = p * res.v.col(t) + q * res.v.col(j);
          IntVec vj = a * res.v.col(j) - b * res.v.col(t);
          s.col(t) = ct;
          s.col(j) = cj;
          res.v.col(t) = vt;
          res.v.col(j) = vj;
          again = true;  // column op may have refilled the pivot column
        } else {
          Int f = s(t, j) / s(t, t);
          s.col(j) -= f * s.col(t);
          res.v.col(j) -= f * res.v.col(t);
        }
      }
      for (Eigen::Index i = t + 1; i < rows; ++i)
        if (s(i, t) != 0) again = true;
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      res.u.row(t) = -res.u.row(t);
    }
    ++t;
  }
  // Enforce the divisibility chain d_k | d_{k+1}.
  for (bool changed = true; changed;) {
    changed = false;
    for (Eigen::Index k = 0; k + 1 < t; ++k) {
      if (s(k + 1, k + 1) % s(k, k) == 0) continue;
      // Fold entry (k+1,k+1) into column k, then re-reduce the 2x2 block.
      s.col(k) += s.col(k + 1);
      res.v.col(k) += res.v.col(k + 1);
      Int g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                 s(k, k).get_mpz_t(), s(k + 1, k).get_mpz_t());
      Int a = s(k, k) / g, b = s(k + 1, k) / g;
      IntVec rt = p * s.row(k).transpose() + q * s.row(k + 1).transpose();
      IntVec ri = a * s.row(k + 1).transpose() - b * s.row(k).transpose();
      IntVec ut = p * res.u.row(k).transpose() + q * res.u.row(k + 1).transpose();
      IntVec ui = a * res.u.row(k + 1).transpose() - b * res.u.row(k).transpose();
      s.row(k) = rt.transpose();
      s.row(k + 1) = ri.transpose();
      res.u.row(k) = ut.transpose();
      res.u.row(k + 1) = ui.transpose();
      Int f = s(k, k + 1) / s(k, k);
      s.col(k + 1) -= f * s.col(k);
      res.v.col(k + 1) -= f * res.v.col(k);
      if (s(k + 1, k + 1) < 0) {
        s.row(k + 1) = -s.row(k + 1);
        res.u.row(k + 1) = -res.u.row(k + 1);
      }
      changed = true;
    }
  }
  res.rank = static_cast<int>(t);
  return res;
}

IntLattice::IntLattice(Eigen::Index ambient_rank, const IntMat& basis_columns) {
  if (basis_columns.rows() != ambient_rank)
    throw error("IntLattice: ambient rank mismatch");
  HnfResult r = hnf(basis_columns);
  if (r.rank != basis_columns.cols())
    throw error("IntLattice: dependent basis columns");
  basis_ = r.h.leftCols(r.rank);
}

IntLattice lattice_from_columns(const RatMat& columns) {
  Int d = denominator_lcm(columns);
  IntMat z(columns.rows(), columns.cols());
  for (Eigen::Index i = 0; i < columns.rows(); ++i)
    for (Eigen::Index j = 0; j < columns.cols(); ++j) {
      Rat v = columns(i, j) * Rat(d);
      z(i, j) = v.get_num();
    }
  HnfResult r = hnf(z);
  return IntLattice(columns.rows(), r.h.leftCols(r.rank));
}

IntLattice saturate(const IntLattice& l) {
  // U from the SNF of the basis: the saturation is spanned by the first
  // rank columns of U^{-1} (the preimages of the elementary divisors).
  SnfResult s = snf(l.basis());
  IntMat uinv = to_int(inverse_exact(to_rat(s.u)));
  return IntLattice(l.ambient_rank(), uinv.leftCols(s.rank));
}

bool is_primitive(const IntLattice& l) {
  SnfResult s = snf(l.basis());
  for (int k = 0; k < s.rank; ++k)
    if (s.s(k, k) != 1) return false;
  return true;
}

Int sublattice_index(const IntLattice& sub, const IntLattice& sup) {
  if (sub.rank() != sup.rank() || sub.ambient_rank() != sup.ambient_rank())
    throw error("sublattice_index: rank mismatch");
  // Coordinates of sub's basis in sup's basis must be integral.
  RatMat sup_b = to_rat(sup.basis());
  RatMat coords =
      solve_exact(RatMat(sup_b.transpose() * sup_b),
                  RatMat(sup_b.transpose() * to_rat(sub.basis())));
  if (!mat_eq(RatMat(sup_b * coords), to_rat(sub.basis())) ||
      !is_integral(coords))
    throw error("sublattice_index: sub not contained in sup");
  Int idx = det_bareiss(to_int(coords));
  return idx < 0 ? Int(-idx) : idx;
}

IntLattice lattice_intersection(const IntLattice& a, const IntLattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw error("lattice_intersection: ambient mismatch");
  // v = A x = B y: intersect via the kernel of [A | -B].
  IntMat stacked(a.ambient_rank(), a.rank() + b.rank());
  stacked.leftCols(a.rank()) = a.basis();
  stacked.rightCols(b.rank()) = -b.basis();
  IntLattice ker = kernel_lattice(stacked);
  IntMat xs = ker.basis().topRows(a.rank());
  IntMat vs = a.basis() * xs;
  HnfResult r = hnf(vs);
  return IntLattice(a.ambient_rank(), r.h.leftCols(r.rank));
}

IntLattice preimage_lattice(const IntMat& g, const Int& d) {
  IntMat stacked = IntMat::Zero(g.rows(), g.cols() + g.rows());
  stacked.leftCols(g.cols()) = g;
  for (Eigen::Index k = 0; k < g.rows(); ++k) stacked(k, g.cols() + k) = -d;
  IntLattice ker = kernel_lattice(stacked);
  IntMat vs = ker.basis().topRows(g.cols());
  HnfResult r = hnf(vs);
  return IntLattice(g.cols(), r.h.leftCols(r.rank));
}

IntLattice kernel_lattice(const IntMat& m) {
  HnfResult r = hnf(m);
  // Columns of U past the rank map to zero columns of H.
  IntMat ker = r.u.rightCols(m.cols() - r.rank);
  HnfResult k = hnf(ker);
  return IntLattice(m.cols(), k.h.leftCols(k.rank));
}

IntMat right_inverse(const IntMat& m) {
  SnfResult s = snf(m);
  if (s.rank != m.rows()) throw error("right_inverse: not full row rank");
  for (int k = 0; k < s.rank; ++k)
    if (s.s(k, k) != 1) throw error("right_inverse: matrix not primitive");
  // m = U^{-1} (I 0) V^{-1}  =>  m * (V (I;0) U) = I.
  IntMat sel = IntMat::Zero(m.cols(), m.rows());
  for (Eigen::Index k = 0; k < m.rows(); ++k) sel(k, k) = 1;
  return s.v * sel * s.u;
}

}  // namespace udelta
