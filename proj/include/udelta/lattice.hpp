#pragma once

#include <utility>

#include "udelta/matrix.hpp"

namespace udelta {

// Column Hermite normal form: H = M * U with U unimodular. Pivot columns
// come first with strictly increasing pivot rows; each pivot entry is
// positive; entries of earlier columns in a pivot row are reduced into
// [0, pivot). Zero columns trail. The form is canonical for the column span.
struct HnfResult {
  IntMat h;
  IntMat u;
  int rank = 0;
};
HnfResult hnf(const IntMat& m);

// Smith normal form: S = U * M * V, diag(d1 | d2 | ...), U and V unimodular.
struct SnfResult {
  IntMat s, u, v;
  int rank = 0;
};
SnfResult snf(const IntMat& m);

// A sublattice of Z^ambient_rank with a canonical (column-HNF) basis of
// linearly independent columns.
class IntLattice {
 public:
  IntLattice(Eigen::Index ambient_rank, const IntMat& basis_columns);

  Eigen::Index ambient_rank() const { return basis_.rows(); }
  Eigen::Index rank() const { return basis_.cols(); }
  const IntMat& basis() const { return basis_; }

  bool operator==(const IntLattice& o) const { return mat_eq(basis_, o.basis_); }

 private:
  IntMat basis_;
};

// Lattice spanned by the columns of a rational matrix (denominators cleared,
// then canonicalized). Dependent columns are discarded.
IntLattice lattice_from_columns(const RatMat& columns);

// Intersection of the Q-span with Z^ambient.
IntLattice saturate(const IntLattice& l);

bool is_primitive(const IntLattice& l);

// [sup : sub]; throws if ranks differ or sub is not contained in sup.
Int sublattice_index(const IntLattice& sub, const IntLattice& sup);

// Intersection of two lattices of the same ambient rank.
IntLattice lattice_intersection(const IntLattice& a, const IntLattice& b);

// {v in Z^m : G v is in d * Z^k} for integer G (k x m), d > 0. Full rank m.
IntLattice preimage_lattice(const IntMat& g, const Int& d);

// Integer kernel of an integer matrix, as a primitive lattice.
IntLattice kernel_lattice(const IntMat& m);

// An integral right inverse of a primitive (SNF all ones) k x m matrix.
IntMat right_inverse(const IntMat& m);

}  // namespace udelta
