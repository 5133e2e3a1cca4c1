#pragma once

#include <optional>

#include "udelta/lattice.hpp"
#include "udelta/metaplectic.hpp"

namespace udelta {

// A primitive isotropic rank-n sublattice of Z^{2n}, canonical column-HNF
// basis. The top n rows form the X block, the bottom n the Y block.
class LagrangianLattice {
 public:
  // (x : y) homogeneous coordinates, columns spanning a rank-n subspace with
  // x^T y symmetric. The stored lattice is the saturation of the span.
  static LagrangianLattice make(const RatMat& x, const RatMat& y);
  static LagrangianLattice from_columns(const RatMat& columns);

  // 0 + Z^n, the skyscraper Lagrangian.
  static LagrangianLattice skyscraper(Eigen::Index n);
  // Saturated graph of a symmetric rational phi.
  static LagrangianLattice graph(const RatMat& phi);

  Eigen::Index n() const { return basis_.rows() / 2; }
  const IntMat& basis() const { return basis_; }
  IntMat x_block() const { return basis_.topRows(n()); }
  IntMat y_block() const { return basis_.bottomRows(n()); }

  // Y X^{-1} when the X block is invertible.
  std::optional<RatMat> as_graph() const;

  // det(omega X - Y)^2 on the canonical basis.
  std::complex<double> delta_at(const CMat& omega) const;
  CRat delta_at_exact(const CRatMat& omega) const;

  bool operator==(const LagrangianLattice& o) const {
    return mat_eq(basis_, o.basis_);
  }

 private:
  explicit LagrangianLattice(IntMat basis) : basis_(std::move(basis)) {}
  IntMat basis_;
};

bool is_transversal(const LagrangianLattice& l1, const LagrangianLattice& l2);

// A Lagrangian plus a real lift of Arg delta at the base point omega0 = i I:
// a point of the Z-covering of the Lagrangian Grassmannian.
class LiftedLagrangian {
 public:
  LiftedLagrangian(LagrangianLattice l, double base_arg);

  const LagrangianLattice& lattice() const { return lattice_; }
  double base_arg() const { return base_arg_; }

  // Branch of Arg delta at omega, continued from the base point.
  double branch_at(const CMat& omega) const;

  LiftedLagrangian deck(long k) const {
    return LiftedLagrangian(lattice_, base_arg_ + 2 * 3.14159265358979323846 * k);
  }

 private:
  LagrangianLattice lattice_;
  double base_arg_;
};

// (skyscraper, 0): delta is identically det(-I)^2 = 1.
LiftedLagrangian lift_skyscraper(Eigen::Index n);

// The graph section: Arg det(omega - phi)^2 anchored to -n pi at the top of
// the vertical ray, continued down to the base point.
LiftedLagrangian lift_graph(const RatMat& phi);

// Covering action of a branch element: lattice g L, branch
// f_L(g^{-1} omega) + f_g(g^{-1} omega) re-anchored at the base point.
LiftedLagrangian ud_act(const MetaElement& m, const LiftedLagrangian& lt);

// Integral symplectic g with g L = skyscraper lattice, exactly. Completion
// is deterministic: HNF lattice basis, an SNF-derived integral dual basis,
// and a triangular isotropy correction.
SpElement symplectic_complete(const LagrangianLattice& l);

// The equivariant index pairing on transversal lifts, anchored by
// (graph lift, skyscraper lift) = 0 and read off deck offsets after
// transporting both lifts to the skyscraper chart.
long index_pair(const LiftedLagrangian& lt1, const LiftedLagrangian& lt2,
                double tol = 1e-6);

// Deck offset of lt against a reference lift over the same lattice.
long deck_offset(const LiftedLagrangian& lt, const LiftedLagrangian& reference,
                 double tol = 1e-6);

}  // namespace udelta
