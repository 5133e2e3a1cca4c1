#pragma once

#include "udelta/poly.hpp"
#include "udelta/siegel.hpp"

namespace udelta {

// A group element together with a branch of Arg det(a + b omega)^2 pinned at
// the base point omega0 = i I. Reconstructing the branch anywhere else is a
// straight-segment continuation; the domain is convex, so one value
// determines the branch.
class MetaElement {
 public:
  MetaElement(SpElement g, double base_arg);

  const SpElement& g() const { return g_; }
  double base_arg() const { return base_arg_; }

  // Branch value of Arg det(a + b omega)^2 at omega, continued from the base
  // point.
  double branch_at(const CMat& omega) const;

  // Holomorphic branch function f with det(a+b.)^2 = exp(-2 pi i f),
  // evaluated at omega.
  std::complex<double> f_at(const CMat& omega) const;

 private:
  SpElement g_;
  double base_arg_;
};

// A point of the split double cover: the square root sign * det(a + b omega)
// of det(a + b omega)^2.
struct SpinElement {
  SpElement g;
  int sign;  // +1 or -1

  std::complex<double> f_at(const CMat& omega) const;
  Rat f_at(const RatMat& phi) const;  // rational phi, rational value
};

inline SpinElement spin_mul(const SpinElement& s1, const SpinElement& s2) {
  return {s1.g * s2.g, s1.sign * s2.sign};
}

// Homomorphic branch lifts. For det(b) != 0 the branch is anchored to
// n*pi at omega = i t I, t -> infinity; for lower-triangular elements the
// branch is the real-positive one (0); for upper-triangular elements the
// branch tends to 0 as omega -> 0. Anything else throws
// unsupported_element_error; use lift_any for a factored lift.
MetaElement canonical_lift(const SpElement& g);

// The set-theoretic section over U^0 and both parabolics used by the
// cocycle computations. It agrees with canonical_lift except on
// upper-triangular elements outside U^0 union P^-, where the homomorphic
// branch is off the section by the index of a^{-1} b.
MetaElement section_lift(const SpElement& g);

// Some branch lift of an arbitrary rational symplectic element, obtained by
// factoring through U^0 when needed. Well defined as a point of the
// extension only up to the central Z, which is all the transport users need.
MetaElement lift_any(const SpElement& g);

// (g1,f1)(g2,f2) = (g1 g2, f1(g2 .) + f2).
MetaElement meta_mul(const MetaElement& m1, const MetaElement& m2);
MetaElement meta_inv(const MetaElement& m);
MetaElement central_shift(const MetaElement& m, long k);  // base_arg + 2 pi k

// lambda(g1, g2) = -i(b1^{-1} b(g1 g2) b2^{-1}) on U^0 triples, exact.
long lambda_exact(const SpElement& g1, const SpElement& g2);

// The same cocycle read off the branch arithmetic:
// (base_arg(section(g1 g2)) - base_arg(section(g1) section(g2))) / 2 pi,
// asserted integral.
long lambda_general(const SpElement& g1, const SpElement& g2,
                    double tol = 1e-6);

// q(g) = [Z^{2n} : Z^{2n} cap g^{-1} Z^{2n}]^2.
Int q_of(const SpElement& g);

// sqrt(q(g1)) sqrt(q(g2)) / sqrt(q(g1 g2)); exact positive integer.
Int n_of(const SpElement& g1, const SpElement& g2);

// Push a branch element down the double cover: the sign with
// arg(sign * det(a + b omega0)) = base_arg / 2 (mod 2 pi).
SpinElement spin_of(const MetaElement& m, double tol = 1e-6);

}  // namespace udelta
