#pragma once

#include "udelta/matrix.hpp"

namespace udelta {

struct Signature {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
};

// Inertia of a symmetric rational matrix by exact congruence
// diagonalization. Pivot rule: first nonzero diagonal entry; if the diagonal
// is zero but an off-diagonal S(i,j) is not, fold row/column j into i first.
Signature signature_sym(RatMat s);

// Index of a nondegenerate symmetric rational class: the number of negative
// squares. Throws on a degenerate input.
int index_sym(const RatMat& s);

// Index extended to possibly degenerate classes (zero eigenvalues ignored).
int index_sym_degenerate(const RatMat& s);

bool is_positive_definite(const RatMat& s);

}  // namespace udelta
