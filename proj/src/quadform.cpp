#include "udelta/quadform.hpp"

namespace udelta {

Signature signature_sym(RatMat s) {
  const Eigen::Index n = s.rows();
  if (!is_symmetric(s)) throw error("signature_sym: not symmetric");
  Signature sig;
  std::vector<bool> done(n, false);
  for (Eigen::Index step = 0; step < n; ++step) {
    // Pick a pivot among the remaining rows.
    Eigen::Index p = -1;
    for (Eigen::Index i = 0; i < n; ++i)
      if (!done[i] && s(i, i) != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      // Zero diagonal: split a nonzero off-diagonal pair.
      Eigen::Index a = -1, b = -1;
      for (Eigen::Index i = 0; i < n && a < 0; ++i) {
        if (done[i]) continue;
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (!done[j] && s(i, j) != 0) {
            a = i;
            b = j;
            break;
          }
      }
      if (a < 0) {
        for (Eigen::Index i = 0; i < n; ++i)
          if (!done[i]) ++sig.n_zero;
        return sig;
      }
      s.row(a) += s.row(b);
      s.col(a) += s.col(b);
      p = a;
    }
    Rat piv = s(p, p);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (done[i] || i == p || s(i, p) == 0) continue;
      Rat f = s(i, p) / piv;
      s.row(i) -= f * s.row(p);
      s.col(i) -= f * s.col(p);
    }
    if (piv > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
    done[p] = true;
  }
  return sig;
}

int index_sym(const RatMat& s) {
  Signature sig = signature_sym(s);
  if (sig.n_zero != 0) throw error("index_sym: degenerate class");
  return sig.n_minus;
}

int index_sym_degenerate(const RatMat& s) { return signature_sym(s).n_minus; }

bool is_positive_definite(const RatMat& s) {
  Signature sig = signature_sym(s);
  return sig.n_minus == 0 && sig.n_zero == 0;
}

}  // namespace udelta
