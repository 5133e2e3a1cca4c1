#include "udelta/poly.hpp"

namespace udelta {

Rat RatPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::complex<double> RatPoly::eval(const std::complex<double>& t) const {
  std::complex<double> acc(0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t + to_double(*it);
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() < 2) return RatPoly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * rat(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> d = c_;
  Rat l = c_.back();
  for (auto& v : d) v /= l;
  return RatPoly(std::move(d));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> d(std::max(c_.size(), o.c_.size()), rat(0));
  for (size_t i = 0; i < c_.size(); ++i) d[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) d[i] += o.c_[i];
  return RatPoly(std::move(d));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
  std::vector<Rat> d = c_;
  for (auto& v : d) v = -v;
  return RatPoly(std::move(d));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> d(c_.size() + o.c_.size() - 1, rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(d));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw error("divmod: zero divisor");
  std::vector<Rat> r = num.coeffs();
  int dn = den.degree();
  if (num.degree() < dn) return {RatPoly(), num};
  std::vector<Rat> q(num.degree() - dn + 1, rat(0));
  Rat lead = den.leading();
  for (int k = num.degree() - dn; k >= 0; --k) {
    Rat f = r[k + dn] / lead;
    q[k] = f;
    for (int i = 0; i <= dn; ++i) r[k + i] -= f * den[i];
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<RatPoly, int>> squarefree_decomp(const RatPoly& p) {
  if (p.is_zero()) throw error("squarefree_decomp: zero polynomial");
  std::vector<std::pair<RatPoly, int>> out;
  if (p.degree() == 0) return out;
  RatPoly a = p.monic();
  RatPoly g = poly_gcd(a, a.derivative());
  RatPoly w = divmod(a, g).first;   // product of distinct factors
  RatPoly y = divmod(a.derivative(), g).first;
  RatPoly z = y - w.derivative();
  int mult = 1;
  while (!(w.degree() == 0)) {
    RatPoly f = poly_gcd(w, z);
    if (f.degree() > 0) out.emplace_back(f, mult);
    w = divmod(w, f).first;
    z = divmod(z, f).first - w.derivative();
    ++mult;
  }
  return out;
}

namespace {

int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int sign_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int sturm_positive_roots(const RatPoly& squarefree) {
  if (squarefree.degree() <= 0) return 0;
  std::vector<RatPoly> chain{squarefree, squarefree.derivative()};
  while (chain.back().degree() > 0) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  std::vector<int> at_zero, at_inf;
  for (const RatPoly& q : chain) {
    at_zero.push_back(sign_of(q.eval(rat(0))));
    at_inf.push_back(sign_of(q.leading()));
  }
  return sign_variations(at_zero) - sign_variations(at_inf);
}

int count_positive_roots_mult(const RatPoly& p) {
  if (p.is_zero()) throw error("count_positive_roots_mult: zero polynomial");
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomp(p)) {
    // Sturm needs a nonzero value at the left endpoint; t = 0 roots are not
    // in the open interval, so strip them.
    RatPoly f = factor;
    while (f.degree() > 0 && f.eval(rat(0)) == 0)
      f = divmod(f, RatPoly::x()).first;
    total += mult * sturm_positive_roots(f);
  }
  return total;
}

RatPoly det_poly(const RatMat& a, const RatMat& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n)
    throw error("det_poly: shape");
  // Degree <= n; Lagrange interpolation through t = 0..n.
  std::vector<Rat> ts, vals;
  for (Eigen::Index k = 0; k <= n; ++k) {
    Rat t = rat(k);
    ts.push_back(t);
    vals.push_back(det_exact(RatMat(a + t * b)));
  }
  RatPoly acc;
  for (size_t i = 0; i < ts.size(); ++i) {
    RatPoly term = RatPoly::constant(vals[i]);
    for (size_t j = 0; j < ts.size(); ++j) {
      if (i == j) continue;
      term = term * RatPoly({-ts[j], rat(1)});
      term = divmod(term, RatPoly::constant(ts[i] - ts[j])).first;
    }
    acc = acc + term;
  }
  return acc;
}

int line_index(const RatMat& x, const RatMat& h) {
  if (!is_symmetric(x) || !is_symmetric(h)) throw error("line_index: not symmetric");
  if (det_exact(x) == 0) throw error("line_index: degenerate class");
  if (!is_positive_definite(h)) throw error("line_index: H not ample");
  return count_positive_roots_mult(det_poly(x, h));
}

}  // namespace udelta
