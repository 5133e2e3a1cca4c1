#include "udelta/numclass.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace udelta {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Deterministic spanning family for the exponential subalgebra: all
// multiset sums of the symmetric basis matrices of size <= n, each scaled
// by t = 1..n+1, optionally shifted by s * I. Polarization plus a
// Vandermonde argument make the s = 0 slice span already.
std::vector<RatMat> sym_basis(Eigen::Index n) {
  std::vector<RatMat> out;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      RatMat b = RatMat::Zero(n, n);
      b(i, j) = rat(1);
      b(j, i) = rat(1);
      out.push_back(b);
    }
  return out;
}

void multiset_sums(const std::vector<RatMat>& basis, Eigen::Index n,
                   size_t start, int remaining, const RatMat& acc,
                   std::vector<RatMat>& out) {
  out.push_back(acc);
  if (remaining == 0) return;
  for (size_t k = start; k < basis.size(); ++k)
    multiset_sums(basis, n, k, remaining - 1, RatMat(acc + basis[k]), out);
}

std::vector<RatMat> sample_family(Eigen::Index n, long shift) {
  std::vector<RatMat> sums;
  multiset_sums(sym_basis(n), n, 0, static_cast<int>(n),
                RatMat::Zero(n, n), sums);
  std::vector<RatMat> fam;
  for (const RatMat& psi : sums)
    for (long t = 1; t <= n + 1; ++t)
      fam.push_back(RatMat(rat(t) * psi + rat(shift) * RatMat::Identity(n, n)));
  return fam;
}

RatVec flatten(const CohClass<Rat>& x) {
  RatVec v(x.size());
  for (size_t m = 0; m < x.size(); ++m) v(m) = x[static_cast<uint32_t>(m)];
  return v;
}

CohClass<Rat> unflatten(Eigen::Index n, const RatVec& v) {
  CohClass<Rat> x(n);
  for (size_t m = 0; m < x.size(); ++m) x[static_cast<uint32_t>(m)] = v(m);
  return x;
}

}  // namespace

CohClass<CRat> to_crat(const CohClass<Rat>& x) {
  CohClass<CRat> r(x.n());
  for (uint32_t m = 0; m <= x.full_mask(); ++m) r[m] = CRat(x[m]);
  return r;
}

CohClass<std::complex<double>> to_complex(const CohClass<Rat>& x) {
  CohClass<std::complex<double>> r(x.n());
  for (uint32_t m = 0; m <= x.full_mask(); ++m)
    r[m] = std::complex<double>(to_double(x[m]), 0.0);
  return r;
}

CohClass<std::complex<double>> to_complex(const CohClass<CRat>& x) {
  CohClass<std::complex<double>> r(x.n());
  for (uint32_t m = 0; m <= x.full_mask(); ++m) r[m] = x[m].to_complex();
  return r;
}

Int semihomog_rank(const RatMat& phi) {
  if (!is_symmetric(phi)) throw error("semihomog_rank: phi not symmetric");
  Int d = denominator_lcm(phi);
  IntMat g(phi.rows(), phi.cols());
  for (Eigen::Index i = 0; i < phi.rows(); ++i)
    for (Eigen::Index j = 0; j < phi.cols(); ++j) {
      Rat v = phi(i, j) * Rat(d);
      g(i, j) = v.get_num();
    }
  IntLattice pre = preimage_lattice(g, d);
  Int idx = det_bareiss(pre.basis());
  return idx < 0 ? Int(-idx) : idx;
}

CohClass<Rat> ch_semihomog(const RatMat& phi) {
  return ell(phi, Rat(semihomog_rank(phi)));
}

SubalgebraBasis::SubalgebraBasis(Eigen::Index n) : n_(n) {
  const size_t ambient = static_cast<size_t>(1) << (2 * n);
  std::vector<RatVec> basis_vecs;
  std::vector<int> pivots;
  // Exact row-echelon insertion over the sample family.
  std::vector<RatVec> echelon;
  for (const RatMat& phi : sample_family(n, 0)) {
    RatVec v = flatten(ell(phi, Rat(1)));
    RatVec red = v;
    for (size_t r = 0; r < echelon.size(); ++r) {
      Rat lead = red(pivots[r]);
      if (lead != 0) {
        Rat f = lead / echelon[r](pivots[r]);
        red -= f * echelon[r];
      }
    }
    int pivot = -1;
    for (size_t m = 0; m < ambient; ++m)
      if (red(m) != 0) {
        pivot = static_cast<int>(m);
        break;
      }
    if (pivot < 0) continue;
    echelon.push_back(red);
    pivots.push_back(pivot);
    basis_vecs.push_back(v);
  }
  cols_.resize(ambient, basis_vecs.size());
  for (size_t k = 0; k < basis_vecs.size(); ++k) cols_.col(k) = basis_vecs[k];
  pivot_rows = pivots;
  RatMat minor(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) minor(i, j) = cols_(pivot_rows[i], j);
  solver_ = inverse_exact(minor);
}

RatVec SubalgebraBasis::coords(const CohClass<Rat>& x) const {
  RatVec v = flatten(x);
  RatVec sel(dim());
  for (int i = 0; i < dim(); ++i) sel(i) = v(pivot_rows[i]);
  RatVec c = solver_ * sel;
  if (!mat_eq(RatMat(cols_ * c), RatMat(v)))
    throw rank_deficient_error("SubalgebraBasis: class outside subalgebra");
  return c;
}

CohClass<Rat> SubalgebraBasis::from_coords(const RatVec& v) const {
  return unflatten(n_, RatVec(cols_ * v));
}

const SubalgebraBasis& subalgebra_basis(Eigen::Index n) {
  static std::mutex mu;
  static std::map<Eigen::Index, const SubalgebraBasis*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, new SubalgebraBasis(n)).first;
  return *it->second;
}

CohClass<Rat> RhoMap::apply(const CohClass<Rat>& x) const {
  return basis->from_coords(RatVec(mat * basis->coords(x)));
}

CohClass<Rat> RhoMap::apply_inverse(const CohClass<Rat>& x) const {
  return basis->from_coords(RatVec(solve_exact(mat, RatMat(basis->coords(x)))));
}

RhoMap rho_hat(const SpinElement& s) {
  const Eigen::Index n = s.g.n();
  const SubalgebraBasis& basis = subalgebra_basis(n);
  const int d = basis.dim();
  RatMat lhs(d, d), rhs(d, d);
  std::vector<RatVec> echelon;
  std::vector<int> pivots;
  int have = 0;
  for (long shift = 0; shift <= 8 && have < d; ++shift) {
    for (const RatMat& phi : sample_family(n, shift)) {
      if (have >= d) break;
      RatMat denom = s.g.a() + s.g.b() * phi;
      Rat f = det_exact(denom);
      if (f == 0) continue;  // action undefined here; resample
      if (s.sign < 0) f = -f;
      RatMat image =
          (s.g.c() + s.g.d() * phi) * inverse_exact(denom);
      RatVec x = basis.coords(ell(phi, Rat(1)));
      // Greedy exact rank tracking on the lhs columns.
      RatVec red = x;
      for (size_t r = 0; r < echelon.size(); ++r) {
        Rat lead = red(pivots[r]);
        if (lead != 0) {
          Rat f = lead / echelon[r](pivots[r]);
          red -= f * echelon[r];
        }
      }
      int pivot = -1;
      for (int m = 0; m < d; ++m)
        if (red(m) != 0) {
          pivot = m;
          break;
        }
      if (pivot < 0) continue;
      echelon.push_back(red);
      pivots.push_back(pivot);
      lhs.col(have) = x;
      rhs.col(have) = basis.coords(ell(image, f));
      ++have;
    }
  }
  if (have < d)
    throw rank_deficient_error("rho_hat: sample system rank deficient");
  RatMat mat = rhs * inverse_exact(lhs);
  return RhoMap{&basis, std::move(mat)};
}

CohClass<Rat> class_of(const LiftedLagrangian& lt) {
  const Eigen::Index n = lt.lattice().n();
  SpElement g = symplectic_complete(lt.lattice());
  MetaElement m = lift_any(g);
  LiftedLagrangian moved = ud_act(m, lt);
  long k = deck_offset(moved, lift_skyscraper(n));
  RhoMap rho = rho_hat(spin_of(m));
  CohClass<Rat> cls = rho.apply_inverse(CohClass<Rat>::point(n));
  if (k % 2 != 0) cls = -cls;
  // Phase compatibility at the base point pins the sign; a failure here
  // means a convention fault, not bad input.
  std::complex<double> chi_base = chi_pair(
      ell(CMat(CMat::Identity(n, n) * std::complex<double>(0, 1)),
          std::complex<double>(1, 0)),
      to_complex(cls));
  double resid = wrap_angle(std::arg(chi_base) - lt.base_arg() / 2);
  if (std::abs(resid) > 1e-6)
    throw error("class_of: phase compatibility violated, residual " +
                std::to_string(resid));
  return cls;
}

std::complex<double> mirror_integral(const LiftedLagrangian& lt,
                                     const SiegelPoint& w, double reality_tol) {
  const Eigen::Index n = lt.lattice().n();
  IntMat swapped(2 * n, n);
  swapped.topRows(n) = lt.lattice().y_block();
  swapped.bottomRows(n) = lt.lattice().x_block();
  IntMat p = IntLattice(2 * n, swapped).basis();
  CMat top = to_double(IntMat(p.topRows(n)));
  CMat bottom = to_double(IntMat(p.bottomRows(n)));
  std::complex<double> d = (top - w.omega() * bottom).determinant();
  double theta = lt.branch_at(w.omega());
  std::complex<double> delta = lt.lattice().delta_at(w.omega());
  std::complex<double> s =
      std::sqrt(std::abs(delta)) *
      std::exp(std::complex<double>(0.0, theta / 2));
  std::complex<double> ratio = d / s;
  if (std::abs(ratio.imag()) > reality_tol * std::abs(ratio))
    throw reality_error("mirror_integral: branch ratio not real");
  return ratio.real() > 0 ? d : -d;
}

std::complex<double> charge_of_class(const PhasePoint& sigma,
                                     const CohClass<Rat>& cls) {
  CohClass<std::complex<double>> l =
      ell(sigma.omega.omega(), std::complex<double>(1, 0));
  std::complex<double> chi = chi_pair(l, to_complex(cls));
  return -std::exp(std::complex<double>(0, kPi) * sigma.z) * chi;
}

std::complex<double> charge(const PhasePoint& sigma,
                            const LiftedLagrangian& lt) {
  return charge_of_class(sigma, class_of(lt));
}

}  // namespace udelta
