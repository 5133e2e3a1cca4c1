#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace udelta {

// Exact scalars. Rat is always stored canonicalized (gcd 1, positive
// denominator); every helper below preserves that.
using Int = mpz_class;
using Rat = mpq_class;

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct not_symplectic_error : error { using error::error; };
struct near_singular_error : error { using error::error; };
struct non_vanishing_error : error { using error::error; };
struct precision_error : error { using error::error; };
struct integrality_error : error { using error::error; };
struct not_transversal_error : error { using error::error; };
struct not_isotropic_error : error { using error::error; };
struct unsupported_element_error : error { using error::error; };
struct reality_error : error { using error::error; };
struct rank_deficient_error : error { using error::error; };
struct parse_error : error { using error::error; };

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }
inline double to_double(const Int& z) { return z.get_d(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Nearest integer to p/q, ties toward +infinity.
inline Int round_rat(const Rat& r) {
  Int two_num = 2 * r.get_num() + r.get_den();
  return floor_div(two_num, Int(2 * r.get_den()));
}

// "p" or "p/q" in base 10.
Rat parse_rat(const std::string& text);
std::string rat_string(const Rat& r);

// Complex numbers with exact rational real and imaginary parts. Only the
// field operations needed by exact Siegel transport and pairing live here.
struct CRat {
  Rat re, im;

  CRat() : re(0), im(0) {}
  CRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by design
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  CRat operator-() const { return {-re, -im}; }
  CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
  CRat operator-(const CRat& o) const { return {re - o.re, im - o.im}; }
  CRat operator*(const CRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CRat operator/(const CRat& o) const {
    Rat n = o.re * o.re + o.im * o.im;
    if (n == 0) throw error("CRat: division by zero");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  CRat& operator+=(const CRat& o) { *this = *this + o; return *this; }
  CRat& operator-=(const CRat& o) { *this = *this - o; return *this; }
  CRat& operator*=(const CRat& o) { *this = *this * o; return *this; }
  bool operator==(const CRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const CRat& o) const { return !(*this == o); }

  std::complex<double> to_complex() const {
    return {to_double(re), to_double(im)};
  }
};

inline CRat conj(const CRat& z) { return {z.re, -z.im}; }

}  // namespace udelta
