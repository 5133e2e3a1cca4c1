#pragma once

// Eigen scalar adaptors for the GMP types. Include this before building any
// Eigen expression over Rat or Int.

#include <gmpxx.h>

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = long;
  using Nested = mpq_class;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Literal = long;
  using Nested = mpz_class;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 80
  };
};

namespace internal {

// gmpxx arithmetic yields expression templates; pin the pivot-scoring
// functors down to concrete values so Eigen's LU machinery can rank them.
template <>
struct scalar_score_coeff_op<mpq_class> {
  struct result_type : mpq_class {
    result_type(const mpq_class& v) : mpq_class(v) {}
  };
  result_type operator()(const mpq_class& a) const {
    return result_type(mpq_class(abs(a)));
  }
};

template <>
struct scalar_score_coeff_op<mpz_class> {
  struct result_type : mpz_class {
    result_type(const mpz_class& v) : mpz_class(v) {}
  };
  result_type operator()(const mpz_class& a) const {
    return result_type(mpz_class(abs(a)));
  }
};

}  // namespace internal
}  // namespace Eigen
