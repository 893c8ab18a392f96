// Exact scalar types and dense containers used across the library.
//
// Everything is integer or rational arithmetic over GMP; no floating point
// is used anywhere. Matrices are Eigen dense types instantiated with an
// arbitrary-precision scalar, so products, sums and comparisons stay exact
// while intermediate values are free to outgrow machine words.

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
};

}  // namespace Eigen

namespace enriq {

using Int = mpz_class;
using Rat = mpq_class;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;

inline bool is_square(const IntMatrix& m) { return m.rows() == m.cols(); }

inline IntMatrix int_identity(Eigen::Index dim) {
  return IntMatrix::Identity(dim, dim);
}

// Residue of a in [0, n) for n >= 1.
inline Int mod_reduce(const Int& a, const Int& n) {
  Int r = a % n;
  if (r < 0) r += n;
  return r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd64(a, b) * b;
}

inline bool is_prime64(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// Narrowing helper for values known to be small by construction.
inline std::int64_t to_int64(const Int& v, const char* what) {
  if (!v.fits_slong_p())
    throw std::overflow_error(std::string(what) + ": value out of int64 range");
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace enriq
