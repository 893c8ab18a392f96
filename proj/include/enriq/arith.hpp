// Exact integer linear algebra: Smith normal form, linear congruence
// solving, matrix orders, and torsion vectors on lattice quotients.
//
// All decompositions are deterministic: pivot selection is by smallest
// absolute value, ties broken row-major, and diagonal entries are
// normalized to be nonnegative.

#pragma once

#include "enriq/numeric.hpp"

#include <cstdint>
#include <optional>

namespace enriq {

// An element of (1/N)L / L for a lattice L, stored as residues in [0, N).
// Length is fixed by context: 2 for one elliptic curve, 4 for a surface.
struct TorsionVector {
  Int modulus;      // N >= 1
  IntVector coords; // reduced mod N

  TorsionVector(Int n, IntVector c);

  Eigen::Index size() const { return coords.size(); }
  bool is_zero() const;
  // Smallest m >= 1 with m * (*this) = 0.
  Int order() const;

  bool operator==(const TorsionVector& other) const;
};

TorsionVector torsion_add(const TorsionVector& a, const TorsionVector& b);
TorsionVector torsion_scale(const Int& k, const TorsionVector& t);
TorsionVector torsion_apply(const IntMatrix& m, const TorsionVector& t);
// Rewrite t as an element of (1/n)L / L; requires t.modulus | n.
TorsionVector torsion_lift(const TorsionVector& t, const Int& n);

// U * M * V = D with U, V unimodular and D = diag(d_1, ..., d_k, 0, ...)
// satisfying d_i >= 0 and d_i | d_{i+1}.
struct SNFDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

SNFDecomposition smith_normal_form(const IntMatrix& m);

// Some x with M x = t in (Z/N)^dim, or nullopt when the congruence has no
// solution. Throws std::invalid_argument on dimension mismatch.
std::optional<TorsionVector> solve_linear_mod(const IntMatrix& m,
                                              const TorsionVector& t);

// Smallest k <= cap with M^k = I, or nullopt.
std::optional<std::int64_t> matrix_order(const IntMatrix& m, std::int64_t cap);

// Exact determinant by fraction-free elimination.
Int determinant(const IntMatrix& m);

}  // namespace enriq
