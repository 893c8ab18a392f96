// Canonical-index calculus for cyclic quotients of symplectic varieties:
// K-triviality, torsion index of the canonical divisor, Euler-characteristic
// constraints for etale covers, and class-group torsion bookkeeping.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace enriq {

enum class CoverKind { Etale, QuasiEtale };

// A cyclic quotient of a symplectic variety of dimension 2n by a group of
// order d whose generator multiplies the symplectic form by zeta_d^k.
struct QuotientScenario {
  std::int64_t n = 1;
  std::int64_t d = 2;
  std::int64_t k = 1;
  CoverKind cover_kind = CoverKind::QuasiEtale;
};

// Either the canonical divisor of the quotient is trivial, or it is torsion
// of index r >= 2 with r | d and d | r n, r minimal.
struct IndexResult {
  bool k_trivial = false;
  std::int64_t index = 0;  // r >= 2 when !k_trivial, unused otherwise

  static IndexResult trivial() { return {true, 0}; }
  static IndexResult log_enriques(std::int64_t r) { return {false, r}; }
  bool operator==(const IndexResult&) const = default;
};

// True iff the multiplier exponent k is a primitive residue: gcd(k, d) = 1.
bool is_purely_nonsymplectic(std::int64_t d, std::int64_t k);

// Message explaining why a quotient by a non-primitive multiplier is
// rejected rather than factored: names the symplectic power.
std::string nonprimitive_multiplier_diagnostic(std::int64_t d, std::int64_t k);

// Torsion index of the canonical divisor of the quotient of a 2n-dimensional
// symplectic variety by a purely nonsymplectic automorphism of order d:
// trivial if d | n, else the smallest r with r | d and d | r n.
IndexResult canonical_index(std::int64_t n, std::int64_t d);

// canonical_index guarded by the multiplier: a scenario whose generator is
// not purely nonsymplectic is rejected with the diagnostic above.
IndexResult classify_scenario(const QuotientScenario& sc);

// One row per n in [n_lo, n_hi]; periodic in n with period d (checked).
std::vector<std::pair<std::int64_t, IndexResult>> index_table(std::int64_t d,
                                                              std::int64_t n_lo,
                                                              std::int64_t n_hi);

// For an etale cyclic cover of degree d by a 2n-dimensional irreducible
// holomorphic symplectic manifold, d must divide chi(O) = n + 1.
bool etale_chi_constraint(std::int64_t n, std::int64_t d);

// The two values chi(O) of the cover would have to take at once if a
// symplectic automorphism of order d were etale; they are never equal.
std::pair<std::int64_t, std::int64_t> symplectic_etale_obstruction(std::int64_t n,
                                                                   std::int64_t d);

// Degree and index forced on a Calabi-Yau-type quotient by chi(O) = 2 in
// even dimension; impossible in odd dimension where chi(O) vanishes.
struct CYTypeConstraints {
  bool possible = false;
  int cover_degree = 0;
  int index = 0;
  std::string reason;  // set when impossible
};

CYTypeConstraints cy_type_constraints(std::int64_t dim);

// "contains a cyclic group of order `order`"; exact when identified.
struct CyclicTorsionBound {
  std::int64_t order = 1;
  bool exact = false;
};

struct ClassGroupTorsionReport {
  std::int64_t cover_group_order = 2;
  bool cl_y_torsion_free = false;
  CyclicTorsionBound deduced_torsion;
  bool canonical_cover_identified = false;
};

// Torsion of the class group of the base of a cyclic quasi-etale cover of
// degree d: always contains Z/d; exactly Z/d with the cover identified as
// the canonical cover when the class group upstairs is torsion-free.
ClassGroupTorsionReport class_group_torsion(std::int64_t d, bool cl_y_torsion_free);

}  // namespace enriq
