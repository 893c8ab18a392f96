// Singularity classification for cyclic linearizations along fixed
// components of prime-order nonsymplectic automorphisms: local weight
// vectors, exact rational ages, terminal/canonical thresholds, and the
// Betti-number and prime-order admissibility constraints.

#pragma once

#include "enriq/numeric.hpp"

#include <cstdint>
#include <vector>

namespace enriq {

// Linearization data along a fixed component Z of dimension s inside a
// 2n-dimensional symplectic manifold with an order-p action: s pairs of
// (0, 1) exponents tangent/normal to Z, t exponent pairs (a_j, p+1-a_j),
// and a residual isotypic block of exponent (p+1)/2.
struct FixedComponentModel {
  std::int64_t p = 2;
  std::int64_t n = 1;
  std::int64_t s = 1;
  std::int64_t t = 0;
  std::vector<std::int64_t> a;
};

// Throws std::invalid_argument naming the violated constraint.
void validate(const FixedComponentModel& m);

// Diagonalized root-of-unity exponents of a finite-order linear action.
struct LocalWeights {
  std::int64_t d = 2;                 // order of the action
  std::vector<std::int64_t> exps;     // residues in [0, d)
};

enum class SingularityClass { Terminal, CanonicalNotTerminal, NotCanonical };

const char* to_string(SingularityClass c);

// Exponent vector [0]*s ++ [1]*s ++ (a_j, p+1-a_j for each j) ++
// [(p+1)/2]*(2n-2s-2t); total length 2n. For p = 2 this is [0]*n ++ [1]*n.
LocalWeights weights_from_model(const FixedComponentModel& m);

// (1/d) * sum of exponents, in lowest terms.
Rat age(const LocalWeights& w);

// Closed form for the generator age: n/2 if p = 2, n - s + n/p if p > 2.
Rat symbolic_age(std::int64_t p, std::int64_t n, std::int64_t s);

// Terminal iff age > 1, canonical iff age >= 1.
SingularityClass classify_age(const Rat& a);

// Classification of the quotient singularity from the generator's age.
// Requires p not dividing n (otherwise the quotient is K-trivial).
SingularityClass classify_generator(const FixedComponentModel& m);

// Closed-form terminality test: p does not divide n and (s = n and n > p,
// or s < n). Agrees with classify_generator == Terminal on its domain.
bool terminality_criterion(std::int64_t p, std::int64_t n, std::int64_t s);

// The full quotient-singularity criterion quantifies over every nontrivial
// power; min_age_over_powers measures how far the generator-only shortcut
// can drift from it.
struct PowerScanResult {
  SingularityClass generator_class = SingularityClass::NotCanonical;
  Rat min_age_over_powers;
  SingularityClass all_powers_class = SingularityClass::NotCanonical;
  std::vector<std::pair<std::int64_t, Rat>> ages;  // (k, age of phi^k)
};

PowerScanResult classify_all_powers(const FixedComponentModel& m);

// All b with 1 <= b <= b2_y - 2 and b = b2_y mod (p-1), ascending;
// empty when b2_y < 3.
std::vector<std::int64_t> admissible_b2(std::int64_t b2_y, std::int64_t p);

enum class DeformationKind { K3n, Kum, OG6, OG10 };

const char* to_string(DeformationKind k);

// Primes p admissible as orders of nonsymplectic automorphisms on the
// known deformation families: p <= 7 for Kum/OG6, p <= 23 for K3n/OG10.
std::vector<std::int64_t> admissible_prime_orders(DeformationKind kind);

// Invariants of a deformation family. b2 is configuration data (read from
// the catalog file), not a compiled-in constant.
struct DeformationType {
  DeformationKind kind = DeformationKind::K3n;
  std::int64_t b2 = 0;
  std::int64_t dim = 2;
  std::int64_t chi = 2;
};

// dim = 2n, chi = n + 1.
DeformationType make_deformation_type(DeformationKind kind, std::int64_t b2,
                                      std::int64_t n);

}  // namespace enriq
