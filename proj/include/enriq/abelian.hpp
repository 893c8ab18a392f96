// Products of two elliptic curves with complex multiplication, modeled
// exactly: torsion points are lattice coordinates with an explicit modulus,
// curve endomorphisms are 2x2 integer matrices on the rank-2 lattice, and
// affine automorphisms of the product are (4x4 block matrix, torsion
// translation) pairs. On top of that sit the fixed-point solver on the
// surface, the Kummer-fiber predicates, and a brute-force enumeration of
// invariant torsion configurations.

#pragma once

#include "enriq/arith.hpp"
#include "enriq/canonical_index.hpp"
#include "enriq/numeric.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace enriq {

// Endomorphism ring of the curve: Z, Z[i], or Z[w] with w a primitive cube
// root of unity. The unit group is cyclic of order 2, 4 or 6.
enum class CMKind { Generic, Gauss, Eisenstein };

const char* to_string(CMKind k);
CMKind parse_cm_kind(const std::string& name);

std::int64_t unit_group_order(CMKind kind);
// -1, i as [[0,-1],[1,0]], or the primitive sixth root 1+w as [[1,-1],[1,0]]
// (basis (1, w) with w^2 = -1 - w).
IntMatrix unit_group_generator(CMKind kind);
// generator^e; e is an exponent in the cyclic unit group.
IntMatrix multiplier_matrix(CMKind kind, std::int64_t e);

// Exponent <-> display name ("1", "-1", "i", "-i", "w", "-w", "w2", "-w2").
std::int64_t parse_unit(CMKind kind, const std::string& name);
std::string unit_name(CMKind kind, std::int64_t e);

// x -> linear * x + translation on (E1 x E2)[*]; linear is the block
// diagonal of the two multiplier matrices, translation lives in
// (1/N)Lambda / Lambda with coordinates (u1, u2, v1, v2).
struct SurfaceAffineAuto {
  CMKind curve1 = CMKind::Generic;
  CMKind curve2 = CMKind::Generic;
  std::int64_t mult1 = 0;
  std::int64_t mult2 = 0;
  TorsionVector translation;
  IntMatrix linear;
};

SurfaceAffineAuto make_surface_auto(CMKind curve1, CMKind curve2,
                                    std::int64_t mult1, std::int64_t mult2,
                                    TorsionVector translation);

// f after g; curves must match.
SurfaceAffineAuto compose(const SurfaceAffineAuto& f, const SurfaceAffineAuto& g);
SurfaceAffineAuto auto_power(const SurfaceAffineAuto& f, std::int64_t k);

// Image of a point of A[x.modulus]; requires translation modulus | x.modulus.
TorsionVector apply_auto(const SurfaceAffineAuto& f, const TorsionVector& x);

// Smallest k <= cap with f^k = id, composing exactly.
std::optional<std::int64_t> auto_order(const SurfaceAffineAuto& f, std::int64_t cap);

// Decides solvability of (linear - I) x = -translation on the real torus;
// any solution can be found at torsion level N * (largest elementary
// divisor of linear - I), where the witness is produced.
struct FixedPointDecision {
  bool exists = false;
  std::optional<TorsionVector> witness;
};

FixedPointDecision fixed_points_exist_on_surface(const SurfaceAffineAuto& f);

// det(linear - I) = 0; necessary for f to act freely on the surface, and
// forces positive irregularity of the quotient.
bool has_unit_eigenvalue(const SurfaceAffineAuto& f);

// (n+1) * translation = 0, so the induced map on Hilb^{n+1} respects the
// generalized Kummer fiber.
bool preserves_kummer_fiber(const SurfaceAffineAuto& f, std::int64_t n);

// A root of unity presented as exponent modulo its exact order.
struct RootOfUnity {
  std::int64_t exponent = 0;
  std::int64_t order = 1;
};

// The product of the two curve multipliers, i.e. the scalar by which f
// multiplies the symplectic form dx ^ dy; computed in the abstract cyclic
// unit groups and reduced to exact order.
RootOfUnity symplectic_multiplier(const SurfaceAffineAuto& f);

// The three construction templates whose freeness on the Kummer fiber is
// decided by an explicit torsion condition.
enum class KummerTemplate { Involution, OrderThree, OrderFour };

const char* to_string(KummerTemplate t);

struct FreenessReport {
  KummerTemplate applicable_case = KummerTemplate::Involution;
  bool free = false;
  std::string condition;  // the inequality that was evaluated
};

// Sufficient freeness conditions, evaluated exactly on torsion coordinates:
//   involution (-x+u, y+v), n odd, 2v = 0:   ((n+1)/2) u != 0
//   order 3 (x+u, wy+v), 3u = 0, n+1 = 3m:   m (2 + w) v != 0
//   order 4 (x+u, iy+v), 4u = 0, n+1 = 4m:   2m u != 0 or 2m (1+i) v != 0
// Throws std::domain_error("unsupported construction") when f matches none.
FreenessReport freeness_predicate(const SurfaceAffineAuto& f, std::int64_t n);

inline constexpr std::int64_t default_oracle_budget = 50'000'000;

// A multiset of n+1 torsion points with sum zero, invariant under f.
// Entries with multiplicity >= 2 model non-reduced subschemes, which the
// oracle flags but does not decide.
struct FixedConfiguration {
  std::int64_t level = 1;
  std::vector<std::array<std::int64_t, 4>> points;  // sorted
  bool reduced = true;
};

// Enumerates all multisets of n+1 points of A[level] with sum zero and
// returns those invariant under f, in canonical sorted order. An empty
// result is a necessary condition for freeness of the induced map on the
// Kummer fiber (torsion-supported configurations only). Throws when the
// enumeration size exceeds the budget.
std::vector<FixedConfiguration> brute_force_fixed_configurations(
    const SurfaceAffineAuto& f, std::int64_t n, std::int64_t level,
    std::int64_t budget = default_oracle_budget);

struct KummerScenario {
  SurfaceAffineAuto f;
  std::int64_t n = 1;
};

struct KummerReport {
  std::int64_t order = 1;            // order d of the surface automorphism
  RootOfUnity multiplier;            // symplectic multiplier as zeta_d^k
  IndexResult index;                 // canonical index of the quotient
  std::optional<FreenessReport> freeness;
  std::string note;
};

// Computes d = auto_order(f), the multiplier exponent k mod d, and the
// canonical index of Kum_n A / Kum_n(f). Throws std::domain_error when the
// fiber is not preserved or when gcd(k, d) > 1 (diagnostic names the
// symplectic power).
KummerReport kummer_quotient_classification(const KummerScenario& sc);

// "a/N,b/N" -> length-2 torsion vector (also accepts plain integers).
TorsionVector parse_torsion_pair(const std::string& text);
// (u, v) -> length-4 translation at the common modulus.
TorsionVector combine_translation(const TorsionVector& u, const TorsionVector& v);
std::string format_torsion(const TorsionVector& t);

}  // namespace enriq
