#include "enriq/singularities.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace enriq {

namespace {

Rat make_rat(std::int64_t num, std::int64_t den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

void validate(const FixedComponentModel& m) {
  if (!is_prime64(m.p))
    throw std::invalid_argument("FixedComponentModel: p must be prime, got " +
                                std::to_string(m.p));
  if (m.n < 1)
    throw std::invalid_argument("FixedComponentModel: n must be >= 1");
  if (m.s < 0 || m.s > m.n)
    throw std::invalid_argument(
        "FixedComponentModel: need 0 <= s <= n (fixed components are isotropic)");
  if (m.t < 0)
    throw std::invalid_argument("FixedComponentModel: t must be >= 0");
  if (static_cast<std::int64_t>(m.a.size()) != m.t)
    throw std::invalid_argument("FixedComponentModel: a_list must have length t");
  for (std::int64_t aj : m.a)
    if (aj <= 1 || aj >= m.p)
      throw std::invalid_argument("FixedComponentModel: need 1 < a_j < p, got a_j = " +
                                  std::to_string(aj));
  if (2 * m.n - 2 * m.s - 2 * m.t < 0)
    throw std::invalid_argument("FixedComponentModel: need 2n - 2s - 2t >= 0");
  if (m.p == 2 && (m.s != m.n || m.t != 0))
    throw std::invalid_argument("FixedComponentModel: p = 2 forces s = n and t = 0");
}

const char* to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::Terminal: return "terminal";
    case SingularityClass::CanonicalNotTerminal: return "canonical-not-terminal";
    case SingularityClass::NotCanonical: return "not-canonical";
  }
  return "?";
}

LocalWeights weights_from_model(const FixedComponentModel& m) {
  validate(m);
  LocalWeights w;
  w.d = m.p;
  w.exps.reserve(static_cast<std::size_t>(2 * m.n));
  for (std::int64_t i = 0; i < m.s; ++i) w.exps.push_back(0);
  for (std::int64_t i = 0; i < m.s; ++i) w.exps.push_back(1);
  for (std::int64_t aj : m.a) {
    w.exps.push_back(aj % m.p);
    w.exps.push_back((m.p + 1 - aj) % m.p);
  }
  std::int64_t residual = 2 * m.n - 2 * m.s - 2 * m.t;
  for (std::int64_t i = 0; i < residual; ++i)
    w.exps.push_back(((m.p + 1) / 2) % m.p);  // residual block is empty for p = 2
  return w;
}

Rat age(const LocalWeights& w) {
  if (w.d < 1) throw std::invalid_argument("age: order must be >= 1");
  std::int64_t sum = 0;
  for (std::int64_t e : w.exps) {
    if (e < 0 || e >= w.d)
      throw std::invalid_argument("age: exponents must be residues in [0, d)");
    sum += e;
  }
  return make_rat(sum, w.d);
}

Rat symbolic_age(std::int64_t p, std::int64_t n, std::int64_t s) {
  if (!is_prime64(p)) throw std::invalid_argument("symbolic_age: p must be prime");
  if (s < 0 || s > n) throw std::invalid_argument("symbolic_age: need 0 <= s <= n");
  if (p == 2) {
    if (s != n) throw std::invalid_argument("symbolic_age: p = 2 forces s = n");
    return make_rat(n, 2);
  }
  return make_rat((n - s) * p + n, p);  // n - s + n/p
}

SingularityClass classify_age(const Rat& a) {
  if (a > 1) return SingularityClass::Terminal;
  if (a == 1) return SingularityClass::CanonicalNotTerminal;
  return SingularityClass::NotCanonical;
}

SingularityClass classify_generator(const FixedComponentModel& m) {
  validate(m);
  if (m.n % m.p == 0)
    throw std::domain_error(
        "classify_generator: p divides n, the quotient is K-trivial and the "
        "log-Enriques classification does not apply");
  return classify_age(symbolic_age(m.p, m.n, m.s));
}

bool terminality_criterion(std::int64_t p, std::int64_t n, std::int64_t s) {
  if (!is_prime64(p)) throw std::invalid_argument("terminality_criterion: p must be prime");
  if (s < 0 || s > n) throw std::invalid_argument("terminality_criterion: need 0 <= s <= n");
  if (n % p == 0) return false;
  return (s == n && n > p) || s < n;
}

PowerScanResult classify_all_powers(const FixedComponentModel& m) {
  LocalWeights w = weights_from_model(m);
  PowerScanResult r;
  r.generator_class = classify_age(age(w));
  bool first = true;
  for (std::int64_t k = 1; k < m.p; ++k) {
    LocalWeights wk;
    wk.d = w.d;
    wk.exps.reserve(w.exps.size());
    for (std::int64_t e : w.exps) wk.exps.push_back((k * e) % w.d);
    Rat a = age(wk);
    r.ages.emplace_back(k, a);
    if (first || a < r.min_age_over_powers) r.min_age_over_powers = a;
    first = false;
  }
  r.all_powers_class = classify_age(r.min_age_over_powers);
  return r;
}

std::vector<std::int64_t> admissible_b2(std::int64_t b2_y, std::int64_t p) {
  if (!is_prime64(p)) throw std::invalid_argument("admissible_b2: p must be prime");
  std::vector<std::int64_t> out;
  if (b2_y < 3) return out;
  for (std::int64_t b = 1; b <= b2_y - 2; ++b)
    if ((b2_y - b) % (p - 1) == 0) out.push_back(b);
  return out;
}

const char* to_string(DeformationKind k) {
  switch (k) {
    case DeformationKind::K3n: return "K3n";
    case DeformationKind::Kum: return "Kum";
    case DeformationKind::OG6: return "OG6";
    case DeformationKind::OG10: return "OG10";
  }
  return "?";
}

std::vector<std::int64_t> admissible_prime_orders(DeformationKind kind) {
  std::int64_t bound =
      (kind == DeformationKind::Kum || kind == DeformationKind::OG6) ? 7 : 23;
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= bound; ++p)
    if (is_prime64(p)) out.push_back(p);
  return out;
}

DeformationType make_deformation_type(DeformationKind kind, std::int64_t b2,
                                      std::int64_t n) {
  if (n < 1) throw std::invalid_argument("make_deformation_type: n must be >= 1");
  if (b2 < 1) throw std::invalid_argument("make_deformation_type: b2 must be >= 1");
  return {kind, b2, 2 * n, n + 1};
}

}  // namespace enriq
