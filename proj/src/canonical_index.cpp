#include "enriq/canonical_index.hpp"

#include "enriq/numeric.hpp"

#include <stdexcept>

namespace enriq {

bool is_purely_nonsymplectic(std::int64_t d, std::int64_t k) {
  if (d < 2) throw std::invalid_argument("is_purely_nonsymplectic: d must be >= 2");
  if (k < 0 || k >= d)
    throw std::invalid_argument("is_purely_nonsymplectic: k must satisfy 0 <= k < d");
  return gcd64(k, d) == 1;
}

std::string nonprimitive_multiplier_diagnostic(std::int64_t d, std::int64_t k) {
  std::int64_t g = gcd64(k, d);
  std::string p = std::to_string(d / g);
  return "multiplier exponent k=" + std::to_string(k) + " has gcd " +
         std::to_string(g) + " with the order d=" + std::to_string(d) +
         ": the power phi^" + p +
         " acts symplectically and the quotient factors through it; such "
         "quotients are rejected, not silently factored";
}

IndexResult canonical_index(std::int64_t n, std::int64_t d) {
  if (n < 1) throw std::invalid_argument("canonical_index: n must be >= 1");
  if (d < 2) throw std::invalid_argument("canonical_index: d must be >= 2");
  if (n > 1000000000 || d > 1000000000)
    throw std::invalid_argument("canonical_index: n and d must be <= 10^9 (r*n must "
                                "stay within exact integer range)");
  if (n % d == 0) return IndexResult::trivial();
  for (std::int64_t r = 1; r <= d; ++r) {
    if (d % r != 0) continue;
    if ((r * n) % d == 0) {
      if (r < 2) throw std::logic_error("canonical_index: r = 1 implies d | n");
      return IndexResult::log_enriques(r);
    }
  }
  throw std::logic_error("canonical_index: r = d always satisfies d | r n");
}

IndexResult classify_scenario(const QuotientScenario& sc) {
  if (!is_purely_nonsymplectic(sc.d, sc.k))
    throw std::domain_error(nonprimitive_multiplier_diagnostic(sc.d, sc.k));
  return canonical_index(sc.n, sc.d);
}

std::vector<std::pair<std::int64_t, IndexResult>> index_table(std::int64_t d,
                                                              std::int64_t n_lo,
                                                              std::int64_t n_hi) {
  if (n_lo < 1) throw std::invalid_argument("index_table: n range must start at >= 1");
  if (n_lo > n_hi) throw std::invalid_argument("index_table: empty n range");
  std::vector<std::pair<std::int64_t, IndexResult>> rows;
  rows.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (std::int64_t n = n_lo; n <= n_hi; ++n)
    rows.emplace_back(n, canonical_index(n, d));
  // same residue class mod d, same result
  for (std::size_t i = 0; i + static_cast<std::size_t>(d) < rows.size(); ++i)
    if (!(rows[i].second == rows[i + static_cast<std::size_t>(d)].second))
      throw std::logic_error("index_table: periodicity violated");
  return rows;
}

bool etale_chi_constraint(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < 2) throw std::invalid_argument("etale_chi_constraint: need n >= 1, d >= 2");
  return (n + 1) % d == 0;
}

std::pair<std::int64_t, std::int64_t> symplectic_etale_obstruction(std::int64_t n,
                                                                   std::int64_t d) {
  if (n < 1 || d < 2)
    throw std::invalid_argument("symplectic_etale_obstruction: need n >= 1, d >= 2");
  if (n > 1000000000 || d > 1000000000)
    throw std::invalid_argument("symplectic_etale_obstruction: n and d must be <= 10^9");
  return {n + 1, d * (n + 1)};
}

CYTypeConstraints cy_type_constraints(std::int64_t dim) {
  if (dim < 1) throw std::invalid_argument("cy_type_constraints: dim must be >= 1");
  if (dim % 2 != 0)
    return {false, 0, 0, "chi(O) of an odd-dimensional Calabi-Yau cover is 0, "
                         "contradicting chi(O) = 1 on the base"};
  return {true, 2, 2, ""};
}

ClassGroupTorsionReport class_group_torsion(std::int64_t d, bool cl_y_torsion_free) {
  if (d < 2) throw std::invalid_argument("class_group_torsion: d must be >= 2");
  ClassGroupTorsionReport r;
  r.cover_group_order = d;
  r.cl_y_torsion_free = cl_y_torsion_free;
  r.deduced_torsion = {d, cl_y_torsion_free};
  r.canonical_cover_identified = cl_y_torsion_free;
  return r;
}

}  // namespace enriq
