#include "enriq/catalog.hpp"

#include "enriq/abelian.hpp"
#include "enriq/canonical_index.hpp"
#include "enriq/singularities.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace enriq {

using json = nlohmann::ordered_json;

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotCheckable: return "not-checkable";
  }
  return "?";
}

namespace {

std::int64_t require_int(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument("catalog: " + where + " needs integer field '" + key + "'");
  return j[key].get<std::int64_t>();
}

std::string require_str(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string())
    throw std::invalid_argument("catalog: " + where + " needs string field '" + key + "'");
  return j[key].get<std::string>();
}

ExpectedValues parse_expected(const json& e, const std::string& id) {
  ExpectedValues out;
  auto field = [&](const std::string& name) -> const json& {
    if (!e.contains(name))
      throw std::invalid_argument("catalog: record " + id + " lacks expected." + name);
    return e[name];
  };
  out.dim = require_int(field("dim"), "value", id + ".expected.dim");
  out.index = require_int(field("index"), "value", id + ".expected.index");
  out.type_tag = require_str(field("type"), "value", id + ".expected.type");
  out.cover_degree = require_int(field("cover_degree"), "value", id + ".expected.cover_degree");
  if (e.contains("singularities"))
    out.singularities = require_str(e["singularities"], "value", id + ".expected.singularities");

  if (out.index != 0 && out.index < 2)
    throw std::invalid_argument("catalog: record " + id +
                                ": expected.index must be 0 (trivial) or >= 2");
  bool symplectic_type = out.type_tag == "IHS" || out.type_tag == "ISV" || out.type_tag == "PSV";
  if (symplectic_type && out.dim % 2 != 0)
    throw std::invalid_argument("catalog: record " + id +
                                ": symplectic-type entries must have even dimension");
  return out;
}

}  // namespace

Catalog parse_catalog(const std::string& text, const std::string& name) {
  json root;
  try {
    root = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw std::runtime_error(name + ":" + std::to_string(line) +
                             ": catalog parse error: " + e.what());
  }
  Catalog cat;
  if (root.contains("deformation_types")) {
    for (auto& [kind, val] : root["deformation_types"].items())
      cat.b2_of_cover[kind] = require_int(val, "b2_of_cover", "deformation_types." + kind);
  }
  if (!root.contains("records") || !root["records"].is_array())
    throw std::invalid_argument("catalog: top-level 'records' array is required");
  for (const json& rec : root["records"]) {
    ExampleRecord r;
    r.id = require_str(rec, "id", "record");
    r.section = require_str(rec, "section", "record " + r.id);
    if (!rec.contains("construction") || !rec["construction"].is_object())
      throw std::invalid_argument("catalog: record " + r.id + " lacks construction object");
    r.params = rec["construction"];
    r.tag = require_str(r.params, "tag", "record " + r.id + ".construction");
    if (!rec.contains("expected") || !rec["expected"].is_object())
      throw std::invalid_argument("catalog: record " + r.id + " lacks expected object");
    r.expected_raw = rec["expected"];
    r.expected = parse_expected(r.expected_raw, r.id);
    if (rec.contains("notes")) r.notes = rec["notes"].get<std::string>();
    cat.records.push_back(std::move(r));
  }
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str(), path);
}

namespace {

struct Checker {
  Verdict v;

  void pass(const std::string& field, const std::string& detail) {
    v.checks.push_back({field, CheckStatus::Pass, detail});
  }
  void fail(const std::string& field, const std::string& got, const std::string& want) {
    v.checks.push_back({field, CheckStatus::Fail, "got " + got + ", expected " + want});
  }
  void expect_eq(const std::string& field, std::int64_t got, std::int64_t want) {
    if (got == want)
      pass(field, std::to_string(got));
    else
      fail(field, std::to_string(got), std::to_string(want));
  }
  void expect_true(const std::string& field, bool ok, const std::string& detail) {
    v.checks.push_back({field, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
  }
  void not_checkable(const std::string& field, const std::string& reason) {
    v.checks.push_back({field, CheckStatus::NotCheckable, reason});
  }
  void expect_index(const std::string& field, const IndexResult& got, std::int64_t want) {
    std::int64_t g = got.k_trivial ? 0 : got.index;
    expect_eq(field, g, want);
  }

  void finish() {
    bool any_fail = false, any_pass = false;
    for (const FieldCheck& c : v.checks) {
      any_fail = any_fail || c.status == CheckStatus::Fail;
      any_pass = any_pass || c.status == CheckStatus::Pass;
    }
    v.overall = any_fail ? CheckStatus::Fail
                         : (any_pass ? CheckStatus::Pass : CheckStatus::NotCheckable);
  }
};

TorsionVector param_torsion(const json& params, const std::string& key) {
  if (!params.contains(key) || !params[key].is_string())
    throw std::invalid_argument("catalog: construction needs torsion field '" + key + "'");
  return parse_torsion_pair(params[key].get<std::string>());
}

TorsionVector unit_fraction_point(std::int64_t order) {
  IntVector c(2);
  c << 1, 0;
  return TorsionVector(order, c);
}

DeformationKind parse_kind(const std::string& s) {
  if (s == "K3n") return DeformationKind::K3n;
  if (s == "Kum") return DeformationKind::Kum;
  if (s == "OG6") return DeformationKind::OG6;
  if (s == "OG10") return DeformationKind::OG10;
  throw std::invalid_argument("unknown deformation family '" + s + "'");
}

// Shared checks for the generalized Kummer constructions: fiber
// preservation, automorphism order, canonical index, dimension.
void check_kummer_common(Checker& c, const SurfaceAffineAuto& f, std::int64_t n,
                         const ExpectedValues& want) {
  c.expect_true("fiber", preserves_kummer_fiber(f, n),
                "(n+1)-torsion condition for the Kummer fiber");
  KummerReport rep = kummer_quotient_classification({f, n});
  c.expect_eq("cover_degree", rep.order, want.cover_degree);
  c.expect_true("multiplier",
                is_purely_nonsymplectic(rep.multiplier.order, rep.multiplier.exponent),
                "zeta^" + std::to_string(rep.multiplier.exponent) + " of order " +
                    std::to_string(rep.multiplier.order));
  c.expect_index("index", rep.index, want.index);
  c.expect_eq("dim", 2 * n, want.dim);
}

void verify_dispatch(Checker& c, const ExampleRecord& r, const Catalog& cat) {
  const json& p = r.params;
  const ExpectedValues& want = r.expected;

  if (r.tag == "hilbert-of-enriques") {
    std::int64_t n = require_int(p, "n", r.id);
    c.expect_true("construction", n >= 2, "Hilbert scheme of n >= 2 points");
    c.expect_eq("dim", 2 * n, want.dim);
    CYTypeConstraints cy = cy_type_constraints(2 * n);
    c.expect_true("cy_possible", cy.possible, "even-dimensional CY-type cover");
    c.expect_eq("index", cy.index, want.index);
    c.expect_eq("cover_degree", cy.cover_degree, want.cover_degree);
    c.not_checkable("type", "CY-ness of the Hilbert scheme of an Enriques surface "
                            "is a geometric assertion");
    return;
  }

  if (r.tag == "kummer-involution") {
    std::int64_t n = require_int(p, "n", r.id);
    SurfaceAffineAuto f = make_surface_auto(
        CMKind::Generic, CMKind::Generic, 1, 0,
        combine_translation(param_torsion(p, "u"), param_torsion(p, "v")));
    check_kummer_common(c, f, n, want);
    c.expect_true("etale_constraint", etale_chi_constraint(n, 2), "2 divides n+1");
    FreenessReport fr = freeness_predicate(f, n);
    c.expect_true("freeness", fr.free, fr.condition);
    c.not_checkable("type", "the Kummer fiber being IHS is a geometric assertion");
    return;
  }

  if (r.tag == "enriques-involution-hilb") {
    std::int64_t n = require_int(p, "n", r.id);
    c.expect_true("construction", n % 2 == 1, "n must be odd");
    c.expect_eq("dim", 2 * n, want.dim);
    c.expect_true("etale_constraint", etale_chi_constraint(n, 2), "2 divides n+1");
    c.expect_index("index", canonical_index(n, 2), want.index);
    c.expect_eq("cover_degree", 2, want.cover_degree);
    c.not_checkable("type", "existence of an Enriques involution on the K3 surface "
                            "is a geometric assertion");
    return;
  }

  if (r.tag == "moduli-stable" || r.tag == "moduli-semistable") {
    bool stable = r.tag == "moduli-stable";
    std::int64_t sq = require_int(p, stable ? "v2" : "w2", r.id);
    std::string parity = require_str(p, "chi_parity", r.id);
    c.expect_true("construction", parity == "odd",
                  "freeness on the (regular) locus needs odd chi");
    if (!stable)
      c.expect_true("construction_w2", sq % 4 == 0, "w^2 = 0 mod 4 required");
    c.expect_eq("dim", sq + 2, want.dim);
    std::int64_t n = (sq + 2) / 2;
    c.expect_true("parity", n % 2 == 1, "half-dimension n = " + std::to_string(n) +
                                            " must be odd for an index-2 quotient");
    c.expect_index("index", canonical_index(n, 2), want.index);
    c.expect_eq("cover_degree", 2, want.cover_degree);
    c.not_checkable("type", "the moduli space being of the claimed symplectic type "
                            "is a geometric assertion");
    return;
  }

  if (r.tag == "quadric-intersection") {
    std::int64_t n = require_int(p, "n", r.id);
    c.expect_eq("dim", (2 * n + 1) - (n + 1), want.dim);
    CYTypeConstraints cy = cy_type_constraints(want.dim);
    c.expect_true("cy_possible", cy.possible, "even-dimensional CY-type cover");
    c.expect_eq("index", cy.index, want.index);
    c.expect_eq("cover_degree", cy.cover_degree, want.cover_degree);
    c.not_checkable("type", "smoothness and CY-ness of the quadric intersection "
                            "are geometric assertions");
    return;
  }

  if (r.tag == "kummer-order3") {
    std::int64_t n = require_int(p, "n", r.id);
    std::int64_t m = require_int(p, "m", r.id);
    c.expect_true("construction", (n + 1) % 3 == 0 && m == (n + 1) / 3,
                  "n+1 = 3m");
    SurfaceAffineAuto f = make_surface_auto(
        CMKind::Generic, CMKind::Eisenstein, 0, 2,
        combine_translation(unit_fraction_point(3), param_torsion(p, "v")));
    check_kummer_common(c, f, n, want);
    c.expect_true("etale_constraint", etale_chi_constraint(n, 3), "3 divides n+1");
    FreenessReport fr = freeness_predicate(f, n);
    c.expect_true("freeness", fr.free, fr.condition);
    c.not_checkable("type", "the Kummer fiber being IHS is a geometric assertion");
    return;
  }

  if (r.tag == "kummer-order4") {
    std::int64_t n = require_int(p, "n", r.id);
    std::int64_t m = require_int(p, "m", r.id);
    c.expect_true("construction", (n + 1) % 4 == 0 && m == (n + 1) / 4,
                  "n+1 = 4m");
    SurfaceAffineAuto f = make_surface_auto(
        CMKind::Generic, CMKind::Gauss, 0, 1,
        combine_translation(param_torsion(p, "u"), param_torsion(p, "v")));
    check_kummer_common(c, f, n, want);
    c.expect_true("etale_constraint", etale_chi_constraint(n, 4), "4 divides n+1");
    FreenessReport fr = freeness_predicate(f, n);
    c.expect_true("freeness", fr.free, fr.condition);
    c.not_checkable("type", "the Kummer fiber being IHS is a geometric assertion");
    return;
  }

  if (r.tag == "prime-quotient") {
    DeformationKind kind = parse_kind(require_str(p, "type", r.id));
    std::int64_t pr = require_int(p, "p", r.id);
    std::int64_t n = require_int(p, "n", r.id);
    std::int64_t s = require_int(p, "s", r.id);
    auto primes = admissible_prime_orders(kind);
    bool admissible = false;
    for (std::int64_t q : primes) admissible = admissible || q == pr;
    c.expect_true("prime_order", admissible,
                  "p = " + std::to_string(pr) + " within the admissible range for " +
                      require_str(p, "type", r.id));
    c.expect_true("construction", n % pr != 0, "p must not divide n");
    c.expect_index("index", canonical_index(n, pr), want.index);
    c.expect_eq("dim", 2 * n, want.dim);
    c.expect_eq("cover_degree", pr, want.cover_degree);
    auto it = cat.b2_of_cover.find(require_str(p, "type", r.id));
    if (it == cat.b2_of_cover.end()) {
      c.not_checkable("b2", "no configured second Betti number for this family");
    } else {
      DeformationType family = make_deformation_type(kind, it->second, n);
      auto b2s = admissible_b2(family.b2, pr);
      c.expect_true("b2", !b2s.empty(),
                    "admissible Betti range 1 <= b2 <= " + std::to_string(family.b2 - 2) +
                        " with congruence mod p-1 is nonempty");
    }
    if (want.singularities) {
      FixedComponentModel model{pr, n, s, 0, {}};
      c.expect_true("singularities",
                    std::string(to_string(classify_generator(model))) == *want.singularities,
                    std::string("generator age classification: ") +
                        to_string(classify_generator(model)));
    }
    c.not_checkable("type", "existence of the classified automorphism on the family "
                            "comes from the literature");
    return;
  }

  if (r.tag == "cubic-fourfold-order3") {
    // order-6 action on the Fano variety of lines, half-dimension n = 2
    c.expect_eq("dim", 4, want.dim);
    c.expect_index("index", canonical_index(2, 6), want.index);
    c.expect_eq("cover_degree", 6, want.cover_degree);
    c.not_checkable("type", "the Fano variety of lines being IHS (and the "
                            "intermediate quotient CY) are geometric assertions");
    return;
  }

  if (r.tag == "kummer-order6" || r.tag == "kummer-order12") {
    std::int64_t n = require_int(p, "n", r.id);
    bool six = r.tag == "kummer-order6";
    TorsionVector t = combine_translation(unit_fraction_point(n + 1),
                                          unit_fraction_point(n + 1));
    SurfaceAffineAuto f =
        six ? make_surface_auto(CMKind::Generic, CMKind::Eisenstein, 1, 2, t)
            : make_surface_auto(CMKind::Gauss, CMKind::Eisenstein, 1, 2, t);
    check_kummer_common(c, f, n, want);
    c.expect_true("quasi_etale", fixed_points_exist_on_surface(f).exists,
                  "the automorphism has fixed points on the surface, so the "
                  "quotient is quasi-etale but not etale");
    c.not_checkable("type", "the Kummer fiber being IHS is a geometric assertion");
    return;
  }

  if (r.tag == "prym") {
    std::int64_t g = require_int(p, "g", r.id);
    c.expect_true("construction", g >= 2, "genus g >= 2");
    c.expect_eq("dim", 2 * (2 * g - 1), want.dim);
    c.expect_index("index", canonical_index(2 * g - 1, 2), want.index);
    c.expect_eq("cover_degree", 2, want.cover_degree);
    c.not_checkable("type", "ISV-type assertion for the relative Prym variety");
    return;
  }

  throw std::invalid_argument("catalog: unknown construction tag '" + r.tag + "'");
}

}  // namespace

Verdict verify_record(const ExampleRecord& r, const Catalog& catalog) {
  Checker c;
  c.v.id = r.id;
  try {
    verify_dispatch(c, r, catalog);
  } catch (const std::domain_error& e) {
    // a module rejected the record's data: that is a failed claim, not a crash
    c.v.checks.push_back({"error", CheckStatus::Fail, e.what()});
  }
  c.finish();
  return c.v;
}

CatalogSummary run_catalog(const Catalog& c, const std::string& filter) {
  CatalogSummary s;
  for (const ExampleRecord& r : c.records) {
    if (!filter.empty()) {
      bool match = r.id.rfind(filter, 0) == 0 || r.section == filter || r.tag == filter;
      if (!match) continue;
    }
    Verdict v = verify_record(r, c);
    switch (v.overall) {
      case CheckStatus::Pass: ++s.passed; break;
      case CheckStatus::Fail: ++s.failed; break;
      case CheckStatus::NotCheckable: ++s.not_checkable; break;
    }
    s.verdicts.push_back(std::move(v));
  }
  s.ok = s.failed == 0;
  return s;
}

json verdict_to_json(const Verdict& v) {
  json checks = json::array();
  for (const FieldCheck& c : v.checks)
    checks.push_back({{"field", c.field}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return {{"id", v.id}, {"verdict", to_string(v.overall)}, {"checks", checks}};
}

json summary_to_json(const CatalogSummary& s) {
  json rows = json::array();
  for (const Verdict& v : s.verdicts) rows.push_back(verdict_to_json(v));
  return {{"records", rows},
          {"passed", s.passed},
          {"failed", s.failed},
          {"not_checkable", s.not_checkable},
          {"ok", s.ok}};
}

}  // namespace enriq
