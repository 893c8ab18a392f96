// enriq: exact classification of cyclic quotients of symplectic varieties.
//
// Subcommands: index-table, classify, rst, kummer, fixed-points, catalog.
// Machine output is JSON with the envelope {command, inputs, result,
// provenance}; rationals are serialized as {"num": ..., "den": ...}.
// Exit codes: 0 success, 1 verification/domain failure, 2 usage or parse
// error.

#include "enriq/abelian.hpp"
#include "enriq/arith.hpp"
#include "enriq/canonical_index.hpp"
#include "enriq/catalog.hpp"
#include "enriq/singularities.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace enriq;

json rat_json(const Rat& r) {
  return {{"num", to_int64(Int(r.get_num()), "rational numerator")},
          {"den", to_int64(Int(r.get_den()), "rational denominator")}};
}

json index_json(const IndexResult& r) {
  if (r.k_trivial) return {{"variant", "k-trivial"}};
  return {{"variant", "log-enriques"}, {"index", r.index}};
}

void emit(const std::string& command, json inputs, json result,
          const std::string& provenance) {
  json out = {{"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"provenance", provenance}};
  std::cout << out.dump(2) << "\n";
}

std::string index_label(const IndexResult& r) {
  return r.k_trivial ? "k-trivial" : ("log-enriques r=" + std::to_string(r.index));
}

// ---- index-table ----------------------------------------------------------

int run_index_table(std::int64_t d, std::int64_t n_lo, std::int64_t n_hi,
                    const std::string& format) {
  auto rows = index_table(d, n_lo, n_hi);
  if (format == "csv") {
    std::cout << "n,variant,index\n";
    for (const auto& [n, res] : rows) {
      std::cout << n << "," << (res.k_trivial ? "k-trivial" : "log-enriques") << ",";
      if (!res.k_trivial) std::cout << res.index;
      std::cout << "\n";
    }
    return 0;
  }
  if (format == "table") {
    std::cout << "  n  canonical class of the quotient\n";
    for (const auto& [n, res] : rows)
      std::cout << (n < 10 ? "  " : (n < 100 ? " " : "")) << n << "  "
                << index_label(res) << "\n";
    return 0;
  }
  json jrows = json::array();
  for (const auto& [n, res] : rows) {
    json row = {{"n", n}};
    row.update(index_json(res));
    jrows.push_back(std::move(row));
  }
  emit("index-table", {{"d", d}, {"n_from", n_lo}, {"n_to", n_hi}},
       {{"rows", std::move(jrows)}},
       "canonical index by divisor scan: smallest r with r | d and d | r*n; "
       "k-trivial when d | n");
  return 0;
}

// ---- classify -------------------------------------------------------------

int run_classify(std::int64_t n, std::int64_t d, std::optional<std::int64_t> k) {
  json inputs = {{"n", n}, {"d", d}};
  IndexResult res;
  if (k) {
    inputs["k"] = *k;
    try {
      res = classify_scenario({n, d, *k, CoverKind::QuasiEtale});
    } catch (const std::domain_error& e) {
      emit("classify", inputs, {{"rejected", e.what()}},
           "a quotient is classified only for a purely nonsymplectic generator");
      return 1;
    }
  } else {
    res = canonical_index(n, d);
  }
  json result = index_json(res);
  if (k) result["purely_nonsymplectic"] = true;
  emit("classify", inputs, std::move(result),
       "canonical index by divisor scan: smallest r with r | d and d | r*n; "
       "k-trivial when d | n");
  return 0;
}

// ---- rst ------------------------------------------------------------------

int run_rst(std::int64_t p, std::int64_t n, std::int64_t s, std::int64_t t,
            const std::vector<std::int64_t>& a, bool all_powers) {
  FixedComponentModel m{p, n, s, t, a};
  LocalWeights w = weights_from_model(m);
  json inputs = {{"p", p}, {"n", n}, {"s", s}, {"t", t}, {"a", a}};
  json result = {{"weights", w.exps},
                 {"age", rat_json(age(w))},
                 {"symbolic_age", rat_json(symbolic_age(p, n, s))},
                 {"generator_class", to_string(classify_generator(m))},
                 {"terminal_by_criterion", terminality_criterion(p, n, s)}};
  if (all_powers) {
    PowerScanResult scan = classify_all_powers(m);
    json ages = json::array();
    for (const auto& [k, ak] : scan.ages)
      ages.push_back({{"k", k}, {"age", rat_json(ak)}});
    result["all_powers"] = {{"ages", std::move(ages)},
                            {"min_age", rat_json(scan.min_age_over_powers)},
                            {"class", to_string(scan.all_powers_class)},
                            {"agrees_with_generator",
                             scan.all_powers_class == scan.generator_class}};
  }
  emit("rst", std::move(inputs), std::move(result),
       "age = (sum of linearization exponents)/p, exact rational; terminal iff "
       "age > 1, canonical iff age >= 1");
  return 0;
}

// ---- kummer / fixed-points ------------------------------------------------

SurfaceAffineAuto build_auto(const std::string& c1, const std::string& c2,
                             const std::string& m1, const std::string& m2,
                             const std::string& u, const std::string& v) {
  CMKind k1 = parse_cm_kind(c1), k2 = parse_cm_kind(c2);
  return make_surface_auto(
      k1, k2, parse_unit(k1, m1), parse_unit(k2, m2),
      combine_translation(parse_torsion_pair(u), parse_torsion_pair(v)));
}

json auto_inputs(const std::string& c1, const std::string& c2, const std::string& m1,
                 const std::string& m2, const std::string& u, const std::string& v) {
  return {{"curve1", c1}, {"curve2", c2}, {"mult1", m1},
          {"mult2", m2}, {"u", u},        {"v", v}};
}

int run_kummer(const std::string& c1, const std::string& c2, const std::string& m1,
               const std::string& m2, const std::string& u, const std::string& v,
               std::int64_t n, bool oracle, std::int64_t level, std::int64_t budget) {
  SurfaceAffineAuto f = build_auto(c1, c2, m1, m2, u, v);
  json inputs = auto_inputs(c1, c2, m1, m2, u, v);
  inputs["n"] = n;

  KummerReport rep = kummer_quotient_classification({f, n});
  json result = {{"order", rep.order},
                 {"multiplier",
                  {{"exponent", rep.multiplier.exponent}, {"order", rep.multiplier.order}}},
                 {"index", index_json(rep.index)},
                 {"note", rep.note}};
  bool predicted_free = false;
  if (rep.freeness) {
    predicted_free = rep.freeness->free;
    result["freeness"] = {{"case", to_string(rep.freeness->applicable_case)},
                          {"free", rep.freeness->free},
                          {"condition", rep.freeness->condition}};
  } else {
    result["freeness"] = nullptr;
  }

  if (oracle) {
    if (level == 0)
      level = to_int64(Int(lcm(f.translation.modulus, Int(2 * (n + 1)))), "oracle level");
    auto cfgs = brute_force_fixed_configurations(f, n, level, budget);
    json jc = json::array();
    int reduced = 0;
    for (const FixedConfiguration& cfg : cfgs) {
      json pts = json::array();
      for (const auto& p : cfg.points) pts.push_back({p[0], p[1], p[2], p[3]});
      if (cfg.reduced) ++reduced;
      jc.push_back({{"points", std::move(pts)},
                    {"reduced", cfg.reduced},
                    {"note", cfg.reduced ? "" : "non-reduced, not decided"}});
    }
    result["oracle"] = {{"level", level},
                        {"configurations", std::move(jc)},
                        {"total", static_cast<std::int64_t>(cfgs.size())},
                        {"reduced", reduced}};
    if (rep.freeness && predicted_free && !cfgs.empty()) {
      result["discrepancy"] =
          "the freeness condition (" + rep.freeness->condition +
          ") holds, yet invariant torsion configurations exist; the stated "
          "sufficient condition is known to need v != 0 in the involution case";
    } else {
      result["discrepancy"] = nullptr;
    }
  }

  emit("kummer", std::move(inputs), std::move(result),
       "order and multiplier computed exactly on lattice coordinates; index by "
       "divisor scan; the oracle enumerates sum-zero torsion multisets");
  return 0;
}

int run_fixed_points(const std::string& c1, const std::string& c2, const std::string& m1,
                     const std::string& m2, const std::string& u, const std::string& v) {
  SurfaceAffineAuto f = build_auto(c1, c2, m1, m2, u, v);
  FixedPointDecision d = fixed_points_exist_on_surface(f);
  json result = {{"exists", d.exists}, {"has_unit_eigenvalue", has_unit_eigenvalue(f)}};
  if (d.witness) {
    result["witness"] = {{"coords", format_torsion(*d.witness)},
                         {"modulus", to_int64(d.witness->modulus, "witness modulus")}};
  } else {
    result["witness"] = nullptr;
  }
  emit("fixed-points", auto_inputs(c1, c2, m1, m2, u, v), std::move(result),
       "(linear - I) x = -translation solved exactly via Smith normal form at "
       "torsion level N*c, c the largest elementary divisor");
  return 0;
}

// ---- catalog ----------------------------------------------------------------

int run_catalog_cmd(const std::string& file, const std::string& filter,
                    const std::string& format) {
  Catalog cat = load_catalog(file);
  CatalogSummary s = run_catalog(cat, filter);
  if (format == "json") {
    emit("catalog", {{"file", file}, {"filter", filter}}, summary_to_json(s),
         "recomputed invariants compared against the catalog's expected values; "
         "purely geometric claims are reported as not-checkable");
  } else {
    for (const Verdict& v : s.verdicts) {
      std::cout << v.id << ": " << to_string(v.overall) << "\n";
      for (const FieldCheck& c : v.checks)
        if (c.status != CheckStatus::Pass)
          std::cout << "    [" << to_string(c.status) << "] " << c.field << ": "
                    << c.detail << "\n";
    }
    std::cout << s.passed << " passed, " << s.failed << " failed, "
              << s.not_checkable << " not-checkable\n";
  }
  return s.ok ? 0 : 1;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of cyclic quotients of symplectic and "
               "abelian-type varieties"};
  app.require_subcommand(1);

  auto* tab = app.add_subcommand("index-table", "canonical index for a range of n");
  std::int64_t tab_d = 2, tab_from = 1, tab_to = 1;
  std::string tab_format = "table";
  tab->add_option("--d", tab_d, "order of the cyclic group")->required();
  tab->add_option("--n-from", tab_from, "first n")->required();
  tab->add_option("--n-to", tab_to, "last n")->required();
  tab->add_option("--format", tab_format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  auto* cls = app.add_subcommand("classify", "canonical index of one quotient");
  std::int64_t cls_n = 1, cls_d = 2, cls_k = 0;
  CLI::Option* k_opt =
      cls->add_option("--k", cls_k, "multiplier exponent of the generator");
  cls->add_option("--n", cls_n, "half dimension of the cover")->required();
  cls->add_option("--d", cls_d, "order of the cyclic group")->required();

  auto* rst = app.add_subcommand(
      "rst", "quotient-singularity classification of a prime-order linearization");
  std::int64_t rst_p = 2, rst_n = 1, rst_s = 0, rst_t = 0;
  std::string rst_a;
  bool rst_all = false;
  rst->add_option("--p", rst_p, "prime order")->required();
  rst->add_option("--n", rst_n, "half dimension")->required();
  rst->add_option("--s", rst_s, "dimension of the fixed component")->required();
  rst->add_option("--t", rst_t, "number of paired exponent blocks");
  rst->add_option("--a", rst_a, "comma list of pair exponents a_j");
  rst->add_flag("--all-powers", rst_all, "scan every nontrivial power");

  auto* kum = app.add_subcommand("kummer", "classify a generalized Kummer quotient");
  std::string k_c1, k_c2, k_m1, k_m2, k_u = "0,0", k_v = "0,0";
  std::int64_t k_n = 1, k_level = 0, k_budget = default_oracle_budget;
  bool k_oracle = false;
  kum->add_option("--curve1", k_c1, "generic|gauss|eisenstein")->required();
  kum->add_option("--curve2", k_c2, "generic|gauss|eisenstein")->required();
  kum->add_option("--mult1", k_m1, "unit on curve 1 (1, -1, i, -i, w, w2, -w, -w2)")
      ->required();
  kum->add_option("--mult2", k_m2, "unit on curve 2")->required();
  kum->add_option("--u", k_u, "translation on curve 1, e.g. 1/4,0/4");
  kum->add_option("--v", k_v, "translation on curve 2");
  kum->add_option("--n", k_n, "Kummer fiber parameter (dimension 2n)")->required();
  kum->add_flag("--oracle", k_oracle, "enumerate invariant torsion configurations");
  kum->add_option("--level", k_level,
                  "torsion level for the oracle (default lcm(modulus, 2(n+1)))");
  kum->add_option("--budget", k_budget, "enumeration budget for the oracle");

  auto* fix = app.add_subcommand(
      "fixed-points", "decide fixed points of an affine automorphism on the surface");
  std::string f_c1, f_c2, f_m1, f_m2, f_u = "0,0", f_v = "0,0";
  fix->add_option("--curve1", f_c1, "generic|gauss|eisenstein")->required();
  fix->add_option("--curve2", f_c2, "generic|gauss|eisenstein")->required();
  fix->add_option("--mult1", f_m1, "unit on curve 1")->required();
  fix->add_option("--mult2", f_m2, "unit on curve 2")->required();
  fix->add_option("--u", f_u, "translation on curve 1");
  fix->add_option("--v", f_v, "translation on curve 2");

  auto* cat = app.add_subcommand("catalog", "verify the example catalog");
  std::string cat_filter;
  std::string cat_format = "table";
  std::string cat_file = ENRIQ_DEFAULT_CATALOG;
  cat->add_option("--filter", cat_filter, "record id prefix, section or tag");
  cat->add_option("--format", cat_format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));
  cat->add_option("--file", cat_file, "catalog file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*tab) return run_index_table(tab_d, tab_from, tab_to, tab_format);
    if (*cls)
      return run_classify(cls_n, cls_d,
                          k_opt->count() > 0 ? std::optional<std::int64_t>(cls_k)
                                             : std::nullopt);
    if (*rst) return run_rst(rst_p, rst_n, rst_s, rst_t, parse_int_list(rst_a), rst_all);
    if (*kum)
      return run_kummer(k_c1, k_c2, k_m1, k_m2, k_u, k_v, k_n, k_oracle, k_level,
                        k_budget);
    if (*fix) return run_fixed_points(f_c1, f_c2, f_m1, f_m2, f_u, f_v);
    if (*cat) return run_catalog_cmd(cat_file, cat_filter, cat_format);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::string what = e.what();
    bool usage = what.find("parse error") != std::string::npos ||
                 what.find("cannot open") != std::string::npos;
    return usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
