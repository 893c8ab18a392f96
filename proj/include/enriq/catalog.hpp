// Machine-readable catalog of the example constructions, with a verifier
// that recomputes every invariant the other modules can reach: dimensions,
// canonical indices, etale constraints, freeness predicates, singularity
// classes. Claims that are purely geometric get a first-class
// "not-checkable" verdict instead of being skipped silently.

#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace enriq {

enum class CheckStatus { Pass, Fail, NotCheckable };

const char* to_string(CheckStatus s);

struct FieldCheck {
  std::string field;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct ExpectedValues {
  std::int64_t dim = 0;
  std::int64_t index = 0;  // 0 means the canonical divisor is trivial
  std::string type_tag;    // CY | IHS | ISV | PSV | abelian-excluded
  std::int64_t cover_degree = 0;
  std::optional<std::string> singularities;
};

struct ExampleRecord {
  std::string id;
  std::string section;
  std::string tag;  // construction tag
  nlohmann::ordered_json params;
  ExpectedValues expected;
  nlohmann::ordered_json expected_raw;  // keeps the per-field source strings
  std::string notes;
};

struct Catalog {
  std::vector<ExampleRecord> records;
  std::map<std::string, std::int64_t> b2_of_cover;  // per deformation family
};

// Throws std::runtime_error carrying the 1-based line number on malformed
// input, std::invalid_argument on schema violations.
Catalog parse_catalog(const std::string& text, const std::string& name);
Catalog load_catalog(const std::string& path);

struct Verdict {
  std::string id;
  CheckStatus overall = CheckStatus::NotCheckable;
  std::vector<FieldCheck> checks;
};

Verdict verify_record(const ExampleRecord& r, const Catalog& catalog);

struct CatalogSummary {
  std::vector<Verdict> verdicts;
  int passed = 0;
  int failed = 0;
  int not_checkable = 0;
  bool ok = true;  // no failures
};

// Verifies every record whose id, section or tag matches the filter
// (empty filter selects everything).
CatalogSummary run_catalog(const Catalog& c, const std::string& filter = "");

nlohmann::ordered_json verdict_to_json(const Verdict& v);
nlohmann::ordered_json summary_to_json(const CatalogSummary& s);

}  // namespace enriq
