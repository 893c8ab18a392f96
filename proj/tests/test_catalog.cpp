#include "enriq/catalog.hpp"

#include <doctest.h>

#include <set>

using namespace enriq;

namespace {

const Catalog& shipped() {
  static Catalog c = load_catalog(ENRIQ_CATALOG_FILE);
  return c;
}

}  // namespace

TEST_CASE("shipped catalog covers every section exactly once") {
  const std::set<std::string> wanted = {"6.1.1", "6.1.2", "6.1.3", "6.1.4", "6.1.5",
                                        "6.1.6", "6.1.7", "6.2.1", "6.2.2", "6.2.3",
                                        "6.2.4", "6.3.1", "6.3.2"};
  std::set<std::string> seen;
  std::set<std::string> ids;
  for (const ExampleRecord& r : shipped().records) {
    seen.insert(r.section);
    CHECK(ids.insert(r.id).second);  // ids unique
    CHECK(wanted.count(r.section) == 1);
  }
  CHECK(seen == wanted);
}

TEST_CASE("shipped catalog passes verification") {
  CatalogSummary s = run_catalog(shipped());
  for (const Verdict& v : s.verdicts) {
    CAPTURE(v.id);
    for (const FieldCheck& c : v.checks) {
      CAPTURE(c.field);
      CAPTURE(c.detail);
      CHECK(c.status != CheckStatus::Fail);
    }
    CHECK(v.overall != CheckStatus::Fail);
  }
  CHECK(s.ok);
  CHECK(s.failed == 0);
  CHECK(s.passed > 0);
}

TEST_CASE("kummer involution record verifies the construction") {
  for (const ExampleRecord& r : shipped().records) {
    if (r.id != "6.1.2") continue;
    Verdict v = verify_record(r, shipped());
    CHECK(v.overall == CheckStatus::Pass);
    bool freeness_seen = false, etale_seen = false;
    for (const FieldCheck& c : v.checks) {
      if (c.field == "freeness") {
        freeness_seen = true;
        CHECK(c.status == CheckStatus::Pass);
      }
      if (c.field == "etale_constraint") {
        etale_seen = true;
        CHECK(c.status == CheckStatus::Pass);
      }
    }
    CHECK(freeness_seen);
    CHECK(etale_seen);
  }
}

TEST_CASE("prym record: numbers pass, the type tag is not checkable") {
  for (const ExampleRecord& r : shipped().records) {
    if (r.tag != "prym") continue;
    Verdict v = verify_record(r, shipped());
    CHECK(v.overall == CheckStatus::Pass);
    bool type_flagged = false;
    for (const FieldCheck& c : v.checks)
      if (c.field == "type") {
        type_flagged = true;
        CHECK(c.status == CheckStatus::NotCheckable);
      }
    CHECK(type_flagged);
  }
}

TEST_CASE("catalog filters") {
  CatalogSummary six = run_catalog(shipped(), "6.2.3");
  CHECK(six.verdicts.size() == 6);

  CatalogSummary twelve = run_catalog(shipped(), "6.2.4");
  CHECK(twelve.verdicts.size() == 12);

  CatalogSummary none = run_catalog(shipped(), "no-such-tag");
  CHECK(none.verdicts.empty());
  CHECK(none.ok);

  CatalogSummary by_tag = run_catalog(shipped(), "prym");
  CHECK(by_tag.verdicts.size() == 1);
}

TEST_CASE("verification catches wrong expectations") {
  Catalog doctored = shipped();
  for (ExampleRecord& r : doctored.records) {
    if (r.id != "6.1.6") continue;
    r.expected.index = 5;
    Verdict v = verify_record(r, doctored);
    CHECK(v.overall == CheckStatus::Fail);
  }
  CatalogSummary s = run_catalog(doctored);
  CHECK_FALSE(s.ok);
}

TEST_CASE("malformed catalog reports the offending line") {
  const char* bad = "{\n  \"records\": [\n    { broken\n  ]\n}\n";
  try {
    parse_catalog(bad, "bad.json");
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("bad.json:3") != std::string::npos);
  }
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_AS(parse_catalog("{}", "x"), std::invalid_argument);
  const char* odd_dim = R"({
    "records": [{
      "id": "t", "section": "6.3.2",
      "construction": {"tag": "prym", "g": 2},
      "expected": {
        "dim": {"value": 5}, "index": {"value": 2},
        "type": {"value": "ISV"}, "cover_degree": {"value": 2}
      }
    }]
  })";
  CHECK_THROWS_AS(parse_catalog(odd_dim, "x"), std::invalid_argument);
}

TEST_CASE("unknown construction tag is an error") {
  Catalog c;
  ExampleRecord r;
  r.id = "zzz";
  r.section = "6.1.1";
  r.tag = "no-such-construction";
  r.params = nlohmann::ordered_json::object();
  CHECK_THROWS_AS(verify_record(r, c), std::invalid_argument);
}
