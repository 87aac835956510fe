#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include "moufang/report.hpp"
#include "moufang/suites.hpp"

using namespace moufang;

TEST_CASE("identical configs produce byte-identical JSON") {
  SuiteConfig cfg;
  cfg.model = "octonion";
  cfg.suite = "loop-axioms";
  cfg.samples = 100;
  cfg.seed = 42;
  const auto a = to_json_string(run_suite(cfg));
  const auto b = to_json_string(run_suite(cfg));
  CHECK(a == b);
}

TEST_CASE("JSON schema has exactly the promised fields, in order") {
  SuiteConfig cfg;
  cfg.model = "quaternion";
  cfg.suite = "tangent";
  cfg.samples = 50;
  cfg.seed = 7;
  const auto text = to_json_string(run_suite(cfg));
  const auto j = nlohmann::ordered_json::parse(text);

  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"version", "model", "suite", "seed", "samples",
                                         "records", "pass", "wall_ms"});
  REQUIRE(!j["records"].empty());
  std::vector<std::string> rkeys;
  const auto rec = nlohmann::ordered_json::parse(j["records"][0].dump());
  for (auto it = rec.begin(); it != rec.end(); ++it) rkeys.push_back(it.key());
  CHECK(rkeys ==
        std::vector<std::string>{"name", "max_residual", "tolerance", "samples", "pass"});
}

TEST_CASE("JSON round trip") {
  SuiteConfig cfg;
  cfg.model = "chein-s3";
  cfg.suite = "loop-axioms";
  cfg.samples = 1;
  cfg.seed = 0;
  const auto report = run_suite(cfg);
  const auto emitted = to_json_string(report);
  const auto parsed = parse_report(emitted);
  CHECK(parsed.version == report.version);
  CHECK(parsed.model == report.model);
  CHECK(parsed.suite == report.suite);
  CHECK(parsed.seed == report.seed);
  CHECK(parsed.samples == report.samples);
  CHECK(parsed.pass == report.pass);
  REQUIRE(parsed.records.size() == report.records.size());
  for (size_t i = 0; i < parsed.records.size(); ++i) {
    CHECK(parsed.records[i].name == report.records[i].name);
    CHECK(parsed.records[i].max_residual == report.records[i].max_residual);
    CHECK(parsed.records[i].tolerance == report.records[i].tolerance);
    CHECK(parsed.records[i].samples == report.records[i].samples);
    CHECK(parsed.records[i].pass == report.records[i].pass);
  }
  // emitting the parsed report reproduces the bytes
  CHECK(to_json_string(parsed) == emitted);
}

TEST_CASE("empty record list is a valid passing report") {
  VerificationReport r;
  r.model = "octonion";
  r.suite = "all";
  const auto emitted = to_json_string(r);
  const auto parsed = parse_report(emitted);
  CHECK(parsed.pass);
  CHECK(parsed.records.empty());
}

TEST_CASE("a failing record fails the whole report") {
  SuiteConfig cfg;
  cfg.model = "octonion";
  cfg.suite = "loop-axioms";
  cfg.samples = 50;
  cfg.seed = 1;
  cfg.tol_overrides["moufang"] = 0.0;  // floating-point residuals never hit exact zero
  const auto report = run_suite(cfg);
  CHECK_FALSE(report.pass);
  bool moufang_failed = false;
  for (const auto& r : report.records)
    if (r.name == "moufang" && !r.pass) moufang_failed = true;
  CHECK(moufang_failed);
}

TEST_CASE("configuration validation") {
  SuiteConfig cfg;
  cfg.model = "nonions";
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.model = "octonion";
  cfg.suite = "everything";
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.suite = "all";
  cfg.samples = 0;
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.samples = 10;
  cfg.tol_overrides["no-such-identity"] = 1.0;
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.tol_overrides.clear();
  cfg.model = "chein-s3";
  cfg.suite = "maurer-cartan";
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("chein-s3 loop axioms run exhaustively") {
  SuiteConfig cfg;
  cfg.model = "chein-s3";
  cfg.suite = "loop-axioms";
  cfg.samples = 5;  // ignored: finite models are checked exhaustively
  const auto report = run_suite(cfg);
  CHECK(report.pass);
  bool saw = false;
  for (const auto& r : report.records)
    if (r.name == "moufang-exhaustive") {
      saw = true;
      CHECK(r.samples == 1728);
    }
  CHECK(saw);
}

TEST_CASE("the combined suite is the concatenation of the individual suites") {
  // record streams are keyed by name, so running everything together must
  // reproduce each standalone campaign bit for bit
  SuiteConfig all;
  all.model = "quaternion";
  all.suite = "all";
  all.samples = 40;
  all.seed = 11;
  const auto combined = run_suite(all);

  std::vector<ResidualRecord> expected;
  for (const char* s : {"loop-axioms", "tangent", "birep", "associators", "minimality", "gle",
                        "maurer-cartan"}) {
    SuiteConfig one = all;
    one.suite = s;
    const auto part = run_suite(one);
    expected.insert(expected.end(), part.records.begin(), part.records.end());
  }
  REQUIRE(combined.records.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(combined.records[i].name == expected[i].name);
    CHECK(combined.records[i].max_residual == expected[i].max_residual);
    CHECK(combined.records[i].samples == expected[i].samples);
  }
}

TEST_CASE("tangent summary text") {
  const auto text = tangent_summary("octonion");
  CHECK(text.find("structure constants") != std::string::npos);
  CHECK(text.find("maltsev-quartic") != std::string::npos);
  CHECK_THROWS_AS(tangent_summary("chein-s3"), std::invalid_argument);
}
