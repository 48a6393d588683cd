#include <doctest.h>

#include <string>

#include "frontal/frontal.h"

namespace {

const std::string kFixtures = FRONTAL_FIXTURES_DIR;

bool contains(const char* haystack, const std::string& needle) {
  return haystack && std::string(haystack).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("version and schema") {
  CHECK(std::string(frontal_version()) == "0.1.0");
  CHECK(std::string(frontal_report_schema()) == "frontal-report/1");
}

TEST_CASE("analyze through the C interface") {
  frontal_options o;
  frontal_options_init(&o);
  CHECK(o.max_jet == 40);
  o.timing = 0;
  frontal_report* r = nullptr;
  REQUIRE(frontal_analyze("S1", "y^2", "y^5 + x*y^3", &o, &r) == FRONTAL_OK);
  REQUIRE(r != nullptr);
  CHECK_FALSE(frontal_report_parse_failed(r));
  CHECK_FALSE(frontal_report_undetermined(r));
  CHECK(frontal_report_mismatches(r) == 0);
  CHECK(std::string(frontal_report_name(r)) == "S1");
  CHECK(std::string(frontal_report_stage_status(r, "invariants")) == "ok");
  CHECK(frontal_report_stage_status(r, "nonsense") == nullptr);
  CHECK(contains(frontal_report_render(r, nullptr, FRONTAL_FORMAT_JSON), "\"W\":1"));
  CHECK(contains(frontal_report_render(r, "invariants", FRONTAL_FORMAT_TEXT), "readings[1].muF: 1/2"));
  CHECK(frontal_report_render(r, "absent", FRONTAL_FORMAT_JSON) == nullptr);
  frontal_report_free(r);
}

TEST_CASE("parse failures and argument errors") {
  frontal_report* r = nullptr;
  REQUIRE(frontal_analyze("bad", "y^-1", "y", nullptr, &r) == FRONTAL_OK);
  CHECK(frontal_report_parse_failed(r));
  CHECK(contains(frontal_report_stage_message(r, "parse"), "negative exponent"));
  frontal_report_free(r);

  CHECK(frontal_analyze("x", nullptr, "y", nullptr, &r) == FRONTAL_ERR_INVALID_ARGUMENT);
  frontal_options o;
  frontal_options_init(&o);
  o.max_jet = 1;
  CHECK(frontal_analyze("x", "y^2", "y^3", &o, &r) == FRONTAL_ERR_INVALID_ARGUMENT);
  CHECK(contains(frontal_last_error(), "max_jet"));

  char* json = nullptr;
  CHECK(frontal_frontalise("y^2", "y^3 +", 40, &json) == FRONTAL_ERR_PARSE);
  CHECK(json == nullptr);
  CHECK(frontal_last_error_line() == 1);
  CHECK(frontal_last_error_column() > 0);
  CHECK(frontal_classify("1 + y", "y^3", 40, &json) == FRONTAL_ERR_GERM);
}

TEST_CASE("frontalise, classify and curve") {
  char* json = nullptr;
  REQUIRE(frontal_frontalise("y^2", "y^3 + x^2*y", 40, &json) == FRONTAL_OK);
  CHECK(contains(json, "\"codim\":1"));
  frontal_string_free(json);
  REQUIRE(frontal_classify("y^2", "x*y^5 + x^3*y^3", 40, &json) == FRONTAL_OK);
  CHECK(contains(json, "C3_check"));
  frontal_string_free(json);
  const char* ps[] = {"t", "0", "t"};
  const char* qs[] = {"0", "t", "t"};
  REQUIRE(frontal_curve(ps, qs, 3, 40, &json) == FRONTAL_OK);
  CHECK(contains(json, "\"mu\":4"));
  frontal_string_free(json);
  const char* bad[] = {"t^2"};
  const char* bad_q[] = {"t^4"};
  CHECK(frontal_curve(bad, bad_q, 1, 40, &json) == FRONTAL_ERR_GERM);
  CHECK(contains(frontal_last_error(), "not generically injective"));
}

TEST_CASE("corpus through the C interface") {
  frontal_corpus* c = nullptr;
  CHECK(frontal_corpus_load((kFixtures + "/missing.jsonl").c_str(), &c) == FRONTAL_ERR_IO);
  REQUIRE(frontal_corpus_load((kFixtures + "/reference_counts.jsonl").c_str(), &c) == FRONTAL_OK);
  CHECK(frontal_corpus_size(c) == 10);
  CHECK(frontal_corpus_report(c, 0) == nullptr);
  frontal_options o;
  frontal_options_init(&o);
  o.threads = 2;
  REQUIRE(frontal_corpus_run(c, &o) == FRONTAL_OK);
  for (size_t i = 0; i < frontal_corpus_size(c); ++i) {
    frontal_report* r = frontal_corpus_report(c, i);
    REQUIRE(r != nullptr);
    CAPTURE(frontal_report_name(r));
    CHECK(frontal_report_mismatches(r) == 0);
  }
  CHECK(std::string(frontal_report_name(frontal_corpus_report(c, 9))) == "6_1");
  frontal_corpus_free(c);
}
