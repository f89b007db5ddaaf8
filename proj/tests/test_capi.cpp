#include <doctest.h>

#include <string>
#include <vector>

#include "kingmesh/kingmesh.h"

namespace {

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  km_string_free(s);
  return out;
}

struct Collected {
  std::vector<std::vector<int>> perms;
  std::size_t stop_after = 0;
};

int collect(void* ctx, const int* values, int n) {
  auto* c = static_cast<Collected*>(ctx);
  c->perms.emplace_back(values, values + n);
  return c->stop_after != 0 && c->perms.size() >= c->stop_after;
}

}  // namespace

TEST_CASE("counting") {
  char* out = nullptr;
  REQUIRE(km_count(5, KM_CLASS_ALL, KM_METHOD_REC, 1, &out) == KM_OK);
  CHECK(take(out) == "14");
  REQUIRE(km_count(11, KM_CLASS_ALL, KM_METHOD_EXPLICIT, 1, &out) == KM_OK);
  CHECK(take(out) == "5296790");
  REQUIRE(km_count(8, KM_CLASS_SL, KM_METHOD_ENUM, 2, &out) == KM_OK);
  CHECK(take(out) == "4174");
  CHECK(km_count(30, KM_CLASS_ALL, KM_METHOD_ENUM, 1, &out) == KM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(km_last_error()).find("out of range") != std::string::npos);
  CHECK(km_count(3, static_cast<km_class>(42), KM_METHOD_REC, 1, &out) == KM_ERR_INVALID_ARGUMENT);
  CHECK(km_count(3, KM_CLASS_ALL, KM_METHOD_REC, 1, nullptr) == KM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("name parsing") {
  km_class c;
  km_method m;
  CHECK(km_parse_class("ls", &c) == KM_OK);
  CHECK(c == KM_CLASS_LS);
  CHECK(km_parse_method("gf", &m) == KM_OK);
  CHECK(m == KM_METHOD_GF);
  CHECK(km_parse_class("big", &c) == KM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(km_status_name(KM_ERR_PARSE)) == "parse error");
  CHECK(km_default_jobs() >= 1);
  CHECK(km_large_threshold() == 10);
}

TEST_CASE("enumeration with a callback") {
  Collected all;
  REQUIRE(km_enumerate(5, KM_CLASS_ALL, collect, &all) == KM_OK);
  CHECK(all.perms.size() == 14);
  CHECK(all.perms.front() == std::vector<int>{1, 3, 5, 2, 4});
  Collected some;
  some.stop_after = 3;
  REQUIRE(km_enumerate(7, KM_CLASS_ALL, collect, &some) == KM_OK);
  CHECK(some.perms.size() == 3);
  Collected empty;
  REQUIRE(km_enumerate(0, KM_CLASS_ALL, collect, &empty) == KM_OK);
  CHECK(empty.perms.size() == 1);
  CHECK(km_enumerate(-1, KM_CLASS_ALL, collect, &empty) == KM_ERR_INVALID_ARGUMENT);
  CHECK(km_enumerate(4, KM_CLASS_ALL, nullptr, nullptr) == KM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("patterns") {
  km_pattern* p = nullptr;
  REQUIRE(km_pattern_parse("nr:16", &p) == KM_OK);
  char* out = nullptr;
  REQUIRE(km_pattern_render(p, &out) == KM_OK);
  CHECK(take(out) == "mesh(2;12;{(0,1),(0,2),(1,0),(2,0)})");
  const int perm[] = {1, 3, 5, 2, 4};
  REQUIRE(km_pattern_occurrences(p, perm, 5, &out) == KM_OK);
  CHECK(take(out) == "4");
  const int not_perm[] = {1, 1};
  CHECK(km_pattern_occurrences(p, not_perm, 2, &out) == KM_ERR_INVALID_ARGUMENT);
  km_pattern_free(p);

  km_pattern* bad = nullptr;
  CHECK(km_pattern_parse("mesh(2;12;{(0,1)", &bad) == KM_ERR_PARSE);
  CHECK(km_last_error_offset() == 16);
  CHECK(bad == nullptr);
  CHECK(km_pattern_parse("nr:99", &bad) == KM_ERR_UNKNOWN_PATTERN);
  CHECK(km_last_error_offset() == -1);

  CHECK(km_catalog_size() == 32);
  CHECK(std::string(km_catalog_id(0)) == "X");
  CHECK(km_catalog_id(32) == nullptr);
  std::size_t solved = 0;
  for (std::size_t i = 0; i < km_catalog_size(); ++i) solved += km_catalog_is_solved(i);
  CHECK(solved == 22);
}

TEST_CASE("tables") {
  km_pattern* p = nullptr;
  REQUIRE(km_pattern_parse("nr:63", &p) == KM_OK);
  km_table* t = nullptr;
  REQUIRE(km_table_compute(p, 8, KM_CLASS_ALL, 2, 0, &t) == KM_OK);
  CHECK(km_table_n_max(t) == 8);
  char* out = nullptr;
  REQUIRE(km_table_row(t, 8, &out) == KM_OK);
  CHECK(take(out) == "4592+636u+14u^2");
  CHECK(km_table_row(t, 9, &out) == KM_ERR_INVALID_ARGUMENT);
  REQUIRE(km_table_render(t, KM_FORMAT_JSON, &out) == KM_OK);
  CHECK(take(out).find("\"total\": \"5242\"") != std::string::npos);
  km_table_free(t);
  km_table* big = nullptr;
  CHECK(km_table_compute(p, 11, KM_CLASS_ALL, 1, 0, &big) == KM_ERR_TOO_LARGE);
  CHECK(big == nullptr);
  km_pattern_free(p);
}

TEST_CASE("series") {
  km_series* s = nullptr;
  REQUIRE(km_series_build("E:16", 7, &s) == KM_OK);
  CHECK(km_series_order(s) == 7);
  char* out = nullptr;
  REQUIRE(km_series_coefficient(s, 7, &out) == KM_OK);
  CHECK(take(out) == "568+78u^6");
  REQUIRE(km_series_render(s, KM_FORMAT_TABLE, &out) == KM_OK);
  CHECK(take(out).find("5  12+2u^4") != std::string::npos);
  km_series_free(s);
  CHECK(km_series_build("E:21", 5, &s) == KM_ERR_UNKNOWN_PATTERN);
  CHECK(km_series_build("Q", 5, &s) == KM_ERR_INVALID_ARGUMENT);
  CHECK(km_series_build("A", -2, &s) == KM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification") {
  km_reports* r = nullptr;
  REQUIRE(km_verify_theorem("64", 30, 8, 2, 0, &r) == KM_OK);
  CHECK(km_reports_size(r) == 1);
  CHECK(km_reports_failures(r) == 0);
  CHECK(std::string(km_reports_status(r, 0)) == "PASS");
  CHECK(std::string(km_reports_id(r, 0)) == "THEOREM_64");
  CHECK(km_reports_id(r, 1) == nullptr);
  km_reports_free(r);

  REQUIRE(km_verify_equation("EQ_P63", 30, &r) == KM_OK);
  char* out = nullptr;
  REQUIRE(km_reports_render(r, KM_FORMAT_JSON, &out) == KM_OK);
  CHECK(take(out).find("\"id\": \"EQ_P63_AVOID\"") != std::string::npos);
  km_reports_free(r);

  CHECK(km_verify_equation("EQ_NONE", 30, &r) == KM_ERR_INVALID_ARGUMENT);
  CHECK(km_verify_theorem("21", 30, 5, 1, 0, &r) == KM_ERR_UNKNOWN_PATTERN);
  CHECK(km_verify_all(30, 11, 1, 0, &r) == KM_ERR_TOO_LARGE);
  CHECK(km_equation_count() >= 20);
  CHECK(std::string(km_equation_id(0)) == "EQ_B");
  CHECK(km_equation_id(km_equation_count()) == nullptr);
}
