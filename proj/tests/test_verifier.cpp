#include <doctest.h>

#include "verifier.hpp"

using namespace kingmesh;

namespace {

const CheckReport& find(const std::vector<CheckReport>& reports, std::string_view id) {
  for (const auto& r : reports)
    if (r.id == id) return r;
  FAIL("missing report " << id);
  return reports.front();
}

}  // namespace

TEST_CASE("status names") {
  for (auto s : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::PossiblePaperTypo})
    CHECK(parse_check_status(to_string(s)) == s);
  CHECK(to_string(CheckStatus::PossiblePaperTypo) == "POSSIBLE_PAPER_TYPO");
  CHECK_FALSE(parse_check_status("pass").has_value());
}

TEST_CASE("three-way theorem checks") {
  const Verifier v;
  const CheckReport r33 = v.verify_theorem("33", 30, 8);
  CHECK(r33.status == CheckStatus::Pass);
  CHECK(r33.detail.find("row n=8 is 5174+68u") != std::string::npos);
  CHECK(v.verify_theorem("55", 30, 8).detail.find("5152+88u+2u^2") != std::string::npos);
  CHECK(v.verify_theorem("64", 30, 8).detail.find("4170+1004u+68u^2") != std::string::npos);
  CHECK_FALSE(v.verify_theorem("X'", 30, 7).witness.has_value());
  CHECK_THROWS_AS(v.verify_theorem("21", 30, 5), UnknownPatternError);
  CHECK_THROWS_AS(v.verify_theorem("99", 30, 5), UnknownPatternError);
}

TEST_CASE("a wrong printed term is a possible typo, not a failure") {
  const GoldenSource tampered = [](std::string_view nr) {
    std::vector<UPoly> rows = golden_distribution(nr);
    if (nr == "28") rows[8] = UPoly::parse("5152+91u");
    return rows;
  };
  const Verifier v(catalog(), 1, tampered);
  const CheckReport r = v.verify_theorem("28", 30, 9);
  CHECK(r.status == CheckStatus::PossiblePaperTypo);
  CHECK_FALSE(r.failed());
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->n == 8);
  CHECK(r.witness->expected.to_string() == "5152+91u");
  CHECK(r.witness->actual.to_string() == "5152+90u");
}

TEST_CASE("registered equations") {
  CHECK(equation_ids().size() >= 20);
  CHECK(canonical_equation_id("EQ_P28") == "EQ_P28_DIST");
  CHECK(canonical_equation_id("EQ_P55") == "EQ_P55_AVOID");
  CHECK(canonical_equation_id("EQ_P63") == "EQ_P63_AVOID");
  CHECK(canonical_equation_id("EQ_B") == "EQ_B");
  CHECK_THROWS_AS(canonical_equation_id("EQ_NOPE"), std::invalid_argument);
  CHECK(equation_subject("EQ_B") == "B+tB=A");
  const Verifier v;
  for (auto id : equation_ids()) {
    CAPTURE(id);
    const CheckReport r = v.verify_equation(id, 30);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.id == id);
  }
  CHECK(v.verify_equation("EQ_P28", 30).id == "EQ_P28_DIST");
  CHECK_THROWS_AS(v.verify_equation("EQ_NOPE", 30), std::invalid_argument);
}

TEST_CASE("perturbing E* for pattern 16 is detected") {
  const int N = 30;
  const USeries E = build_E("16", N);
  const USeries star = E / gf::sfp_avoiders(N) - USeries::one(N);
  CHECK(residual_report("EQ_P16_STAR", "", equations::pattern16_star(E, star)).status == CheckStatus::Pass);
  const CheckReport r = residual_report("EQ_P16_STAR", "", equations::pattern16_star(E, star + USeries::t(N)));
  CHECK(r.status == CheckStatus::Fail);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->n == 1);
  CHECK(r.witness->expected != r.witness->actual);
}

TEST_CASE("residual report carries the first nonzero coefficient") {
  USeries a(5), b(5);
  b.coeff(4) = UPoly::parse("3u");
  const CheckReport r = residual_report("X", "a=b", {a, b});
  CHECK(r.failed());
  CHECK(r.witness->n == 4);
  CHECK(r.witness->actual.to_string() == "3u");
  CHECK_THROWS_AS(residual_report("X", "", {USeries(2), USeries(3)}), SeriesError);
}

TEST_CASE("full suite passes and is deterministic") {
  const Verifier v(catalog(), 4);
  const auto reports = v.verify_all(30, 9);
  CHECK(count_failures(reports) == 0);
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CHECK(r.status == CheckStatus::Pass);
  }
  CHECK(std::is_sorted(reports.begin(), reports.end(),
                       [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; }));
  CHECK(find(reports, "COUNT_n11").status == CheckStatus::Pass);
  CHECK(find(reports, "OPEN_MASS_66").status == CheckStatus::Pass);
  CHECK(find(reports, "SFP_AVOIDER_SETS").status == CheckStatus::Pass);
  CHECK(Verifier(catalog(), 1).verify_all(30, 9) == reports);
}

TEST_CASE("pattern 10 halving at n_max = 4") {
  const auto reports = Verifier().verify_all(10, 4);
  const CheckReport& r = find(reports, "P10_HALVING_n04");
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.detail == "avoiders=1 containers=1 of A_4=2");
}

TEST_CASE("a corrupted catalog entry is isolated") {
  Catalog cat = catalog();
  for (auto& e : cat)
    if (e.id == "10") e.pattern = e.pattern.with_box({1, 1});
  const auto reports = Verifier(cat, 2).verify_all(30, 8);
  const CheckReport& theorem = find(reports, "THEOREM_10");
  CHECK(theorem.status == CheckStatus::Fail);
  REQUIRE(theorem.witness.has_value());
  for (const auto& r : reports)
    if (r.id.starts_with("KING_CHAR")) CHECK(r.status == CheckStatus::Pass);
  CHECK(find(reports, "THEOREM_12").status == CheckStatus::Pass);
}
