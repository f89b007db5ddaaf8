#include <doctest.h>

#include "generating_functions.hpp"
#include "oracle.hpp"

using namespace kingmesh;

namespace {

// Materialize the class and count each member on its own.
UPoly slow_distribution(const MeshPattern& p, int n, KingClass c) {
  UPoly row;
  for (const auto& perm : enumerate_kings(n, c)) {
    const Integer k = count_occurrences(p, perm);
    row += UPoly::monomial(1, static_cast<int>(k.get_si()));
  }
  return row;
}

}  // namespace

TEST_CASE("oracle rows equal per-permutation counts") {
  for (const auto& e : catalog())
    for (auto c : {KingClass::All, KingClass::SL, KingClass::LS})
      for (int n = 0; n <= 7; ++n) {
        CAPTURE(e.id);
        CAPTURE(n);
        CHECK(distribution(e.pattern, n, c) == slow_distribution(e.pattern, n, c));
      }
}

TEST_CASE("tables have mass A_n and nonnegative coefficients") {
  const USeries A = build_base(BaseSeries::A, 9);
  for (const auto& e : catalog()) {
    const DistributionTable t = distribution_table(e.pattern, 9, KingClass::All, 2);
    CHECK(t.n_max() == 9);
    for (int n = 0; n <= 9; ++n) {
      CHECK(t.rows[n].has_nonnegative_coefficients());
      CHECK(t.rows[n].sum_of_coefficients() == A.coeff(n).constant_term());
    }
  }
}

TEST_CASE("batched tables equal single tables") {
  std::vector<MeshPattern> patterns;
  for (const auto& e : catalog()) patterns.push_back(e.pattern);
  const auto batched = distribution_tables(patterns, 8, KingClass::S, 3);
  REQUIRE(batched.size() == patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i)
    CHECK(batched[i] == distribution_table(patterns[i], 8, KingClass::S, 1));
}

TEST_CASE("worker count does not change the result") {
  const MeshPattern& p = catalog_pattern("64");
  const DistributionTable one = distribution_table(p, 9, KingClass::All, 1);
  for (int jobs : {2, 4, 9, 16}) CHECK(distribution_table(p, 9, KingClass::All, jobs) == one);
  CHECK(one.rows[8].to_string() == "4170+1004u+68u^2");
}

TEST_CASE("strong fixed points over the restricted classes") {
  const USeries Btu = build_base(BaseSeries::BTu, 9), Ctu = build_base(BaseSeries::CTu, 9);
  const DistributionTable s = distribution_table(catalog_pattern("X"), 9, KingClass::S);
  const DistributionTable sl = distribution_table(catalog_pattern("X"), 9, KingClass::SL);
  const DistributionTable ls = distribution_table(catalog_pattern("X'"), 9, KingClass::LS);
  for (int n = 0; n <= 9; ++n) {
    CHECK(s.rows[n] == Btu.coeff(n));
    CHECK(sl.rows[n] == Ctu.coeff(n));
    CHECK(ls.rows[n] == Ctu.coeff(n));
  }
}

TEST_CASE("lengths outside the enumerable range are rejected") {
  CHECK_THROWS_AS(distribution(catalog_pattern("X"), -1, KingClass::All), std::invalid_argument);
  CHECK_THROWS_AS(distribution(catalog_pattern("X"), kMaxEnumerationLength + 1, KingClass::All),
                  std::invalid_argument);
}
