#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "perm_core.hpp"

using namespace kingmesh;

namespace {

// Reference filter straight from the definitions, over all of S_n.
std::vector<Permutation> brute_force(int n, KingClass c) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    bool king = true;
    for (int i = 0; i + 1 < n; ++i) king = king && std::abs(v[i + 1] - v[i]) > 1;
    if (!king) continue;
    const bool starts_min = n > 0 && v.front() == 1;
    const bool ends_max = n > 0 && v.back() == n;
    const bool starts_max = n > 0 && v.front() == n;
    const bool ends_min = n > 0 && v.back() == 1;
    bool keep = true;
    switch (c) {
      case KingClass::All: break;
      case KingClass::S: keep = !starts_min; break;
      case KingClass::L: keep = !ends_max; break;
      case KingClass::SL: keep = !starts_min && !ends_max; break;
      case KingClass::LS: keep = !starts_max && !ends_min; break;
    }
    if (keep) out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("permutation construction validates a bijection") {
  CHECK(Permutation{2, 4, 1, 3}.size() == 4);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK(Permutation(std::vector<int>{}).empty());
}

TEST_CASE("permutation text forms") {
  CHECK(Permutation::parse("2413") == Permutation{2, 4, 1, 3});
  CHECK(Permutation::parse("2;4;1;3") == Permutation{2, 4, 1, 3});
  CHECK(Permutation::parse("2 4 1 3") == Permutation{2, 4, 1, 3});
  CHECK(Permutation::parse("2,4,1,3") == Permutation{2, 4, 1, 3});
  CHECK(Permutation{2, 4, 1, 3}.to_string() == "2413");
  const Permutation ten{2, 4, 6, 8, 10, 1, 3, 5, 7, 9};
  CHECK(ten.to_string() == "2;4;6;8;10;1;3;5;7;9");
  CHECK(Permutation::parse(ten.to_string()) == ten);
  CHECK_THROWS_AS(Permutation::parse("24x3"), std::invalid_argument);
}

TEST_CASE("king test and symmetries") {
  CHECK(is_king(Permutation{2, 4, 1, 3}));
  CHECK(is_king(Permutation{3, 1, 4, 2}));
  CHECK_FALSE(is_king(Permutation{1, 2}));
  CHECK_FALSE(is_king(Permutation{2, 1}));
  CHECK(is_king(Permutation{1}));
  CHECK(reverse(Permutation{2, 4, 1, 3}) == Permutation{3, 1, 4, 2});
  CHECK(complement(Permutation{2, 4, 1, 3}) == Permutation{3, 1, 4, 2});
  for (const auto& p : enumerate_kings(7, KingClass::All)) {
    CHECK(is_king(reverse(p)));
    CHECK(is_king(complement(p)));
  }
}

TEST_CASE("reduction to a permutation") {
  CHECK(reduced(std::vector<int>{10, 30, 20}) == Permutation{1, 3, 2});
  CHECK(reduced(std::vector<int>{}) == Permutation(std::vector<int>{}));
  CHECK_THROWS_AS(reduced(std::vector<int>{4, 4}), std::invalid_argument);
}

TEST_CASE("class names") {
  for (auto c : kAllKingClasses) CHECK(parse_king_class(to_string(c)) == c);
  CHECK_FALSE(parse_king_class("xs").has_value());
  for (auto m : {CountMethod::Recurrence, CountMethod::Explicit, CountMethod::GeneratingFunction,
                 CountMethod::Enumerate})
    CHECK(parse_count_method(to_string(m)) == m);
  CHECK_FALSE(parse_count_method("guess").has_value());
}

TEST_CASE("enumeration matches the definition in every class") {
  for (auto c : kAllKingClasses)
    for (int n = 0; n <= 8; ++n) {
      CAPTURE(n);
      CHECK(enumerate_kings(n, c) == brute_force(n, c));
    }
}

TEST_CASE("small lengths and degenerate classes") {
  CHECK(enumerate_kings(0, KingClass::SL).size() == 1);
  CHECK(enumerate_kings(1, KingClass::All).size() == 1);
  for (auto c : {KingClass::S, KingClass::L, KingClass::SL, KingClass::LS})
    CHECK(enumerate_kings(1, c).empty());
  CHECK(enumerate_kings(4, KingClass::All) == std::vector<Permutation>{Permutation{2, 4, 1, 3}, Permutation{3, 1, 4, 2}});
  CHECK(in_class(Permutation{2, 4, 1, 3}, KingClass::SL));
  CHECK_FALSE(in_class(Permutation{1, 3, 5, 2, 4}, KingClass::S));
  CHECK_FALSE(in_class(Permutation{5, 3, 1, 4, 2}, KingClass::LS));
}

TEST_CASE("enumeration split by first entry covers everything once") {
  for (int n = 2; n <= 8; ++n) {
    std::vector<Permutation> pieces;
    for (int first = 1; first <= n; ++first)
      for_each_king_starting_with(n, KingClass::All, first, [&](std::span<const int> s) {
        CHECK(s.front() == first);
        pieces.emplace_back(std::vector<int>(s.begin(), s.end()));
      });
    CHECK(pieces == enumerate_kings(n, KingClass::All));
  }
}

TEST_CASE("four counting methods agree with the known values") {
  const long expected[] = {1, 1, 0, 0, 2, 14, 90, 646, 5242, 47622, 479306, 5296790};
  for (int n = 0; n <= 11; ++n) {
    CAPTURE(n);
    CHECK(count_kings(n, CountMethod::Recurrence) == expected[n]);
    CHECK(count_kings(n, CountMethod::Explicit) == expected[n]);
    CHECK(count_kings(n, CountMethod::GeneratingFunction) == expected[n]);
    if (n <= 10) CHECK(count_kings(n, CountMethod::Enumerate, 2) == expected[n]);
  }
  CHECK(count_kings(20, CountMethod::Recurrence) == count_kings(20, CountMethod::Explicit));
  CHECK(count_kings(25, CountMethod::Recurrence) == count_kings(25, CountMethod::GeneratingFunction));
  CHECK_THROWS_AS(count_kings(-1, CountMethod::Recurrence), std::invalid_argument);
  CHECK_THROWS_AS(count_kings(kMaxEnumerationLength + 1, CountMethod::Enumerate), std::invalid_argument);
}

TEST_CASE("class counts by every method") {
  for (int n = 0; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(count_class(n, KingClass::S) == count_class(n, KingClass::L));
    CHECK(count_class(n, KingClass::SL) == count_class(n, KingClass::LS));
    for (auto c : kAllKingClasses)
      for (auto m : {CountMethod::Recurrence, CountMethod::Explicit, CountMethod::GeneratingFunction})
        CHECK(count_kings(n, c, m) == count_class(n, c));
  }
  CHECK(count_class(10, KingClass::S) == 436358);
  CHECK(count_kings(10, KingClass::SL, CountMethod::Recurrence) == 397584);
}

TEST_CASE("parallel enumeration count does not depend on the worker count") {
  for (int jobs : {1, 2, 3, 8}) CHECK(count_class(9, KingClass::LS, jobs) == count_class(9, KingClass::LS, 1));
}

TEST_CASE("default job count reads the environment") {
  ::setenv("KINGMESH_JOBS", "3", 1);
  CHECK(default_jobs() == 3);
  ::unsetenv("KINGMESH_JOBS");
  CHECK(default_jobs() >= 1);
}
