#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "mesh_pattern.hpp"

using namespace kingmesh;

namespace {

// Occurrences by the definition: every k-subset of positions, order-isomorphic
// to tau, with each shaded box's region of the plot empty. Positions and values
// are 1-based with sentinels 0 and n+1.
long naive_occurrences(const MeshPattern& p, const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  const int k = p.length();
  long total = 0;
  std::vector<int> pick(k);
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + std::min(k, n), true);
  if (k > n) return 0;
  do {
    for (int i = 0, j = 0; i < n; ++i)
      if (mask[i]) pick[j++] = i + 1;
    std::vector<int> vals(k);
    for (int j = 0; j < k; ++j) vals[j] = s[pick[j] - 1];
    bool iso = true;
    for (int a = 0; a < k && iso; ++a)
      for (int b = 0; b < k && iso; ++b) iso = (vals[a] < vals[b]) == (p.tau()[a] < p.tau()[b]);
    if (!iso) continue;
    std::vector<int> xs = {0}, ys = {0};
    for (int j = 0; j < k; ++j) xs.push_back(pick[j]);
    std::vector<int> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) ys.push_back(v);
    xs.push_back(n + 1);
    ys.push_back(n + 1);
    bool ok = true;
    for (const Box& box : p.shaded()) {
      for (int pos = xs[box.col] + 1; pos < xs[box.col + 1] && ok; ++pos) {
        const int v = s[pos - 1];
        ok = !(v > ys[box.row] && v < ys[box.row + 1]);
      }
    }
    total += ok;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return total;
}

MeshPattern random_pattern(std::mt19937& rng) {
  const int k = std::uniform_int_distribution<int>(0, 3)(rng);
  std::vector<int> tau(k);
  std::iota(tau.begin(), tau.end(), 1);
  std::shuffle(tau.begin(), tau.end(), rng);
  std::vector<Box> boxes;
  for (int c = 0; c <= k; ++c)
    for (int r = 0; r <= k; ++r)
      if (std::bernoulli_distribution(0.4)(rng)) boxes.push_back({c, r});
  return MeshPattern(Permutation(tau), boxes);
}

}  // namespace

TEST_CASE("catalog contents") {
  const Catalog& cat = catalog();
  CHECK(cat.size() == 32);
  std::set<std::string> ids;
  int solved = 0;
  for (const auto& e : cat) {
    ids.insert(e.id);
    solved += e.status == PatternStatus::Solved;
  }
  CHECK(ids.size() == cat.size());
  CHECK(solved == 22);
  CHECK(render(catalog_pattern("X")) == "mesh(1;1;{(0,1),(1,0)})");
  CHECK(render(catalog_pattern("16")) == "mesh(2;12;{(0,1),(0,2),(1,0),(2,0)})");
  CHECK(catalog_pattern("21").is_shaded({2, 2}));
  CHECK(find_entry(cat, "66")->status == PatternStatus::Open);
  CHECK(find_entry(cat, "99") == nullptr);
  CHECK_THROWS_AS(catalog_pattern("99"), UnknownPatternError);
}

TEST_CASE("mesh pattern construction") {
  const MeshPattern p(Permutation{1, 2}, {{2, 0}, {0, 1}, {0, 1}});
  CHECK(p.shaded().size() == 2);
  CHECK(p.shaded().front() == Box{0, 1});
  CHECK(p.shaded_mask() == ((1u << (0 * 3 + 1)) | (1u << (2 * 3 + 0))));
  CHECK(p.with_box({1, 1}).is_shaded({1, 1}));
  CHECK_THROWS_AS(MeshPattern(Permutation{1, 2}, {{3, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(MeshPattern(Permutation{1, 2}, {{0, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(MeshPattern(Permutation{1, 2, 3, 4, 5, 6, 7, 8}, {}), std::invalid_argument);
}

TEST_CASE("every catalog pattern round-trips through text") {
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    CHECK(parse_pattern(render(e.pattern)) == e.pattern);
    CHECK(parse_pattern("nr:" + e.id) == e.pattern);
  }
}

TEST_CASE("parser accepts variations") {
  const MeshPattern p = parse_pattern("  mesh ( 2 ; 12 ; { ( 0 , 1 ) , (1,0) } ) ");
  CHECK(p == MeshPattern(Permutation{1, 2}, {{0, 1}, {1, 0}}));
  CHECK(parse_pattern("mesh(3;1;3;2;{})") == MeshPattern(Permutation{1, 3, 2}, {}));
  CHECK(parse_pattern("mesh(0;;{(0,0)})").length() == 0);
  CHECK(parse_pattern("nr: X'") == catalog_pattern("X'"));
}

TEST_CASE("malformed inputs are rejected with a position") {
  struct Bad {
    const char* text;
    std::size_t offset;
  };
  const Bad bad[] = {
      {"", 0},                          // nothing
      {"pattern(2;12;{})", 0},          // unknown head
      {"mesh(2;12;{(0,1)}", 17},        // unclosed
      {"mesh(2;13;{})", 7},             // tau not a permutation
      {"mesh(2;12;{(0,3)})", 11},       // box outside the grid
      {"mesh(x;12;{})", 5},             // length not a number
      {"mesh(2;12;{(0,1),})", 17},      // dangling comma
      {"mesh(2;123;{})", 7},            // tau too long
      {"mesh(2;12;{(0 1)})", 14},       // missing comma inside a box
      {"mesh(8;12345678;{})", 5},       // longer than supported
      {"mesh(2;12;{}) extra", 14},      // trailing characters
      {"nr:", 3},                       // missing id
  };
  for (const auto& b : bad) {
    CAPTURE(b.text);
    try {
      parse_pattern(b.text);
      FAIL("accepted malformed input");
    } catch (const ParseError& e) {
      CHECK(e.position() == b.offset);
      CHECK(std::string(e.what()).find("at offset") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(parse_pattern("nr:99"), UnknownPatternError);
}

TEST_CASE("occurrence counting agrees with the definition on all short permutations") {
  for (int n = 0; n <= 6; ++n) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    do {
      const Permutation perm(s);
      for (const auto& e : catalog()) {
        CAPTURE(e.id);
        CAPTURE(perm.to_string());
        CHECK(count_occurrences(e.pattern, perm) == naive_occurrences(e.pattern, s));
      }
    } while (std::next_permutation(s.begin(), s.end()));
  }
}

TEST_CASE("occurrence counting agrees with the definition on random patterns") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const MeshPattern p = random_pattern(rng);
    const int n = std::uniform_int_distribution<int>(0, 8)(rng);
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    std::shuffle(s.begin(), s.end(), rng);
    CAPTURE(render(p));
    CHECK(count_occurrences(p, Permutation(s)) == naive_occurrences(p, s));
  }
}

TEST_CASE("batched counter matches single counts") {
  std::vector<MeshPattern> patterns;
  for (const auto& e : catalog()) patterns.push_back(e.pattern);
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) patterns.push_back(random_pattern(rng));
  const OccurrenceCounter counter(patterns);
  std::vector<std::uint64_t> out(counter.size());
  for (const auto& perm : enumerate_kings(8, KingClass::All)) {
    counter.count(perm.values(), out);
    for (std::size_t i = 0; i < patterns.size(); ++i)
      CHECK(Integer(static_cast<unsigned long>(out[i])) == count_occurrences(patterns[i], perm));
  }
}

TEST_CASE("adjacency patterns characterize king permutations") {
  const std::vector<Box> adjacent = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}};
  const MeshPattern up(Permutation{1, 2}, adjacent), down(Permutation{2, 1}, adjacent);
  std::vector<int> s(7);
  std::iota(s.begin(), s.end(), 1);
  do {
    const Permutation perm(s);
    CHECK(is_king(perm) == (avoids(up, perm) && avoids(down, perm)));
  } while (std::next_permutation(s.begin(), s.end()));
}
