#pragma once

#include <cstdint>
#include <initializer_list>
#include <type_traits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "integer.hpp"

namespace kingmesh {

/// A permutation of 1..n in one-line notation. The empty permutation is valid.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `values` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  /// Accepts "2413" (one digit per entry) or "10;2;..." / "10 2 ...".
  static Permutation parse(std::string_view text);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const { return values_; }

  /// Digits when n <= 9, otherwise ';'-separated.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// K, K^s, K^l, K^sl, K^ls. LS is the complement image of SL: no leading
// largest entry and no trailing smallest entry.
enum class KingClass { All, S, L, SL, LS };

inline constexpr KingClass kAllKingClasses[] = {KingClass::All, KingClass::S, KingClass::L,
                                                KingClass::SL, KingClass::LS};

std::string_view to_string(KingClass c);
std::optional<KingClass> parse_king_class(std::string_view text);

bool is_king(std::span<const int> values);
inline bool is_king(const Permutation& p) { return is_king(p.values()); }

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
/// Order-preserving relabelling onto 1..n. Throws std::invalid_argument on repeats.
Permutation reduced(std::span<const int> values);

/// Class membership of a king permutation. The empty permutation is in every
/// class; a single entry is in none of S, L, SL, LS.
bool in_class(std::span<const int> values, KingClass c);
inline bool in_class(const Permutation& p, KingClass c) { return in_class(p.values(), c); }

namespace detail {

// Depth-first extension of a king prefix. Values are 1-based, `used` is a bitmask.
template <class Visitor>
class KingBacktracker {
 public:
  KingBacktracker(int n, KingClass c, Visitor& visit) : n_(n), cls_(c), visit_(visit), buf_(n) {}

  void run_from(int first) {
    if (first == 1 && (cls_ == KingClass::S || cls_ == KingClass::SL)) return;
    if (first == n_ && cls_ == KingClass::LS) return;
    buf_[0] = first;
    extend(1, std::uint64_t{1} << first);
  }

 private:
  void extend(int depth, std::uint64_t used) {
    if (depth == n_) {
      const int last = buf_[n_ - 1];
      if (last == n_ && (cls_ == KingClass::L || cls_ == KingClass::SL)) return;
      if (last == 1 && cls_ == KingClass::LS) return;
      visit_(std::span<const int>(buf_.data(), buf_.size()));
      return;
    }
    const int prev = buf_[depth - 1];
    for (int v = 1; v <= n_; ++v) {
      if (used & (std::uint64_t{1} << v)) continue;
      if (v == prev - 1 || v == prev + 1) continue;
      buf_[depth] = v;
      extend(depth + 1, used | (std::uint64_t{1} << v));
    }
  }

  int n_;
  KingClass cls_;
  Visitor& visit_;
  std::vector<int> buf_;
};

}  // namespace detail

inline constexpr int kMaxEnumerationLength = 20;

/// Streams the members of `c` of length n beginning with `first`.
/// Only the subtree under that first entry is visited, so disjoint `first`
/// values can be processed by independent workers.
template <class Visitor>
void for_each_king_starting_with(int n, KingClass c, int first, Visitor&& visit) {
  if (n <= 1 || first < 1 || first > n) {
    if (n == 1 && first == 1 && c == KingClass::All) {
      const int one = 1;
      visit(std::span<const int>(&one, 1));
    }
    return;
  }
  detail::KingBacktracker<std::remove_reference_t<Visitor>> bt(n, c, visit);
  bt.run_from(first);
}

/// Streams every member of `c` of length n, in lexicographic order.
template <class Visitor>
void for_each_king(int n, KingClass c, Visitor&& visit) {
  if (n == 0) {
    visit(std::span<const int>());
    return;
  }
  for (int first = 1; first <= n; ++first) for_each_king_starting_with(n, c, first, visit);
}

/// Materializing convenience for small n (tests, CLI listing of short lengths).
std::vector<Permutation> enumerate_kings(int n, KingClass c);

enum class CountMethod { Recurrence, Explicit, GeneratingFunction, Enumerate };

std::string_view to_string(CountMethod m);
std::optional<CountMethod> parse_count_method(std::string_view text);

/// |K_n| by the chosen method. Enumerate uses `jobs` workers.
Integer count_kings(int n, CountMethod method, int jobs = 1);

/// Class cardinality by exhaustive enumeration.
Integer count_class(int n, KingClass c, int jobs = 1);

/// Class cardinality from A_0..A_n computed by `method`, using B = A/(1+t)
/// for K^s and K^l and C = t/(1+t) + A/(1+t)^2 for K^sl and K^ls.
Integer count_kings(int n, KingClass c, CountMethod method, int jobs = 1);

/// Worker count from KINGMESH_JOBS, else the hardware concurrency.
int default_jobs();

}  // namespace kingmesh
