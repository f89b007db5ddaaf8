#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "perm_core.hpp"

namespace kingmesh {

/// Unit box of the (k+1)x(k+1) grid: `col` indexes position gaps, `row` value gaps.
struct Box {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Underlying permutation plus a set of shaded boxes.
class MeshPattern {
 public:
  /// Length limit so that the shading fits in a 64-bit mask.
  static constexpr int kMaxLength = 7;

  MeshPattern() = default;
  /// Throws std::invalid_argument on a box outside [0,k]x[0,k] or k > kMaxLength.
  /// Duplicate boxes collapse.
  MeshPattern(Permutation tau, std::vector<Box> shaded);

  int length() const { return static_cast<int>(tau_.size()); }
  const Permutation& tau() const { return tau_; }
  std::span<const Box> shaded() const { return shaded_; }
  bool is_shaded(Box b) const;
  /// Bit col*(k+1)+row set for each shaded box.
  std::uint64_t shaded_mask() const { return mask_; }

  MeshPattern with_box(Box b) const;

  friend bool operator==(const MeshPattern& a, const MeshPattern& b) {
    return a.tau_ == b.tau_ && a.shaded_ == b.shaded_;
  }

 private:
  Permutation tau_;
  std::vector<Box> shaded_;  // sorted, unique
  std::uint64_t mask_ = 0;
};

enum class PatternStatus { Solved, Open };

struct CatalogEntry {
  std::string id;  // "10", "X", "X'", ...
  MeshPattern pattern;
  PatternStatus status = PatternStatus::Solved;
};

using Catalog = std::vector<CatalogEntry>;

/// The numbered patterns: 22 with known distributions, then 10 open ones.
const Catalog& catalog();
/// nullptr when absent.
const CatalogEntry* find_entry(const Catalog& cat, std::string_view id);
/// Throws UnknownPatternError when absent.
const MeshPattern& catalog_pattern(std::string_view id);

/// Grammar: `mesh(<k>;<tau>;{(<i>,<j>),...})` or `nr:<id>`, whitespace-insensitive.
/// Throws ParseError (with offset), or UnknownPatternError for a bad `nr:` id.
MeshPattern parse_pattern(std::string_view text, const Catalog& cat = catalog());
std::string render(const MeshPattern& p);

/// Occurrences in s: position subsets order-isomorphic to tau whose shaded
/// regions (between consecutive occurrence positions/values, with sentinels
/// 0 and n+1) hold no entry of s.
Integer count_occurrences(const MeshPattern& p, const Permutation& s);
bool avoids(const MeshPattern& p, const Permutation& s);

/// Counts several patterns in one pass over each permutation's position
/// subsets; used by the enumeration oracle.
class OccurrenceCounter {
 public:
  explicit OccurrenceCounter(std::vector<MeshPattern> patterns);

  std::size_t size() const { return patterns_.size(); }
  /// out[i] = occurrences of pattern i in s. out.size() must equal size().
  void count(std::span<const int> s, std::span<std::uint64_t> out) const;

 private:
  struct Target {
    std::size_t index;
    std::uint32_t tau_code;
    std::uint64_t mask;
  };
  struct LengthGroup {
    int k;
    std::vector<Target> targets;
  };

  std::vector<MeshPattern> patterns_;
  std::vector<LengthGroup> groups_;
};

}  // namespace kingmesh
