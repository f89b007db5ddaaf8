#pragma once

#include <span>
#include <vector>

#include "mesh_pattern.hpp"
#include "perm_core.hpp"
#include "series.hpp"

namespace kingmesh {

/// rows[n] = sum over the class at length n of u^{occurrences}.
struct DistributionTable {
  MeshPattern pattern;
  KingClass cls = KingClass::All;
  std::vector<UPoly> rows;

  int n_max() const { return static_cast<int>(rows.size()) - 1; }
  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

inline constexpr int kDefaultOracleLength = 9;
/// Lengths above this need an explicit opt-in from callers (K_11 has ~5.3M members).
inline constexpr int kLargeOracleLength = 10;

UPoly distribution(const MeshPattern& p, int n, KingClass c, int jobs = 1);

DistributionTable distribution_table(const MeshPattern& p, int n_max, KingClass c, int jobs = 1);

/// One enumeration pass per length serves every pattern in the list.
std::vector<DistributionTable> distribution_tables(std::span<const MeshPattern> patterns, int n_max, KingClass c,
                                                   int jobs = 1);

}  // namespace kingmesh
