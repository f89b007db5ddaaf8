#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "series.hpp"

namespace kingmesh {

/// A(t) counts king permutations; B(t) those not starting with 1; C(t) those
/// additionally not ending with n. The *Tu variants mark strong fixed points by u.
enum class BaseSeries { A, B, C, ATu, BTu, CTu };

inline constexpr int kDefaultOrder = 30;

USeries build_base(BaseSeries name, int order);

/// Catalog numbers with closed forms: X, X', and the twenty length-2 patterns.
std::span<const std::string_view> solved_pattern_ids();
bool is_solved_pattern(std::string_view nr);

/// Avoidance generating function of a solved pattern over all king permutations.
USeries build_P(std::string_view nr, int order);
/// Distribution generating function: t^n coefficient is the sum of u^{occurrences} over K_n.
USeries build_E(std::string_view nr, int order);

/// Univariate building blocks shared by several theorems and by the verifier.
namespace gf {
/// (1+t)A/(1+t+tA): king permutations without strong fixed points.
USeries sfp_avoiders(int order);
/// (A-1-t)/((1+t)A), the second factor of the pattern 16 sum-product.
USeries pattern16_ratio(int order);
/// 1 + t(1+u+ut) + t(1-u)A, the common denominator of the strong fixed point family.
USeries sfp_denominator(int order);
}  // namespace gf

struct SeriesName {
  enum class Kind { A, B, C, ATu, BTu, CTu, P, E };
  Kind kind = Kind::A;
  std::string nr;  // P and E only

  /// "A", "B", "C", "Atu", "Btu", "Ctu", "P:<nr>", "E:<nr>".
  std::string to_string() const;
  friend bool operator==(const SeriesName&, const SeriesName&) = default;
};

/// Throws std::invalid_argument for malformed names, UnknownPatternError for bad nr.
SeriesName parse_series_name(std::string_view text);
USeries build_series(const SeriesName& name, int order);

}  // namespace kingmesh
