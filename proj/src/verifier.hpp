#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "generating_functions.hpp"
#include "mesh_pattern.hpp"
#include "oracle.hpp"
#include "series.hpp"

namespace kingmesh {

// POSSIBLE_PAPER_TYPO: the oracle and the closed forms agree but a printed
// expansion does not. The oracle is authoritative, so this is not a failure.
enum class CheckStatus { Pass, Fail, PossiblePaperTypo };

std::string_view to_string(CheckStatus s);
std::optional<CheckStatus> parse_check_status(std::string_view text);

struct Witness {
  int n = 0;
  UPoly expected;
  UPoly actual;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
  std::string id;
  std::string subject;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Witness> witness;  // always present unless PASS
  std::string detail;

  bool failed() const { return status == CheckStatus::Fail; }
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

// ---------------------------------------------------------------------------
// Printed expansions, kept as data.

/// Initial terms printed for a base series.
std::vector<UPoly> golden_base(BaseSeries name);
/// Initial terms of E(t,u) printed for a solved pattern, t^0 upward.
std::vector<UPoly> golden_distribution(std::string_view nr);

// ---------------------------------------------------------------------------
// Functional equations.

struct EquationSides {
  USeries lhs;
  USeries rhs;
};

/// Registered equation ids, canonical spelling.
std::span<const std::string_view> equation_ids();
/// Resolves short aliases (EQ_P28, EQ_P55, EQ_P63); throws std::invalid_argument if unregistered.
std::string_view canonical_equation_id(std::string_view id);
/// The equation as text, e.g. "B+tB=A".
std::string_view equation_subject(std::string_view id);
/// Both sides built from the closed forms at the given order.
EquationSides equation_sides(std::string_view id, int order);
/// PASS iff lhs - rhs is the zero series; the witness is the first nonzero residual coefficient.
CheckReport residual_report(std::string id, std::string subject, const EquationSides& sides);

namespace equations {
/// E*(t,u) = t(E(ut,u) - E*(ut,u)) for pattern 16, for arbitrary inputs.
EquationSides pattern16_star(const USeries& e, const USeries& e_star);
}  // namespace equations

// ---------------------------------------------------------------------------

/// Where the printed E(t,u) terms come from; golden_distribution by default.
using GoldenSource = std::function<std::vector<UPoly>(std::string_view nr)>;

class Verifier {
 public:
  explicit Verifier(Catalog cat = catalog(), int jobs = 1, GoldenSource golden = golden_distribution);

  /// Oracle rows vs E(t,u); E(t,0) vs P(t); printed expansion vs E(t,u).
  /// Throws UnknownPatternError for ids that are unknown or not solved.
  CheckReport verify_theorem(std::string_view nr, int order, int n_max) const;
  CheckReport verify_equation(std::string_view id, int order) const;
  /// Every check, sorted by id.
  std::vector<CheckReport> verify_all(int order, int n_max) const;

  const Catalog& patterns() const { return catalog_; }

 private:
  CheckReport theorem_report(const CatalogEntry& entry, const DistributionTable& oracle, int order) const;
  const CatalogEntry& solved_entry(std::string_view nr) const;

  Catalog catalog_;
  int jobs_;
  GoldenSource golden_;
};

/// Number of reports with status FAIL.
std::size_t count_failures(std::span<const CheckReport> reports);

}  // namespace kingmesh
