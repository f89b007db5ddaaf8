#include "verifier.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "errors.hpp"

namespace kingmesh {

namespace {

std::string padded(int n) { return (n < 10 ? "0" : "") + std::to_string(n); }

CheckReport pass(std::string id, std::string subject, std::string detail) {
  return CheckReport{std::move(id), std::move(subject), CheckStatus::Pass, std::nullopt, std::move(detail)};
}

CheckReport fail(std::string id, std::string subject, Witness w, std::string detail) {
  return CheckReport{std::move(id), std::move(subject), CheckStatus::Fail, std::move(w), std::move(detail)};
}

// First n in [0, rows.size()) where rows[n] differs from s.coeff(n); -1 if none.
int first_row_mismatch(const std::vector<UPoly>& rows, const USeries& s) {
  for (int n = 0; n < static_cast<int>(rows.size()); ++n)
    if (n > s.order() || rows[n] != s.coeff(n)) return n;
  return -1;
}

UPoly coeff_or_zero(const USeries& s, int n) { return n <= s.order() ? s.coeff(n) : UPoly(); }

// Rows of a table against a series, reported as one check.
CheckReport rows_vs_series(std::string id, std::string subject, const std::vector<UPoly>& rows, const USeries& s) {
  const int bad = first_row_mismatch(rows, s);
  if (bad >= 0)
    return fail(std::move(id), std::move(subject), Witness{bad, coeff_or_zero(s, bad), rows[bad]},
                "table disagrees with the series at n=" + std::to_string(bad));
  return pass(std::move(id), std::move(subject),
              "rows 0.." + std::to_string(rows.size() - 1) + " match; last row " + rows.back().to_string());
}

std::string_view base_name(BaseSeries b) {
  switch (b) {
    case BaseSeries::A: return "A";
    case BaseSeries::B: return "B";
    case BaseSeries::C: return "C";
    case BaseSeries::ATu: return "Atu";
    case BaseSeries::BTu: return "Btu";
    case BaseSeries::CTu: return "Ctu";
  }
  return "?";
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::PossiblePaperTypo: return "POSSIBLE_PAPER_TYPO";
  }
  return "?";
}

std::optional<CheckStatus> parse_check_status(std::string_view text) {
  for (auto s : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::PossiblePaperTypo})
    if (to_string(s) == text) return s;
  return std::nullopt;
}

std::size_t count_failures(std::span<const CheckReport> reports) {
  return std::count_if(reports.begin(), reports.end(), [](const CheckReport& r) { return r.failed(); });
}

Verifier::Verifier(Catalog cat, int jobs, GoldenSource golden)
    : catalog_(std::move(cat)), jobs_(std::max(1, jobs)), golden_(std::move(golden)) {}

const CatalogEntry& Verifier::solved_entry(std::string_view nr) const {
  const CatalogEntry* e = find_entry(catalog_, nr);
  if (e == nullptr || e->status != PatternStatus::Solved || !is_solved_pattern(nr))
    throw UnknownPatternError("no solved pattern '" + std::string(nr) + "'");
  return *e;
}

CheckReport Verifier::theorem_report(const CatalogEntry& entry, const DistributionTable& oracle, int order) const {
  const std::string id = "THEOREM_" + entry.id;
  const std::string subject = "pattern " + entry.id;
  const std::vector<UPoly> golden = golden_(entry.id);
  const int n_max = oracle.n_max();
  const int reach = std::max({order, n_max, static_cast<int>(golden.size()) - 1});
  const USeries E = build_E(entry.id, reach);

  // (a) enumeration against the closed form
  if (const int bad = first_row_mismatch(oracle.rows, E); bad >= 0)
    return fail(id, subject, Witness{bad, E.coeff(bad), oracle.rows[bad]},
                "oracle row n=" + std::to_string(bad) + " differs from E(t,u)");

  // (b) E(t,0) = P(t)
  const USeries P = build_P(entry.id, order);
  const USeries E0 = ps_eval_u(E.truncated(order), 0);
  if (const int bad = first_difference(E0, P); bad >= 0)
    return fail(id, subject, Witness{bad, P.coeff(bad), E0.coeff(bad)},
                "E(t,0) differs from P(t) at t^" + std::to_string(bad));

  std::string detail = "oracle rows 0.." + std::to_string(n_max) + " match, row n=" + std::to_string(n_max) + " is " +
                       oracle.rows.back().to_string() + "; E(t,0)=P(t) through t^" + std::to_string(order);

  // (c) printed expansion
  if (const int bad = first_row_mismatch(golden, E); bad >= 0) {
    CheckReport r{id, subject, CheckStatus::PossiblePaperTypo, Witness{bad, golden[bad], E.coeff(bad)}, detail};
    r.detail += "; printed term at t^" + std::to_string(bad) + " disagrees";
    return r;
  }
  detail += "; printed terms through t^" + std::to_string(golden.size() - 1) + " match";
  return pass(id, subject, detail);
}

CheckReport Verifier::verify_theorem(std::string_view nr, int order, int n_max) const {
  if (order < 0 || n_max < 0) throw std::invalid_argument("order and n_max must be nonnegative");
  const CatalogEntry& entry = solved_entry(nr);
  const DistributionTable oracle = distribution_table(entry.pattern, n_max, KingClass::All, jobs_);
  return theorem_report(entry, oracle, order);
}

CheckReport Verifier::verify_equation(std::string_view id, int order) const {
  const std::string_view canonical = canonical_equation_id(id);
  return residual_report(std::string(canonical), std::string(equation_subject(canonical)),
                         equation_sides(canonical, order));
}

std::vector<CheckReport> Verifier::verify_all(int order, int n_max) const {
  if (order < 1 || n_max < 0) throw std::invalid_argument("verify_all needs order >= 1 and n_max >= 0");
  std::vector<CheckReport> out;
  const std::vector<UPoly> printed_a = golden_base(BaseSeries::A);
  const USeries A = build_base(BaseSeries::A, std::max(order, n_max));
  const auto a_n = [&](int n) { return A.coeff(n).constant_term(); };

  // Counting methods against each other and the printed values.
  constexpr int kCountLength = 11;
  for (int n = 0; n <= kCountLength; ++n) {
    const Integer expected = printed_a[n].constant_term();
    std::optional<CheckReport> bad;
    for (auto m : {CountMethod::Recurrence, CountMethod::Explicit, CountMethod::GeneratingFunction,
                   CountMethod::Enumerate}) {
      const Integer got = count_kings(n, m, jobs_);
      if (got != expected) {
        bad = fail("COUNT_n" + padded(n), "A_" + std::to_string(n), Witness{n, UPoly(expected), UPoly(got)},
                   std::string("method ") + std::string(to_string(m)) + " disagrees");
        break;
      }
    }
    out.push_back(bad ? *bad
                      : pass("COUNT_n" + padded(n), "A_" + std::to_string(n),
                             "rec, explicit, gf, enum all give " + expected.get_str()));
  }

  // Class sizes: |K^s| = |K^l| = B_n and |K^sl| = |K^ls| = C_n.
  const USeries B = build_base(BaseSeries::B, n_max);
  const USeries C = build_base(BaseSeries::C, n_max);
  for (int n = 0; n <= n_max; ++n) {
    const std::string id = "CLASS_n" + padded(n);
    const std::string subject = "class sizes at n=" + std::to_string(n);
    std::optional<CheckReport> bad;
    const std::pair<KingClass, const USeries*> expectations[] = {
        {KingClass::S, &B}, {KingClass::L, &B}, {KingClass::SL, &C}, {KingClass::LS, &C}};
    for (const auto& [cls, series] : expectations) {
      const Integer got = count_class(n, cls, jobs_);
      if (got != series->coeff(n).constant_term()) {
        bad = fail(id, subject, Witness{n, series->coeff(n), UPoly(got)},
                   "class " + std::string(to_string(cls)) + " size differs");
        break;
      }
    }
    out.push_back(bad ? *bad : pass(id, subject, "s,l = " + B.coeff(n).to_string() + "; sl,ls = " + C.coeff(n).to_string()));
  }

  // King permutations are exactly the avoiders of two adjacency patterns.
  constexpr int kCharacterizationLength = 8;
  const std::vector<Box> adjacency = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}};
  const MeshPattern up(Permutation{1, 2}, adjacency);
  const MeshPattern down(Permutation{2, 1}, adjacency);
  for (int n = 0; n <= kCharacterizationLength; ++n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    long long kings = 0;
    std::optional<std::string> counterexample;
    do {
      const Permutation p(v);
      const bool king = is_king(p);
      kings += king;
      if (king != (avoids(up, p) && avoids(down, p))) {
        counterexample = p.to_string();
        break;
      }
    } while (std::next_permutation(v.begin(), v.end()));
    const std::string id = "KING_CHAR_n" + padded(n);
    const std::string subject = "king iff avoids both adjacency patterns, n=" + std::to_string(n);
    if (counterexample)
      out.push_back(fail(id, subject, Witness{n, UPoly(0), UPoly(1)}, "counterexample " + *counterexample));
    else if (Integer(static_cast<long>(kings)) != a_n(n))
      out.push_back(fail(id, subject, Witness{n, UPoly(a_n(n)), UPoly(Integer(static_cast<long>(kings)))},
                         "king count differs"));
    else
      out.push_back(pass(id, subject, std::to_string(kings) + " kings among " + std::to_string(n) + "!"));
  }

  // One enumeration pass for every catalog pattern.
  std::vector<MeshPattern> patterns;
  for (const auto& e : catalog_) patterns.push_back(e.pattern);
  const std::vector<DistributionTable> tables = distribution_tables(patterns, n_max, KingClass::All, jobs_);

  for (std::size_t i = 0; i < catalog_.size(); ++i) {
    const CatalogEntry& entry = catalog_[i];
    const DistributionTable& table = tables[i];
    // Nonnegative rows of mass A_n, for solved and open patterns alike.
    std::optional<CheckReport> bad;
    const std::string mass_id = (entry.status == PatternStatus::Open ? "OPEN_MASS_" : "MASS_") + entry.id;
    const std::string subject = "pattern " + entry.id;
    for (int n = 0; n <= n_max; ++n) {
      const UPoly& row = table.rows[n];
      if (!row.has_nonnegative_coefficients() || row.sum_of_coefficients() != a_n(n)) {
        bad = fail(mass_id, subject, Witness{n, UPoly(a_n(n)), row}, "row n=" + std::to_string(n) + " has wrong mass");
        break;
      }
    }
    if (!bad && entry.status == PatternStatus::Solved) {
      const USeries E1 = ps_eval_u(build_E(entry.id, order), 1);
      const USeries A_order = A.truncated(order);
      if (const int d = first_difference(E1, A_order); d >= 0)
        bad = fail(mass_id, subject, Witness{d, A_order.coeff(d), E1.coeff(d)}, "E(t,1) differs from A(t)");
    }
    if (bad) {
      out.push_back(*bad);
    } else {
      std::string detail = "rows 0.." + std::to_string(n_max) + " nonnegative with mass A_n";
      if (entry.status == PatternStatus::Solved) detail += "; E(t,1)=A(t) through t^" + std::to_string(order);
      out.push_back(pass(mass_id, subject, detail));
    }

    if (entry.status == PatternStatus::Solved && is_solved_pattern(entry.id))
      out.push_back(theorem_report(entry, table, order));

    if (entry.id == "10") {
      for (int n = 2; n <= n_max; ++n) {
        const UPoly& row = table.rows[n];
        const Integer half = a_n(n) / 2;
        const UPoly expected(std::vector<Integer>{half, half});
        const std::string id = "P10_HALVING_n" + padded(n);
        const std::string detail = "avoiders=" + row.coeff(0).get_str() + " containers=" +
                                   Integer(row.sum_of_coefficients() - row.coeff(0)).get_str() + " of A_" +
                                   std::to_string(n) + "=" + a_n(n).get_str();
        if (row == expected && a_n(n) == 2 * half)
          out.push_back(pass(id, "pattern 10 at n=" + std::to_string(n), detail));
        else
          out.push_back(fail(id, "pattern 10 at n=" + std::to_string(n), Witness{n, expected, row}, detail));
      }
    }
  }

  for (auto id : equation_ids()) out.push_back(verify_equation(id, order));

  // Strong fixed points over the restricted classes.
  const int sfp_order = std::max(order, n_max);
  const USeries Atu = build_base(BaseSeries::ATu, sfp_order);
  const USeries Btu = build_base(BaseSeries::BTu, sfp_order);
  const USeries Ctu = build_base(BaseSeries::CTu, sfp_order);
  const MeshPattern& x = catalog_pattern("X");
  const MeshPattern& x_prime = catalog_pattern("X'");
  struct SfpCase {
    std::string name;
    const MeshPattern* pattern;
    KingClass cls;
    const USeries* series;
    std::string_view series_name;
  };
  const SfpCase sfp_cases[] = {
      {"X", &x, KingClass::All, &Atu, "Atu"},      {"X'", &x_prime, KingClass::All, &Atu, "Atu"},
      {"X", &x, KingClass::S, &Btu, "Btu"},        {"X", &x, KingClass::L, &Btu, "Btu"},
      {"X", &x, KingClass::SL, &Ctu, "Ctu"},       {"X'", &x_prime, KingClass::LS, &Ctu, "Ctu"},
  };
  for (const auto& c : sfp_cases) {
    const DistributionTable t = distribution_table(*c.pattern, n_max, c.cls, jobs_);
    out.push_back(rows_vs_series("SFP_" + c.name + "_" + std::string(to_string(c.cls)),
                                 "pattern " + c.name + " over class " + std::string(to_string(c.cls)) + " vs " +
                                     std::string(c.series_name),
                                 t.rows, *c.series));
  }

  // Avoider sets of X agree across K, K^s, K^l, K^sl; X' avoiders agree on K and K^ls.
  {
    const std::string id = "SFP_AVOIDER_SETS";
    const std::string subject = "strong-fixed-point avoiders across the five classes";
    std::optional<CheckReport> bad;
    for (int n = 0; n <= n_max && !bad; ++n) {
      const auto avoiders = [&](const MeshPattern& p, KingClass cls) {
        std::vector<Permutation> out_set;
        for_each_king(n, cls, [&](std::span<const int> s) {
          Permutation perm{std::vector<int>(s.begin(), s.end())};
          if (avoids(p, perm)) out_set.push_back(std::move(perm));
        });
        return out_set;
      };
      const auto base = avoiders(x, KingClass::All);
      const auto base_prime = avoiders(x_prime, KingClass::All);
      const std::vector<std::pair<std::vector<Permutation>, std::string>> others = {
          {avoiders(x, KingClass::S), "X over s"},
          {avoiders(x, KingClass::L), "X over l"},
          {avoiders(x, KingClass::SL), "X over sl"},
      };
      for (const auto& [set, label] : others)
        if (set != base) {
          bad = fail(id, subject, Witness{n, UPoly(Integer(static_cast<long>(base.size()))),
                                          UPoly(Integer(static_cast<long>(set.size())))},
                     label + " differs from X over all at n=" + std::to_string(n));
          break;
        }
      if (!bad && avoiders(x_prime, KingClass::LS) != base_prime)
        bad = fail(id, subject, Witness{n, UPoly(Integer(static_cast<long>(base_prime.size()))), UPoly()},
                   "X' over ls differs from X' over all at n=" + std::to_string(n));
      if (!bad && base.size() != base_prime.size())
        bad = fail(id, subject, Witness{n, UPoly(Integer(static_cast<long>(base.size()))),
                                        UPoly(Integer(static_cast<long>(base_prime.size())))},
                   "X and X' avoider counts differ at n=" + std::to_string(n));
    }
    out.push_back(bad ? *bad
                      : pass(id, subject, "set equality for n=0.." + std::to_string(n_max)));
  }

  // Printed expansions of the base series.
  for (auto b : {BaseSeries::A, BaseSeries::B, BaseSeries::C, BaseSeries::ATu, BaseSeries::BTu, BaseSeries::CTu}) {
    const std::vector<UPoly> golden = golden_base(b);
    const USeries s = build_base(b, std::max<int>(order, golden.size() - 1));
    out.push_back(rows_vs_series("GOLDEN_" + std::string(base_name(b)), "printed terms of " + std::string(base_name(b)),
                                 golden, s));
  }

  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
  return out;
}

}  // namespace kingmesh
