#include "generating_functions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "errors.hpp"

namespace kingmesh {

namespace {

constexpr std::array<std::string_view, 22> kSolvedIds = {
    "X",  "X'", "10", "11", "12", "13", "14", "16", "17", "19", "20",
    "22", "27", "28", "30", "33", "34", "36", "45", "55", "63", "64"};

// Patterns no king permutation can contain: E = P = A.
constexpr std::array<std::string_view, 6> kUnoccurringIds = {"11", "14", "30", "34", "36", "45"};

bool contains(std::span<const std::string_view> ids, std::string_view nr) {
  return std::find(ids.begin(), ids.end(), nr) != ids.end();
}

// The series ring at a fixed order with the usual generators at hand.
struct Ring {
  explicit Ring(int order)
      : N(order),
        one(USeries::one(order)),
        t(USeries::t(order)),
        ut(USeries::monomial(UPoly::u(), 1, order)),
        u(UPoly::u()),
        A(build_base(BaseSeries::A, order)) {}

  USeries pow_t(int k) const { return USeries::monomial(1, k, N); }

  int N;
  USeries one, t, ut;
  UPoly u;
  USeries A;
};

USeries king_series(int order) {
  // Sum of n! t^n ((1-t)/(1+t))^n, n = 0..order; later terms vanish mod t^{order+1}.
  const USeries one = USeries::one(order);
  const USeries t = USeries::t(order);
  const USeries ratio = (one - t) * (one / (one + t));
  USeries power = one;
  USeries sum(order);
  Integer factorial = 1;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      factorial *= n;
      power = power * ratio;
    }
    sum += ps_scale(power.shifted_up(n), UPoly(factorial));
  }
  return sum;
}

void require_order(int order) {
  if (order < 0) throw SeriesError("negative truncation order");
}

void require_solved(std::string_view nr) {
  if (!is_solved_pattern(nr)) throw UnknownPatternError("no closed form for pattern '" + std::string(nr) + "'");
}

// E(t,u) for pattern 16 as the sum over i of
//   u^{i choose 2} t^i (1+u^i t) prod_{j=0..i} g(u^j t) prod_{k=1..i} h(u^k t).
// Term i is a multiple of t^i, so its products only need order N - i.
USeries pattern16_distribution(int order) {
  const USeries g = gf::sfp_avoiders(order);
  const USeries h = gf::pattern16_ratio(order);
  USeries result(order);
  USeries product = g;
  for (int i = 0; i <= order; ++i) {
    const int rest = order - i;
    if (i > 0) {
      product = product.truncated(rest) * ps_subst_ut(g.truncated(rest), i) * ps_subst_ut(h.truncated(rest), i);
    }
    const USeries bracket = USeries::one(rest) + USeries::monomial(UPoly::monomial(1, i), 1, rest);
    const USeries term = product * bracket;
    const int u_power = i * (i - 1) / 2;
    for (int n = 0; n <= rest; ++n) result.coeff(n + i) += term.coeff(n).shifted(u_power);
  }
  return result;
}

// Only occurrence is the (first, last) pair; reversal pairs avoiders with containers.
USeries pattern10_series(int order, bool distribution) {
  const USeries A = build_base(BaseSeries::A, order);
  USeries r(order);
  for (int n = 0; n <= order; ++n) {
    const Integer a = A.coeff(n).constant_term();
    if (n < 2) {
      r.coeff(n) = a;
      continue;
    }
    if (!mpz_divisible_ui_p(a.get_mpz_t(), 2)) throw SeriesError("odd king count at length " + std::to_string(n));
    const Integer half = a / 2;
    r.coeff(n) = distribution ? UPoly(std::vector<Integer>{half, half}) : UPoly(half);
  }
  return r;
}

}  // namespace

namespace gf {

USeries sfp_avoiders(int order) {
  const Ring r(order);
  return (r.one + r.t) * r.A / (r.one + r.t + r.t * r.A);
}

USeries pattern16_ratio(int order) {
  const Ring r(order);
  return (r.A - r.one - r.t) / ((r.one + r.t) * r.A);
}

USeries sfp_denominator(int order) {
  const Ring r(order);
  return r.one + r.t * (r.one + r.ut) + r.ut + r.t * (1 - r.u) * r.A;
}

}  // namespace gf

USeries build_base(BaseSeries name, int order) {
  require_order(order);
  if (name == BaseSeries::A) return king_series(order);
  const USeries A = king_series(order);
  const USeries one = USeries::one(order);
  const USeries t = USeries::t(order);
  const USeries ut = USeries::monomial(UPoly::u(), 1, order);
  switch (name) {
    case BaseSeries::B: return A / (one + t);
    case BaseSeries::C: return t / (one + t) + A / ((one + t) * (one + t));
    case BaseSeries::ATu: return (one + ut) * (one + t) * A / gf::sfp_denominator(order);
    case BaseSeries::BTu: return (one + t) * A / gf::sfp_denominator(order);
    case BaseSeries::CTu:
      return ut / (one + ut) + (one + t) * A / ((one + ut) * gf::sfp_denominator(order));
    case BaseSeries::A: break;
  }
  return A;
}

std::span<const std::string_view> solved_pattern_ids() { return kSolvedIds; }

bool is_solved_pattern(std::string_view nr) { return contains(kSolvedIds, nr); }

USeries build_P(std::string_view nr, int order) {
  require_order(order);
  require_solved(nr);
  if (nr == "10") return pattern10_series(order, false);
  const Ring r(order);
  [[maybe_unused]] const auto& [N, one, t, ut, u, A] = r;
  const USeries t2 = r.pow_t(2);
  const USeries one_t = one + t;
  if (contains(kUnoccurringIds, nr)) return A;
  if (nr == "X" || nr == "X'") return gf::sfp_avoiders(order);
  if (nr == "12") return t + A / one_t;
  if (nr == "13") return t2 / one_t + (one + 2 * t) * A / (one_t * one_t);
  if (nr == "16") return one_t * one_t * A / (one_t + t * A);
  if (nr == "17") return (one / one_t + t * one_t / (one_t + t * A)) * A;
  if (nr == "19") return (one_t - t * A / one_t) * A;
  if (nr == "20") return (one + t2 / one_t - t2 * A / (one_t * one_t)) * A;
  if (nr == "22") return (one + t2 - t2 * A * A / (one_t * one_t)) * A;
  if (nr == "27") return (t + one / one_t - t2 * A * A / (one_t * (one_t + t * A))) * A;
  if (nr == "28") return one_t * one_t * A / (one_t * one_t + t2 * (A - t - one) * A);
  if (nr == "33") {
    const USeries d = one_t + t * A;
    return one_t * (one_t + t * (2 * one + t) * A) * A / (d * d);
  }
  if (nr == "55") return one_t * (A - t) / (one + t * (A - t - one));
  if (nr == "63") return (2 * A - t - one) / (A - t);
  if (nr == "64") return one + t + one / one_t - one / A;
  throw UnknownPatternError("no avoidance series for pattern '" + std::string(nr) + "'");
}

USeries build_E(std::string_view nr, int order) {
  require_order(order);
  require_solved(nr);
  if (nr == "10") return pattern10_series(order, true);
  if (nr == "16") return pattern16_distribution(order);
  if (nr == "X" || nr == "X'") return build_base(BaseSeries::ATu, order);
  const Ring r(order);
  [[maybe_unused]] const auto& [N, one, t, ut, u, A] = r;
  const USeries t2 = r.pow_t(2);
  const USeries ut2 = USeries::monomial(UPoly::u(), 2, order);
  const USeries one_t = one + t;
  const UPoly one_u = 1 - u;
  if (contains(kUnoccurringIds, nr)) return A;
  if (nr == "12") return A / one_t + t * ps_subst_ut(A, 1) / (one + ut);
  if (nr == "13") return t2 * one_u / one_t + (one + 2 * t + ut2) * A / (one_t * one_t);
  if (nr == "17") return (one / one_t + t * one_t / gf::sfp_denominator(order)) * A;
  if (nr == "19") return (one_t - ut - t * one_u * A / one_t) * A;
  if (nr == "20") return (one + t2 * one_u / one_t - t2 * one_u * A / (one_t * one_t)) * A;
  if (nr == "22") return (one + t2 * one_u * (one - A * A / (one_t * one_t))) * A;
  if (nr == "27") {
    const USeries inner = one - A * A / gf::sfp_denominator(order);
    return (one + t2 * one_u / one_t * inner) * A;
  }
  if (nr == "28") return one_t * one_t * A / (one + t * (2 * one + t * (one + one_u * (A - t - one) * A)));
  if (nr == "33") {
    const USeries inner = (1 + u) + ut + (2 - u) * A + t * A;
    const USeries num = one_t * (one + t * inner) * A;
    return num / ((one_t + t * A) * gf::sfp_denominator(order));
  }
  if (nr == "55") return one_t * (t * one_u - (one - ut) * A) / (-one + t * (one_u + t - one_u * A));
  if (nr == "63") {
    const USeries num = one_t * one_u + (UPoly(-2) + u + ut2) * A;
    return num / (-u + t * (one_u + ut) - one_u * A);
  }
  if (nr == "64") {
    const USeries one_ut = one + ut;
    const USeries num = (u - 1) * one_ut * one_t + ((2 - u) + t * ((2 + u - u * u) + t)) * A;
    return num / (u * one_ut * one_t + one_u * (one_t + ut) * A);
  }
  throw UnknownPatternError("no distribution series for pattern '" + std::string(nr) + "'");
}

std::string SeriesName::to_string() const {
  switch (kind) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::ATu: return "Atu";
    case Kind::BTu: return "Btu";
    case Kind::CTu: return "Ctu";
    case Kind::P: return "P:" + nr;
    case Kind::E: return "E:" + nr;
  }
  return "?";
}

SeriesName parse_series_name(std::string_view text) {
  using Kind = SeriesName::Kind;
  static const std::pair<std::string_view, Kind> plain[] = {
      {"A", Kind::A},     {"B", Kind::B},     {"C", Kind::C},     {"Atu", Kind::ATu},
      {"Btu", Kind::BTu}, {"Ctu", Kind::CTu}, {"A_TU", Kind::ATu}, {"B_TU", Kind::BTu},
      {"C_TU", Kind::CTu}};
  for (const auto& [name, kind] : plain)
    if (text == name) return SeriesName{kind, {}};
  if (text.size() > 2 && text[1] == ':' && (text[0] == 'P' || text[0] == 'E')) {
    SeriesName name{text[0] == 'P' ? Kind::P : Kind::E, std::string(text.substr(2))};
    require_solved(name.nr);
    return name;
  }
  throw std::invalid_argument("unknown series name '" + std::string(text) + "'");
}

USeries build_series(const SeriesName& name, int order) {
  using Kind = SeriesName::Kind;
  switch (name.kind) {
    case Kind::A: return build_base(BaseSeries::A, order);
    case Kind::B: return build_base(BaseSeries::B, order);
    case Kind::C: return build_base(BaseSeries::C, order);
    case Kind::ATu: return build_base(BaseSeries::ATu, order);
    case Kind::BTu: return build_base(BaseSeries::BTu, order);
    case Kind::CTu: return build_base(BaseSeries::CTu, order);
    case Kind::P: return build_P(name.nr, order);
    case Kind::E: return build_E(name.nr, order);
  }
  throw std::invalid_argument("unknown series kind");
}

}  // namespace kingmesh
