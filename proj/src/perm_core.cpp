#include "perm_core.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "generating_functions.hpp"
#include "parallel.hpp"

namespace kingmesh {

namespace {

void require_bijection(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n) throw std::invalid_argument("permutation entry out of range 1.." + std::to_string(n));
    if (seen[v]) throw std::invalid_argument("permutation entry repeated: " + std::to_string(v));
    seen[v] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  require_bijection(values_);
}

Permutation::Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  const bool separated = text.find_first_of("; ,") != std::string_view::npos;
  if (!separated) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad permutation character");
      values.push_back(ch - '0');
    }
    return Permutation(std::move(values));
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ';' || text[i] == ' ' || text[i] == ',')) ++i;
    if (i == text.size()) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc()) throw std::invalid_argument("bad permutation entry");
    values.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = values_.size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!digits && i > 0) out += ';';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string_view to_string(KingClass c) {
  switch (c) {
    case KingClass::All: return "all";
    case KingClass::S: return "s";
    case KingClass::L: return "l";
    case KingClass::SL: return "sl";
    case KingClass::LS: return "ls";
  }
  return "?";
}

std::optional<KingClass> parse_king_class(std::string_view text) {
  for (KingClass c : kAllKingClasses)
    if (to_string(c) == text) return c;
  return std::nullopt;
}

bool is_king(std::span<const int> values) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (std::abs(values[i] - values[i - 1]) <= 1) return false;
  return true;
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> v;
  v.reserve(p.size());
  for (int x : p.values()) v.push_back(n + 1 - x);
  return Permutation(std::move(v));
}

Permutation reduced(std::span<const int> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> out(values.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && values[order[rank]] == values[order[rank - 1]])
      throw std::invalid_argument("reduced: repeated entry " + std::to_string(values[order[rank]]));
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

bool in_class(std::span<const int> values, KingClass c) {
  const int n = static_cast<int>(values.size());
  if (n == 0) return true;
  if (n == 1) return c == KingClass::All;
  const int first = values.front();
  const int last = values.back();
  switch (c) {
    case KingClass::All: return true;
    case KingClass::S: return first != 1;
    case KingClass::L: return last != n;
    case KingClass::SL: return first != 1 && last != n;
    case KingClass::LS: return first != n && last != 1;
  }
  return false;
}

std::vector<Permutation> enumerate_kings(int n, KingClass c) {
  std::vector<Permutation> out;
  for_each_king(n, c, [&](std::span<const int> v) { out.emplace_back(std::vector<int>(v.begin(), v.end())); });
  return out;
}

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Recurrence: return "rec";
    case CountMethod::Explicit: return "explicit";
    case CountMethod::GeneratingFunction: return "gf";
    case CountMethod::Enumerate: return "enum";
  }
  return "?";
}

std::optional<CountMethod> parse_count_method(std::string_view text) {
  for (CountMethod m : {CountMethod::Recurrence, CountMethod::Explicit, CountMethod::GeneratingFunction,
                        CountMethod::Enumerate})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

namespace {

Integer count_by_recurrence(int n) {
  std::vector<Integer> a = {1, 1, 0, 0};
  for (int m = 4; m <= n; ++m) {
    a.push_back((m + 1) * a[m - 1] - (m - 2) * a[m - 2] - (m - 5) * a[m - 3] + (m - 3) * a[m - 4]);
  }
  return a[n];
}

Integer binomial(long top, long bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return r;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Inclusion-exclusion over maximal runs of adjacent consecutive values.
Integer count_by_explicit_sum(int n) {
  static const int small[] = {1, 1, 0, 0};
  if (n < 4) return small[n];
  Integer total = factorial(n);
  for (int k = 1; k <= n; ++k) {
    Integer inner = 0;
    for (int i = 1; i <= k; ++i) {
      Integer pow2;
      mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(i));
      inner += binomial(k - 1, i - 1) * binomial(n - k, i) * pow2 * factorial(n - k);
    }
    if (k % 2 == 1)
      total -= inner;
    else
      total += inner;
  }
  return total;
}

}  // namespace

Integer count_class(int n, KingClass c, int jobs) {
  if (n < 0 || n > kMaxEnumerationLength) throw std::invalid_argument("count_class: length out of range");
  if (n <= 1) return in_class(std::vector<int>(n, 1), c) ? 1 : 0;
  auto partial = detail::run_indexed<std::uint64_t>(n, jobs, [&](int i) {
    std::uint64_t count = 0;
    for_each_king_starting_with(n, c, i + 1, [&](std::span<const int>) { ++count; });
    return count;
  });
  Integer total = 0;
  for (auto p : partial) total += Integer(static_cast<unsigned long>(p));
  return total;
}

Integer count_kings(int n, CountMethod method, int jobs) {
  if (n < 0) throw std::invalid_argument("count_kings: negative length");
  switch (method) {
    case CountMethod::Recurrence: return count_by_recurrence(n);
    case CountMethod::Explicit: return count_by_explicit_sum(n);
    case CountMethod::GeneratingFunction: return build_base(BaseSeries::A, n).coeff(n).constant_term();
    case CountMethod::Enumerate: return count_class(n, KingClass::All, jobs);
  }
  throw std::invalid_argument("count_kings: unknown method");
}

Integer count_kings(int n, KingClass c, CountMethod method, int jobs) {
  if (c == KingClass::All) return count_kings(n, method, jobs);
  if (method == CountMethod::Enumerate) return count_class(n, c, jobs);
  if (n < 0) throw std::invalid_argument("count_kings: negative length");
  const bool both_ends = c == KingClass::SL || c == KingClass::LS;
  // Coefficient of t^n in A/(1+t) is sum (-1)^{n-k} A_k; in A/(1+t)^2 it is sum (-1)^{n-k} (n-k+1) A_k.
  Integer total = both_ends && n >= 1 ? Integer(n % 2 == 1 ? 1 : -1) : Integer(0);
  for (int k = 0; k <= n; ++k) {
    Integer term = count_kings(k, method, jobs);
    if (both_ends) term *= n - k + 1;
    if ((n - k) % 2 == 1) total -= term;
    else total += term;
  }
  return total;
}

int default_jobs() {
  if (const char* env = std::getenv("KINGMESH_JOBS")) {
    int v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace kingmesh
