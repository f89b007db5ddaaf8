#include "series.hpp"

#include <algorithm>
#include <cctype>

namespace kingmesh {

namespace {

const Integer& zero_integer() {
  static const Integer z = 0;
  return z;
}

void require_same_order(const USeries& a, const USeries& b, const char* op) {
  if (a.order() != b.order())
    throw SeriesError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()) + ")");
}

}  // namespace

UPoly::UPoly(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

UPoly::UPoly(const Integer& constant) {
  if (constant != 0) c_.push_back(constant);
}

UPoly::UPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Integer& c, int power) {
  if (c == 0) return {};
  if (power < 0) throw std::invalid_argument("UPoly::monomial: negative power");
  UPoly p;
  p.c_.assign(power + 1, 0);
  p.c_[power] = c;
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& UPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size())) return zero_integer();
  return c_[power];
}

Integer UPoly::eval(const Integer& u) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

Integer UPoly::sum_of_coefficients() const {
  Integer acc = 0;
  for (const auto& c : c_) acc += c;
  return acc;
}

bool UPoly::has_nonnegative_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& c) { return c >= 0; });
}

std::string UPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t p = 0; p < c_.size(); ++p) {
    const Integer& c = c_[p];
    if (c == 0) continue;
    std::string term;
    if (p == 0) {
      term = c.get_str();
    } else {
      if (c == -1)
        term = "-";
      else if (c != 1)
        term = c.get_str();
      term += 'u';
      if (p > 1) term += '^' + std::to_string(p);
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

UPoly UPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  UPoly result;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("polynomial '" + s + "': " + what + " at offset " + std::to_string(i));
  };
  auto read_digits = [&]() {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    const std::string digits = read_digits();
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    int power = 0;
    if (i < s.size() && s[i] == 'u') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const std::string exp = read_digits();
        if (exp.empty() || exp.size() > 6) fail("bad exponent");
        power = std::stoi(exp);
      }
    } else if (digits.empty()) {
      fail("expected a term");
    }
    result += monomial(sign * c, power);
  }
  return result;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Integer& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

void UPoly::add_product(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  const std::size_t need = a.c_.size() + b.c_.size() - 1;
  if (c_.size() < need) c_.resize(need, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpz_addmul(c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  trim();
}

void UPoly::sub_product(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  const std::size_t need = a.c_.size() + b.c_.size() - 1;
  if (c_.size() < need) c_.resize(need, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpz_submul(c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  trim();
}

UPoly UPoly::shifted(int power) const {
  if (c_.empty() || power == 0) return *this;
  if (power < 0) throw std::invalid_argument("UPoly::shifted: negative power");
  UPoly p;
  p.c_.assign(power, 0);
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

UPoly operator-(UPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.add_product(a, b);
  return r;
}

// ---------------------------------------------------------------------------

USeries::USeries(int order) {
  if (order < 0) throw SeriesError("negative truncation order");
  c_.resize(order + 1);
}

USeries::USeries(int order, std::vector<UPoly> coeffs) : c_(std::move(coeffs)) {
  if (order < 0) throw SeriesError("negative truncation order");
  c_.resize(order + 1);
}

USeries USeries::constant(const UPoly& c, int order) {
  USeries s(order);
  s.c_[0] = c;
  return s;
}

USeries USeries::monomial(const UPoly& c, int power, int order) {
  USeries s(order);
  if (power >= 0 && power <= order) s.c_[power] = c;
  return s;
}

USeries USeries::truncated(int order) const {
  if (order > this->order()) throw SeriesError("truncated: cannot raise the order");
  return USeries(order, std::vector<UPoly>(c_.begin(), c_.begin() + order + 1));
}

USeries USeries::shifted_up(int k) const {
  USeries s(order());
  for (int n = k; n <= order(); ++n) s.c_[n] = c_[n - k];
  return s;
}

USeries USeries::shifted_down(int k) const {
  if (k > order()) throw SeriesError("shifted_down: shift exceeds order");
  for (int n = 0; n < k; ++n)
    if (!c_[n].is_zero()) throw SeriesError("shifted_down: t^" + std::to_string(n) + " coefficient is nonzero");
  return USeries(order() - k, std::vector<UPoly>(c_.begin() + k, c_.end()));
}

USeries& USeries::operator+=(const USeries& o) {
  require_same_order(*this, o, "ps_add");
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
  return *this;
}

USeries& USeries::operator-=(const USeries& o) {
  require_same_order(*this, o, "ps_sub");
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
  return *this;
}

USeries ps_add(const USeries& a, const USeries& b) {
  USeries r = a;
  r += b;
  return r;
}

USeries ps_sub(const USeries& a, const USeries& b) {
  USeries r = a;
  r -= b;
  return r;
}

USeries ps_neg(const USeries& a) {
  USeries r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.coeff(n) = -a.coeff(n);
  return r;
}

USeries ps_mul(const USeries& a, const USeries& b) {
  require_same_order(a, b, "ps_mul");
  const int order = a.order();
  USeries r(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) r.coeff(i + j).add_product(a.coeff(i), b.coeff(j));
  }
  return r;
}

USeries ps_scale(const USeries& a, const UPoly& s) {
  USeries r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.coeff(n) = a.coeff(n) * s;
  return r;
}

USeries ps_div(const USeries& a, const USeries& b) {
  require_same_order(a, b, "ps_div");
  const UPoly& lead = b.coeff(0);
  long unit = 0;
  if (lead == UPoly(1))
    unit = 1;
  else if (lead == UPoly(-1))
    unit = -1;
  else
    throw SeriesError("ps_div: non-unit constant term " + lead.to_string());
  const int order = a.order();
  USeries q(order);
  for (int n = 0; n <= order; ++n) {
    UPoly acc = a.coeff(n);
    for (int k = 1; k <= n; ++k) acc.sub_product(b.coeff(k), q.coeff(n - k));
    if (unit < 0) acc = -acc;
    q.coeff(n) = std::move(acc);
  }
  return q;
}

USeries ps_subst_ut(const USeries& a, int j) {
  if (j < 0) throw SeriesError("ps_subst_ut: negative exponent");
  USeries r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.coeff(n) = a.coeff(n).shifted(j * n);
  return r;
}

USeries ps_eval_u(const USeries& a, const Integer& v) {
  USeries r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.coeff(n) = UPoly(a.coeff(n).eval(v));
  return r;
}

int first_difference(const USeries& a, const USeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int n = 0; n <= order; ++n)
    if (!(a.coeff(n) == b.coeff(n))) return n;
  return -1;
}

}  // namespace kingmesh
