#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "integer.hpp"

namespace kingmesh {

/// Dense polynomial in u over Z. Canonical: no trailing zero coefficients,
/// the zero polynomial has no coefficients at all.
class UPoly {
 public:
  UPoly() = default;
  UPoly(long constant);  // NOLINT(google-explicit-constructor): integers embed into Z[u]
  UPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Integer> coeffs);

  static UPoly u() { return monomial(1, 1); }
  static UPoly monomial(const Integer& c, int power);

  /// Inverse of to_string(): "500+136u+10u^2", "-u", "0". Throws std::invalid_argument.
  static UPoly parse(std::string_view text);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Integer& coeff(int power) const;
  Integer constant_term() const { return c_.empty() ? Integer(0) : c_.front(); }
  std::span<const Integer> coeffs() const { return c_; }

  Integer eval(const Integer& u) const;
  Integer sum_of_coefficients() const;
  bool has_nonnegative_coefficients() const;

  /// Ascending powers, zero terms omitted, "0" for the zero polynomial.
  std::string to_string() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Integer& s);
  /// this += a * b, skipping zero coefficients so sparse operands stay cheap.
  void add_product(const UPoly& a, const UPoly& b);
  /// this -= a * b.
  void sub_product(const UPoly& a, const UPoly& b);
  UPoly shifted(int power) const;  // multiply by u^power

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Raised for order mismatches and non-invertible divisors.
class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Power series in t with UPoly coefficients, truncated after t^order.
class USeries {
 public:
  USeries() : USeries(0) {}
  explicit USeries(int order);
  USeries(int order, std::vector<UPoly> coeffs);  // missing slots are zero, extra ones dropped

  static USeries constant(const UPoly& c, int order);
  static USeries one(int order) { return constant(1, order); }
  /// c * t^power.
  static USeries monomial(const UPoly& c, int power, int order);
  static USeries t(int order) { return monomial(1, 1, order); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const UPoly& coeff(int n) const { return c_.at(n); }
  UPoly& coeff(int n) { return c_.at(n); }
  std::span<const UPoly> coeffs() const { return c_; }

  USeries truncated(int order) const;
  /// Multiply by t^k within the same order.
  USeries shifted_up(int k) const;
  /// Exact division by t^k; the result has order - k. Throws if a low coefficient is nonzero.
  USeries shifted_down(int k) const;

  USeries& operator+=(const USeries& o);
  USeries& operator-=(const USeries& o);

  friend bool operator==(const USeries& a, const USeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<UPoly> c_;
};

USeries ps_add(const USeries& a, const USeries& b);
USeries ps_sub(const USeries& a, const USeries& b);
USeries ps_neg(const USeries& a);
USeries ps_mul(const USeries& a, const USeries& b);
/// Coefficient-wise scaling by a polynomial in u.
USeries ps_scale(const USeries& a, const UPoly& s);
/// Quotient by forward substitution; b's constant term must be +1 or -1.
USeries ps_div(const USeries& a, const USeries& b);
/// t -> u^j t.
USeries ps_subst_ut(const USeries& a, int j);
/// Every coefficient evaluated at u = v.
USeries ps_eval_u(const USeries& a, const Integer& v);

inline USeries operator+(const USeries& a, const USeries& b) { return ps_add(a, b); }
inline USeries operator-(const USeries& a, const USeries& b) { return ps_sub(a, b); }
inline USeries operator-(const USeries& a) { return ps_neg(a); }
inline USeries operator*(const USeries& a, const USeries& b) { return ps_mul(a, b); }
inline USeries operator/(const USeries& a, const USeries& b) { return ps_div(a, b); }
inline USeries operator*(const UPoly& s, const USeries& a) { return ps_scale(a, s); }
inline USeries operator*(const USeries& a, const UPoly& s) { return ps_scale(a, s); }
inline USeries operator+(const USeries& a, const UPoly& c) { return a + USeries::constant(c, a.order()); }
inline USeries operator-(const USeries& a, const UPoly& c) { return a - USeries::constant(c, a.order()); }
inline USeries operator+(const UPoly& c, const USeries& a) { return USeries::constant(c, a.order()) + a; }
inline USeries operator-(const UPoly& c, const USeries& a) { return USeries::constant(c, a.order()) - a; }

/// Index of the first differing coefficient, or -1 when equal up to the common order.
int first_difference(const USeries& a, const USeries& b);

}  // namespace kingmesh
