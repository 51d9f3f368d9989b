#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "modlat/error.hpp"

namespace modlat {

/// Dense univariate polynomial with exact integer coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Integer> coeffs) : c_(coeffs) { trim(); }
  explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly monomial(Integer coeff, std::size_t degree);
  /// (x + a)^k.
  static IntPoly binomial_power(const Integer& a, std::size_t k);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  const std::vector<Integer>& coeffs() const noexcept { return c_; }

  Integer operator()(const Integer& x) const;

  /// p(x + a).
  IntPoly shifted(const Integer& a) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

Integer binomial(std::size_t n, std::size_t k);

}  // namespace modlat
