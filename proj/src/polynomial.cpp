#include "modlat/polynomial.hpp"

#include <algorithm>

namespace modlat {

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(Integer coeff, std::size_t degree) {
  std::vector<Integer> c(degree + 1, 0);
  c[degree] = std::move(coeff);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::binomial_power(const Integer& a, std::size_t k) {
  std::vector<Integer> c(k + 1);
  Integer power = 1;
  // coefficient of x^(k-j) is C(k, j) a^j
  for (std::size_t j = 0; j <= k; ++j) {
    c[k - j] = binomial(k, j) * power;
    power *= a;
  }
  return IntPoly(std::move(c));
}

Integer IntPoly::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::shifted(const Integer& a) const {
  IntPoly out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) out += IntPoly{c_[k]} * binomial_power(a, k);
  }
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Integer mag = abs(c_[k]);
    if (out.empty()) {
      if (c_[k] < 0) out += "-";
    } else {
      out += c_[k] < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace modlat
