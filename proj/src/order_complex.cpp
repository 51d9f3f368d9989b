#include "modlat/order_complex.hpp"

#include <algorithm>

namespace modlat {

HVector HVector::from_entries(std::vector<Integer> entries) {
  HVector h{std::move(entries), std::nullopt};
  for (std::size_t i = h.entries.size(); i-- > 0;) {
    if (h.entries[i] != 0) {
      h.s = i;
      break;
    }
  }
  return h;
}

namespace {

// ending[v][k]: chains with k elements whose top is v.
std::vector<std::vector<Integer>> chains_ending_at(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<Integer>> ending(n);
  for (Index v : p.linear_extension()) {
    auto& row = ending[v];
    row.assign(2, 0);
    row[1] = 1;
    for (Index w = 0; w < n; ++w) {
      if (!p.less(w, v)) continue;
      const auto& below = ending[w];
      if (below.size() + 1 > row.size()) row.resize(below.size() + 1, 0);
      for (std::size_t k = 1; k < below.size(); ++k) row[k + 1] += below[k];
    }
  }
  return ending;
}

// starting[v][k]: chains with k elements whose bottom is v.
std::vector<std::vector<Integer>> chains_starting_at(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<Integer>> starting(n);
  const auto& topo = p.linear_extension();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const Index v = *it;
    auto& row = starting[v];
    row.assign(2, 0);
    row[1] = 1;
    for (Index w = 0; w < n; ++w) {
      if (!p.less(v, w)) continue;
      const auto& above = starting[w];
      if (above.size() + 1 > row.size()) row.resize(above.size() + 1, 0);
      for (std::size_t k = 1; k < above.size(); ++k) row[k + 1] += above[k];
    }
  }
  return starting;
}

void extend_chain(const Poset& p, const std::vector<Index>& order, std::size_t from, Chain& current,
                  const std::function<void(const Chain&)>& visit) {
  for (std::size_t pos = from; pos < order.size(); ++pos) {
    const Index v = order[pos];
    if (!current.empty() && !p.less(current.back(), v)) continue;
    current.push_back(v);
    visit(current);
    extend_chain(p, order, pos + 1, current, visit);
    current.pop_back();
  }
}

}  // namespace

FVector f_vector(const Poset& p, std::size_t bound) {
  require_within(p, bound, "f_vector");
  FVector f{{1}};
  for (const auto& row : chains_ending_at(p)) {
    if (row.size() > f.counts.size()) f.counts.resize(row.size(), 0);
    for (std::size_t k = 1; k < row.size(); ++k) f.counts[k] += row[k];
  }
  while (f.counts.size() > 1 && f.counts.back() == 0) f.counts.pop_back();
  return f;
}

std::vector<Integer> chains_through(const Poset& p, Index x, std::size_t bound) {
  require_within(p, bound, "chains_through");
  if (x >= p.size()) throw Error(ErrorKind::UnknownLabel, "index " + std::to_string(x));
  const auto down = chains_ending_at(p)[x];
  const auto up = chains_starting_at(p)[x];
  std::vector<Integer> out(down.size() + up.size() - 2, 0);
  for (std::size_t a = 1; a < down.size(); ++a) {
    for (std::size_t b = 1; b < up.size(); ++b) out[a + b - 1] += down[a] * up[b];
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

void for_each_chain(const Poset& p, const std::function<void(const Chain&)>& visit, std::size_t bound) {
  require_within(p, bound, "for_each_chain");
  Chain current;
  visit(current);
  extend_chain(p, p.linear_extension(), 0, current, visit);
}

IntPoly h_polynomial(const FVector& f) {
  const std::size_t d = f.d();
  // sum f_i y^(d-i), then substitute y = x - 1
  std::vector<Integer> by_y(d + 1);
  for (std::size_t i = 0; i <= d; ++i) by_y[d - i] = f.counts[i];
  return IntPoly(std::move(by_y)).shifted(-1);
}

std::vector<Integer> h_from_f(const FVector& f) {
  const std::size_t d = f.d();
  const IntPoly poly = h_polynomial(f);
  std::vector<Integer> h(d + 1);
  for (std::size_t i = 0; i <= d; ++i) h[i] = poly.coeff(d - i);
  return h;
}

FVector f_from_h(const std::vector<Integer>& h) {
  if (h.empty()) throw Error(ErrorKind::EmptyVector, "h-vector has no entries");
  const std::size_t d = h.size() - 1;
  std::vector<Integer> by_x(d + 1);
  for (std::size_t i = 0; i <= d; ++i) by_x[d - i] = h[i];
  const IntPoly poly = IntPoly(std::move(by_x)).shifted(1);
  FVector f;
  f.counts.resize(d + 1);
  for (std::size_t i = 0; i <= d; ++i) f.counts[i] = poly.coeff(d - i);
  return f;
}

HVector h_vector(const Poset& p, std::size_t bound) {
  if (p.empty()) throw Error(ErrorKind::EmptyPoset, "h_vector needs at least one element");
  return HVector::from_entries(h_from_f(f_vector(p, bound)));
}

TruncatedH truncate(const HVector& h) {
  if (!h.s) throw Error(ErrorKind::AllZero, "h-vector has no nonzero entry");
  return {std::vector<Integer>(h.entries.begin(), h.entries.begin() + *h.s + 1), *h.s};
}

std::vector<Integer> hilbert_series(const Poset& p, std::size_t max_degree) {
  const std::size_t n = p.size();
  std::vector<Integer> series(max_degree + 1, 0);
  series[0] = 1;
  if (max_degree == 0) return series;
  // ending[v]: multichains of the current length whose last entry is v
  std::vector<Integer> ending(n, 1);
  std::vector<Integer> next(n);
  for (std::size_t len = 1; len <= max_degree; ++len) {
    if (len > 1) {
      for (Index v : p.linear_extension()) {
        next[v] = 0;
        for (Index w = 0; w < n; ++w) {
          if (p.leq(w, v)) next[v] += ending[w];
        }
      }
      std::swap(ending, next);
    }
    for (Index v = 0; v < n; ++v) series[len] += ending[v];
  }
  return series;
}

Integer hilbert_function(const Poset& p, std::size_t n) { return hilbert_series(p, n).back(); }

std::vector<Integer> hilbert_numerator(const Poset& p, std::size_t max_degree, std::size_t bound) {
  const std::size_t d = f_vector(p, bound).d();
  const IntPoly series(hilbert_series(p, max_degree));
  const IntPoly denominator = IntPoly::binomial_power(-1, d);  // (x - 1)^d
  IntPoly one_minus = denominator;
  if (d % 2 == 1) one_minus = IntPoly{-1} * denominator;      // (1 - x)^d
  const IntPoly product = series * one_minus;
  std::vector<Integer> out(max_degree + 1);
  for (std::size_t k = 0; k <= max_degree; ++k) out[k] = product.coeff(k);
  return out;
}

bool hilbert_series_check(const Poset& p, std::size_t max_degree, std::size_t bound) {
  const auto numerator = hilbert_numerator(p, max_degree, bound);
  const auto h = h_from_f(f_vector(p, bound));
  for (std::size_t k = 0; k <= max_degree; ++k) {
    const Integer expected = k < h.size() ? h[k] : Integer(0);
    if (numerator[k] != expected) return false;
  }
  return true;
}

}  // namespace modlat
