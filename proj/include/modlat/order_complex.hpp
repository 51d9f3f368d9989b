#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "modlat/polynomial.hpp"
#include "modlat/poset.hpp"

namespace modlat {

/// f_i = number of chains with exactly i elements; f_0 = 1 counts the empty
/// chain and d = counts.size() - 1 is the cardinality of a largest chain.
struct FVector {
  std::vector<Integer> counts;

  std::size_t d() const noexcept { return counts.size() - 1; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// (h_0, ..., h_d) of an order complex. `s` is the index of the last nonzero
/// entry and is empty when every entry is zero.
struct HVector {
  std::vector<Integer> entries;
  std::optional<std::size_t> s;

  static HVector from_entries(std::vector<Integer> entries);
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// Prefix (h_0, ..., h_s) of an h-vector with h_s != 0.
struct TruncatedH {
  std::vector<Integer> entries;
  std::size_t s = 0;

  friend bool operator==(const TruncatedH&, const TruncatedH&) = default;
};

FVector f_vector(const Poset& p, std::size_t bound = kDefaultChainBound);

/// Counts of chains through x by cardinality (index 0 is always zero).
std::vector<Integer> chains_through(const Poset& p, Index x, std::size_t bound = kDefaultChainBound);

/// Calls `visit` once per chain (including the empty one), bottom-up, in
/// lexicographic order of index sequences along the linear extension.
void for_each_chain(const Poset& p, const std::function<void(const Chain&)>& visit,
                    std::size_t bound = kDefaultChainBound);

/// Sum f_i (x-1)^(d-i) expanded as sum h_i x^(d-i).
std::vector<Integer> h_from_f(const FVector& f);
/// Inverse transform: sum h_i (x+1)^(d-i) = sum f_i x^(d-i).
FVector f_from_h(const std::vector<Integer>& h);

/// The polynomial sum f_i (x-1)^(d-i).
IntPoly h_polynomial(const FVector& f);

HVector h_vector(const Poset& p, std::size_t bound = kDefaultChainBound);

/// Throws AllZero when no entry is nonzero.
TruncatedH truncate(const HVector& h);

/// Number of multichains g_1 <= ... <= g_n of length n; H(0) = 1.
Integer hilbert_function(const Poset& p, std::size_t n);

/// H(0), ..., H(N).
std::vector<Integer> hilbert_series(const Poset& p, std::size_t max_degree);

/// First N+1 coefficients of (sum_{n<=N} H(n) t^n) (1 - t)^d.
std::vector<Integer> hilbert_numerator(const Poset& p, std::size_t max_degree,
                                       std::size_t bound = kDefaultChainBound);

/// True iff hilbert_numerator agrees with (h_0, ..., h_d, 0, ...) on N+1 terms.
bool hilbert_series_check(const Poset& p, std::size_t max_degree,
                          std::size_t bound = kDefaultChainBound);

}  // namespace modlat
