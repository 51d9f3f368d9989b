#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modlat/duplication.hpp"
#include "modlat/order_complex.hpp"
#include "modlat/stanley.hpp"

namespace modlat {

inline constexpr std::size_t kDefaultDivisorBound = 256;

/// Divisors of m ordered by divisibility, labeled by their decimal value and
/// listed in increasing order. Join is lcm and meet is gcd.
LatticeView divisor_lattice(std::uint64_t m, std::size_t bound = kDefaultDivisorBound);

/// "1", "2", "2^a", "3", "3^b", "2·3", "2^a·3^b", ...
Label grid_label(std::size_t a, std::size_t b);

/// The divisor lattice of 2^s 3^t with grid labels, listed a-major.
LatticeView grid_lattice(std::size_t s, std::size_t t, std::size_t bound = kDefaultDivisorBound);

// Building blocks for generators and tests. Labels are plain decimal indices
// unless stated otherwise.
Poset chain_poset(std::size_t k);
Poset antichain_poset(std::size_t k);
/// Bottom, k pairwise incomparable atoms, top (M_k; M_3 is the diamond).
Poset diamond_poset(std::size_t k);
/// Cartesian product order; labels "(a,b)".
Poset product(const Poset& a, const Poset& b);
/// Every element of `lower` below every element of `upper`; labels get
/// "L." / "U." prefixes.
Poset ordinal_sum(const Poset& lower, const Poset& upper);
/// Relabels elements 0..n-1 in input order.
Poset relabel_by_index(const Poset& p);

struct CounterexampleOptions {
  std::size_t max_n = 1000;
  /// Allows s == 2; such runs never produce a certificate.
  bool experimental = false;
  /// Duplication site; defaults to 2^s.
  std::optional<Label> site;
  std::size_t chain_bound = kDefaultChainBound;
};

struct CounterexampleCertificate {
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t n = 0;
  Label site;
  Integer site_maximal_chains = 0;
  std::vector<Integer> base_h;
  std::vector<Integer> final_h;
  std::size_t violated_j = 0;
  Integer lhs = 0;
  Integer rhs = 0;
  bool modularity_witnessed = false;
  bool previous_passed = false;
  std::size_t closed_form_n = 0;
  std::size_t element_count = 0;
};

/// Smallest n >= 1 such that the truncated h-vector of the n-fold duplication
/// of grid_lattice(s, t) at the site violates the partial-sum inequalities.
/// Every h-vector is computed from the chains of the actual lattice.
CounterexampleCertificate find_minimal_n(std::size_t s, std::size_t t,
                                         const CounterexampleOptions& opts = {});

/// min over j of (rhs_j - lhs_j + 1), clamped to >= 1, for inequalities whose
/// right side does not contain h_1. Empty if h_1 growth can never break one.
std::optional<std::size_t> predicted_minimal_n(std::span<const Integer> base_h);

}  // namespace modlat
