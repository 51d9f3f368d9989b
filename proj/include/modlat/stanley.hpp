#pragma once

#include <span>
#include <vector>

#include "modlat/error.hpp"

namespace modlat {

struct StanleyViolation {
  std::size_t j = 0;
  Integer lhs;  // h_0 + ... + h_j
  Integer rhs;  // h_s + ... + h_{s-j}

  friend bool operator==(const StanleyViolation&, const StanleyViolation&) = default;
};

struct StanleyReport {
  bool passed = true;
  std::vector<StanleyViolation> violations;
  std::size_t s = 0;
  /// Indices of entries <= 0. Advisory only; they do not fail the check.
  std::vector<std::size_t> nonpositive_entries;
};

/// Partial-sum inequalities h_0 + ... + h_j <= h_s + ... + h_{s-j} for
/// 1 <= j <= floor(s/2) on a truncated h-vector (h_s != 0).
/// Throws EmptyVector or TrailingZero.
StanleyReport stanley_check(std::span<const Integer> h);

/// h_i == h_{s-i} for every i.
bool gorenstein_symmetry_check(std::span<const Integer> h);

/// Parses "1,22,18,4" (no spaces) into integers; throws InvalidArgument.
std::vector<Integer> parse_h_list(std::string_view text);

}  // namespace modlat
