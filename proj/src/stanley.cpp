#include "modlat/stanley.hpp"

#include <string>

namespace modlat {

namespace {

void require_truncated(std::span<const Integer> h) {
  if (h.empty()) throw Error(ErrorKind::EmptyVector, "h-vector has no entries");
  if (h.back() == 0) throw Error(ErrorKind::TrailingZero, "last entry is zero; truncate first");
}

}  // namespace

StanleyReport stanley_check(std::span<const Integer> h) {
  require_truncated(h);
  StanleyReport report;
  report.s = h.size() - 1;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] <= 0) report.nonpositive_entries.push_back(i);
  }
  Integer lhs = h[0];
  Integer rhs = h[report.s];
  for (std::size_t j = 1; j <= report.s / 2; ++j) {
    lhs += h[j];
    rhs += h[report.s - j];
    if (lhs > rhs) report.violations.push_back({j, lhs, rhs});
  }
  report.passed = report.violations.empty();
  return report;
}

bool gorenstein_symmetry_check(std::span<const Integer> h) {
  require_truncated(h);
  const std::size_t s = h.size() - 1;
  for (std::size_t i = 0; i <= s; ++i) {
    if (h[i] != h[s - i]) return false;
  }
  return true;
}

std::vector<Integer> parse_h_list(std::string_view text) {
  std::vector<Integer> out;
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty h-vector");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    Integer value;
    // GMP skips embedded whitespace, so screen the characters first.
    const bool digits_only = item.find_first_not_of("0123456789", item[0] == '-' ? 1 : 0) == item.npos;
    if (item.empty() || item == "-" || !digits_only || value.set_str(item, 10) != 0) {
      throw Error(ErrorKind::InvalidArgument, "not an integer: '" + item + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace modlat
