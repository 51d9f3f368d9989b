#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modlat {

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;  // objects generated
  std::size_t cases = 0;      // individual checks run
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0 && cases > 0; }
};

/// Duplication at a site on exactly one maximal chain of a pure poset adds
/// (0,1,0,...) to the h-vector; chains through the clone number C(d-1, i-1).
/// Runs until `posets` posets with at least one such site were checked.
SuiteResult duplication_increment_suite(std::uint64_t seed, std::size_t posets = 200, std::size_t max_elements = 10);

/// Duplication of modular lattices at doubly irreducible sites stays modular,
/// and the identity and pentagon criteria agree on modular and arbitrary
/// random lattices.
SuiteResult modular_duplication_suite(std::uint64_t seed, std::size_t lattices = 100, std::size_t max_elements = 12);

/// Multichain counts times (1 - t)^d reproduce the h-vector.
SuiteResult hilbert_suite(std::uint64_t seed, std::size_t posets = 100, std::size_t max_elements = 8,
                          std::size_t max_degree = 8);

/// Growing h_1 never repairs a failing vector.
SuiteResult stanley_monotone_suite(std::uint64_t seed, std::size_t vectors = 1000);

/// JSON parse(render(P)) == P and f -> h -> f on random posets and lattices.
SuiteResult roundtrip_suite(std::uint64_t seed, std::size_t posets = 200, std::size_t max_elements = 10);

std::vector<SuiteResult> run_selftest(std::uint64_t seed);

}  // namespace modlat
