#pragma once

#include <cstdint>
#include <random>

#include "modlat/lattice.hpp"

namespace modlat {

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t max_elements = 8;
  bool purity_required = false;
  bool lattice_required = false;
};

/// Seeded source of random posets and lattices.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard; bounded draws use rejection on the raw 64-bit output, so a seed
/// reproduces the same objects on every conforming platform. One instance
/// must not be shared between threads.
class Generator {
 public:
  explicit Generator(GenConfig cfg) : cfg_(cfg), engine_(cfg.seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  bool coin(std::uint64_t numerator, std::uint64_t denominator) { return below(denominator) < numerator; }

  /// Honors purity_required (graded, level by level) and lattice_required.
  Poset poset();

  /// Intersection-closed family of subsets ordered by inclusion; any lattice
  /// shape can come out, modular or not.
  LatticeView lattice();

  /// Chains, products of chains and M_k blocks combined by products and
  /// ordinal sums, then verified. Throws GenerationFailed after bounded retries.
  LatticeView modular_lattice();

  const GenConfig& config() const noexcept { return cfg_; }

 private:
  Poset general_poset(std::size_t n);
  Poset pure_poset(std::size_t n);
  Poset modular_block(std::size_t budget);

  GenConfig cfg_;
  std::mt19937_64 engine_;
};

Poset random_poset(const GenConfig& cfg);
LatticeView random_lattice(const GenConfig& cfg);
LatticeView random_modular_lattice(const GenConfig& cfg);

}  // namespace modlat
