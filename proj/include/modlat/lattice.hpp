#pragma once

#include <array>
#include <optional>
#include <vector>

#include "modlat/poset.hpp"

namespace modlat {

/// A poset together with its join and meet tables.
class LatticeView {
 public:
  /// Fills both tables or throws NotALattice naming the first failing pair.
  static LatticeView from_poset(Poset p);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }

  Index join(Index a, Index b) const { return join_[a * size() + b]; }
  Index meet(Index a, Index b) const { return meet_[a * size() + b]; }

  Index bottom() const { return bottom_; }
  Index top() const { return top_; }

 private:
  Poset poset_;
  std::vector<Index> join_;
  std::vector<Index> meet_;
  Index bottom_ = 0;
  Index top_ = 0;
};

/// The pentagon, called D_5 in some sources and N_5 in most lattice theory texts.
Poset pentagon();

LatticeView as_lattice(const Poset& p);

using Triple = std::array<Index, 3>;

/// Result of a lattice predicate; `witness` is set only when it fails.
template <std::size_t N>
struct Verdict {
  bool holds = true;
  std::optional<std::array<Index, N>> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// a <= c implies a v (b ^ c) = (a v b) ^ c, checked over every triple.
/// Witness is the first failing (a, b, c) in input order.
Verdict<3> is_modular_by_identity(const LatticeView& l);

/// No 5-element sublattice (closed under the ambient join and meet) is a
/// pentagon. Witness is the lexicographically least such sorted 5-set.
Verdict<5> is_modular_by_pentagon(const LatticeView& l, std::size_t bound = kDefaultPentagonBound);

Verdict<3> is_distributive(const LatticeView& l);

bool is_join_irreducible(const LatticeView& l, Index x);
bool is_join_irreducible(const LatticeView& l, std::string_view x);
bool is_meet_irreducible(const LatticeView& l, Index x);
bool is_meet_irreducible(const LatticeView& l, std::string_view x);

}  // namespace modlat
