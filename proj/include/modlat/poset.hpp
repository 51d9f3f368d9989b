#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modlat/error.hpp"

namespace modlat {

using Index = std::size_t;
using Label = std::string;
using LabelPair = std::pair<Label, Label>;

/// Strictly increasing sequence of element indices.
using Chain = std::vector<Index>;

/// A finite poset stored as its cover relation plus the materialized order.
///
/// Element indices follow input order. Values are immutable once built, so a
/// Poset can be shared freely between threads.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from a possibly redundant set of cover pairs (a, b),
  /// meaning a < b. Redundant edges are dropped by transitive reduction.
  static Poset from_covers(std::vector<Label> elements, const std::vector<LabelPair>& covers);

  /// Same as from_covers but with endpoints given as indices into `elements`.
  static Poset from_index_covers(std::vector<Label> elements,
                                 const std::vector<std::pair<Index, Index>>& covers);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const Label& label(Index i) const { return labels_.at(i); }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  /// Index of `label`; throws UnknownLabel.
  Index index_of(std::string_view label) const;
  std::optional<Index> find(std::string_view label) const;

  bool leq(Index a, Index b) const { return a == b || less(a, b); }
  bool less(Index a, Index b) const { return less_[a * size() + b] != 0; }
  bool comparable(Index a, Index b) const { return leq(a, b) || leq(b, a); }
  bool leq(std::string_view a, std::string_view b) const { return leq(index_of(a), index_of(b)); }

  /// Cover pairs (lower, upper), sorted lexicographically by index.
  const std::vector<std::pair<Index, Index>>& covers() const noexcept { return covers_; }
  const std::vector<Index>& lower_covers(Index x) const { return lower_.at(x); }
  const std::vector<Index>& upper_covers(Index x) const { return upper_.at(x); }

  /// A linear extension of the order (every element after all its predecessors).
  const std::vector<Index>& linear_extension() const noexcept { return topo_; }

  std::vector<LabelPair> cover_labels() const;

  friend bool operator==(const Poset& a, const Poset& b);

 private:
  std::vector<Label> labels_;
  std::vector<unsigned char> less_;
  std::vector<std::pair<Index, Index>> covers_;
  std::vector<std::vector<Index>> lower_;
  std::vector<std::vector<Index>> upper_;
  std::vector<Index> topo_;
};

/// Equal ground sets and equal cover relations, ignoring element order.
bool same_poset(const Poset& a, const Poset& b);

void require_within(const Poset& p, std::size_t bound, std::string_view what);

std::vector<Index> minimal_elements(const Poset& p);
std::vector<Index> maximal_elements(const Poset& p);

/// Number of elements in a longest chain ending at each element.
std::vector<std::size_t> heights(const Poset& p);

/// All maximal chains in lexicographic order of their index sequences.
/// The empty poset has exactly one maximal chain, the empty one.
std::vector<Chain> maximal_chains(const Poset& p, std::size_t bound = kDefaultChainBound);

Integer maximal_chain_count(const Poset& p);
Integer maximal_chain_count_through(const Poset& p, Index x);
Integer maximal_chain_count_through(const Poset& p, std::string_view x);

/// True iff every maximal chain has the same cardinality.
bool is_pure(const Poset& p);

bool has_unique_minimum(const Poset& p);
bool has_unique_maximum(const Poset& p);

std::vector<Label> chain_labels(const Poset& p, const Chain& c);

}  // namespace modlat
