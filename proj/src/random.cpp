#include "modlat/random.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "modlat/constructions.hpp"

namespace modlat {

namespace {

constexpr int kMaxRetries = 200;

std::vector<Label> index_labels(std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

std::uint64_t Generator::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % n;
}

Poset Generator::general_poset(std::size_t n) {
  // Edges only go forward in a random permutation, so the result is acyclic.
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  for (Index i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);
  const std::uint64_t density = 1 + below(4);  // out of 8
  std::vector<std::pair<Index, Index>> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (coin(density, 8)) edges.emplace_back(perm[i], perm[j]);
    }
  }
  return Poset::from_index_covers(index_labels(n), edges);
}

Poset Generator::pure_poset(std::size_t n) {
  const std::size_t levels = 1 + below(std::min<std::size_t>(n, 5));
  std::vector<std::size_t> level_of(n);
  for (std::size_t i = 0; i < n; ++i) level_of[i] = i < levels ? i : below(levels);
  std::vector<std::vector<Index>> by_level(levels);
  for (Index i = 0; i < n; ++i) by_level[level_of[i]].push_back(i);

  std::set<std::pair<Index, Index>> edges;
  for (std::size_t k = 1; k < levels; ++k) {
    const auto& lower = by_level[k - 1];
    for (Index v : by_level[k]) {
      bool any = false;
      for (Index w : lower) {
        if (coin(1, 3)) {
          edges.emplace(w, v);
          any = true;
        }
      }
      if (!any) edges.emplace(lower[below(lower.size())], v);
    }
  }
  for (std::size_t k = 0; k + 1 < levels; ++k) {
    const auto& upper = by_level[k + 1];
    for (Index w : by_level[k]) {
      const bool has_upper =
          std::any_of(upper.begin(), upper.end(), [&](Index v) { return edges.count({w, v}) > 0; });
      if (!has_upper) edges.emplace(w, upper[below(upper.size())]);
    }
  }
  return Poset::from_index_covers(index_labels(n), {edges.begin(), edges.end()});
}

Poset Generator::poset() {
  if (cfg_.max_elements == 0) throw Error(ErrorKind::InvalidArgument, "max_elements must be positive");
  if (cfg_.lattice_required) {
    if (!cfg_.purity_required) return lattice().poset();
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
      LatticeView l = lattice();
      if (is_pure(l.poset())) return l.poset();
    }
    throw Error(ErrorKind::GenerationFailed, "no pure lattice within " + std::to_string(kMaxRetries) + " attempts");
  }
  const std::size_t n = 1 + below(cfg_.max_elements);
  return cfg_.purity_required ? pure_poset(n) : general_poset(n);
}

LatticeView Generator::lattice() {
  if (cfg_.max_elements == 0) throw Error(ErrorKind::InvalidArgument, "max_elements must be positive");
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const unsigned universe_bits = 1 + static_cast<unsigned>(below(4));
    const std::uint32_t universe = (1u << universe_bits) - 1;
    std::set<std::uint32_t> family{universe};
    const std::size_t seeds = below(cfg_.max_elements);
    for (std::size_t i = 0; i < seeds; ++i) {
      const std::uint32_t fresh = static_cast<std::uint32_t>(below(universe + 1));
      std::vector<std::uint32_t> add{fresh};
      for (auto m : family) add.push_back(m & fresh);
      family.insert(add.begin(), add.end());
    }
    if (family.size() > cfg_.max_elements) continue;

    const std::vector<std::uint32_t> sets(family.begin(), family.end());
    std::vector<std::pair<Index, Index>> edges;
    for (Index i = 0; i < sets.size(); ++i) {
      for (Index j = 0; j < sets.size(); ++j) {
        if (i != j && (sets[i] & sets[j]) == sets[i]) edges.emplace_back(i, j);
      }
    }
    return LatticeView::from_poset(Poset::from_index_covers(index_labels(sets.size()), edges));
  }
  throw Error(ErrorKind::GenerationFailed, "no lattice within " + std::to_string(cfg_.max_elements) +
                                               " elements after " + std::to_string(kMaxRetries) + " tries");
}

Poset Generator::modular_block(std::size_t budget) {
  switch (below(3)) {
    case 0:
      return chain_poset(1 + below(std::min<std::size_t>(budget, 4)));
    case 1:
      if (budget >= 4) return diamond_poset(2 + below(std::min<std::size_t>(budget - 2, 4) - 1));
      break;
    default:
      if (budget >= 4) {
        const std::size_t a = 2 + below(2);
        const std::size_t b = std::max<std::size_t>(2, std::min<std::size_t>(budget / a, 2 + below(2)));
        if (a * b <= budget) return product(chain_poset(a), chain_poset(b));
      }
      break;
  }
  return chain_poset(1 + below(std::min<std::size_t>(budget, 3)));
}

LatticeView Generator::modular_lattice() {
  const std::size_t max = cfg_.max_elements;
  if (max == 0) throw Error(ErrorKind::InvalidArgument, "max_elements must be positive");
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const std::size_t target = 1 + below(max);
    Poset current = relabel_by_index(modular_block(target));
    const std::size_t steps = below(4);
    for (std::size_t i = 0; i < steps && current.size() < target; ++i) {
      const std::size_t room = target - current.size();
      if (coin(1, 3) && current.size() * 2 <= target) {
        const std::size_t factor = std::min<std::size_t>(target / current.size(), 3);
        current = relabel_by_index(product(current, chain_poset(factor)));
      } else {
        Poset block = modular_block(room);
        current = relabel_by_index(coin(1, 2) ? ordinal_sum(current, block) : ordinal_sum(block, current));
      }
    }
    if (current.size() > max) continue;
    LatticeView l = LatticeView::from_poset(std::move(current));
    if (is_modular_by_identity(l)) return l;
  }
  throw Error(ErrorKind::GenerationFailed, "no modular lattice within " + std::to_string(max) + " elements");
}

Poset random_poset(const GenConfig& cfg) { return Generator(cfg).poset(); }
LatticeView random_lattice(const GenConfig& cfg) { return Generator(cfg).lattice(); }
LatticeView random_modular_lattice(const GenConfig& cfg) { return Generator(cfg).modular_lattice(); }

}  // namespace modlat
