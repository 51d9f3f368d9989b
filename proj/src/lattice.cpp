#include "modlat/lattice.hpp"

#include <algorithm>
#include <string>

namespace modlat {

namespace {

constexpr Index kNone = static_cast<Index>(-1);

[[noreturn]] void not_a_lattice(const Poset& p, Index a, Index b, const char* reason) {
  throw Error(ErrorKind::NotALattice,
              "pair ('" + p.label(a) + "', '" + p.label(b) + "'): " + reason);
}

}  // namespace

LatticeView LatticeView::from_poset(Poset p) {
  const std::size_t n = p.size();
  if (n == 0) throw Error(ErrorKind::NotALattice, "the empty poset has no bottom or top");

  LatticeView l;
  l.join_.assign(n * n, kNone);
  l.meet_.assign(n * n, kNone);
  std::vector<Index> bounds;
  for (Index a = 0; a < n; ++a) {
    for (Index b = a; b < n; ++b) {
      bounds.clear();
      for (Index z = 0; z < n; ++z) {
        if (p.leq(a, z) && p.leq(b, z)) bounds.push_back(z);
      }
      if (bounds.empty()) not_a_lattice(p, a, b, "no upper bound");
      Index least = kNone;
      for (Index z : bounds) {
        if (std::all_of(bounds.begin(), bounds.end(), [&](Index w) { return p.leq(z, w); })) {
          least = z;
          break;
        }
      }
      if (least == kNone) not_a_lattice(p, a, b, "no least upper bound");

      bounds.clear();
      for (Index z = 0; z < n; ++z) {
        if (p.leq(z, a) && p.leq(z, b)) bounds.push_back(z);
      }
      if (bounds.empty()) not_a_lattice(p, a, b, "no lower bound");
      Index greatest = kNone;
      for (Index z : bounds) {
        if (std::all_of(bounds.begin(), bounds.end(), [&](Index w) { return p.leq(w, z); })) {
          greatest = z;
          break;
        }
      }
      if (greatest == kNone) not_a_lattice(p, a, b, "no greatest lower bound");

      l.join_[a * n + b] = l.join_[b * n + a] = least;
      l.meet_[a * n + b] = l.meet_[b * n + a] = greatest;
    }
  }
  l.bottom_ = minimal_elements(p).front();
  l.top_ = maximal_elements(p).front();
  l.poset_ = std::move(p);
  return l;
}

LatticeView as_lattice(const Poset& p) { return LatticeView::from_poset(p); }

Poset pentagon() {
  return Poset::from_covers({"0", "a", "b", "c", "1"},
                            {{"0", "a"}, {"a", "1"}, {"0", "b"}, {"b", "c"}, {"c", "1"}});
}

Verdict<3> is_modular_by_identity(const LatticeView& l) {
  const std::size_t n = l.size();
  const Poset& p = l.poset();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (!p.leq(a, c)) continue;
        if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c)) {
          return {false, Triple{a, b, c}};
        }
      }
    }
  }
  return {};
}

// A pentagon sublattice {o, a, b, c, i} has b < c, a incomparable to both,
// a ^ b = a ^ c = o and a v b = a v c = i. Every such (a, b, c) closes to a
// pentagon and every pentagon arises this way, so scanning triples covers all
// 5-subsets that could qualify.
Verdict<5> is_modular_by_pentagon(const LatticeView& l, std::size_t bound) {
  const Poset& p = l.poset();
  require_within(p, bound, "pentagon search");
  const std::size_t n = l.size();
  std::optional<std::array<Index, 5>> best;
  for (Index b = 0; b < n; ++b) {
    for (Index c = 0; c < n; ++c) {
      if (!p.less(b, c)) continue;
      for (Index a = 0; a < n; ++a) {
        if (p.comparable(a, b) || p.comparable(a, c)) continue;
        const Index lo = l.meet(a, b);
        const Index hi = l.join(a, b);
        if (l.meet(a, c) != lo || l.join(a, c) != hi) continue;
        std::array<Index, 5> set{lo, a, b, c, hi};
        std::sort(set.begin(), set.end());
        if (!best || set < *best) best = set;
      }
    }
  }
  if (best) return {false, best};
  return {};
}

Verdict<3> is_distributive(const LatticeView& l) {
  const std::size_t n = l.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          return {false, Triple{a, b, c}};
        }
      }
    }
  }
  return {};
}

bool is_join_irreducible(const LatticeView& l, Index x) {
  if (x >= l.size()) throw Error(ErrorKind::UnknownLabel, "index " + std::to_string(x));
  return l.poset().lower_covers(x).size() == 1;
}

bool is_join_irreducible(const LatticeView& l, std::string_view x) {
  return is_join_irreducible(l, l.poset().index_of(x));
}

bool is_meet_irreducible(const LatticeView& l, Index x) {
  if (x >= l.size()) throw Error(ErrorKind::UnknownLabel, "index " + std::to_string(x));
  return l.poset().upper_covers(x).size() == 1;
}

bool is_meet_irreducible(const LatticeView& l, std::string_view x) {
  return is_meet_irreducible(l, l.poset().index_of(x));
}

}  // namespace modlat
