#include "modlat/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace modlat {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::IrreducibilityLost: return "IrreducibilityLost";
    case ErrorKind::EmptyPoset: return "EmptyPoset";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::EmptyVector: return "EmptyVector";
    case ErrorKind::TrailingZero: return "TrailingZero";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ContractViolation: return "ContractViolation";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
  }
  return "Unknown";
}

Poset Poset::from_covers(std::vector<Label> elements, const std::vector<LabelPair>& covers) {
  std::unordered_map<std::string, Index> index;
  for (Index i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], i).second) {
      throw Error(ErrorKind::DuplicateLabel, "label '" + elements[i] + "' appears twice");
    }
  }
  std::vector<std::pair<Index, Index>> edges;
  edges.reserve(covers.size());
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + a + "'");
    if (ib == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + b + "'");
    edges.emplace_back(ia->second, ib->second);
  }
  return from_index_covers(std::move(elements), edges);
}

Poset Poset::from_index_covers(std::vector<Label> elements,
                               const std::vector<std::pair<Index, Index>>& edges) {
  const std::size_t n = elements.size();
  {
    std::set<std::string_view> seen;
    for (const auto& l : elements) {
      if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' appears twice");
    }
  }

  std::vector<std::vector<Index>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw Error(ErrorKind::UnknownLabel, "cover endpoint index out of range");
    if (a == b) throw Error(ErrorKind::CycleDetected, "'" + elements[a] + "' covers itself");
    succ[a].push_back(b);
    ++indegree[b];
  }

  // Kahn's algorithm; ties broken by input index so the extension is stable.
  std::vector<Index> topo;
  topo.reserve(n);
  std::set<Index> ready;
  for (Index i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.insert(i);
  }
  while (!ready.empty()) {
    Index v = *ready.begin();
    ready.erase(ready.begin());
    topo.push_back(v);
    for (Index w : succ[v]) {
      if (--indegree[w] == 0) ready.insert(w);
    }
  }
  if (topo.size() != n) {
    for (Index i = 0; i < n; ++i) {
      if (indegree[i] != 0) {
        throw Error(ErrorKind::CycleDetected, "cycle through '" + elements[i] + "'");
      }
    }
  }

  Poset p;
  p.labels_ = std::move(elements);
  p.less_.assign(n * n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const Index v = *it;
    for (Index w : succ[v]) {
      p.less_[v * n + w] = 1;
      for (Index u = 0; u < n; ++u) {
        if (p.less_[w * n + u]) p.less_[v * n + u] = 1;
      }
    }
  }

  p.lower_.assign(n, {});
  p.upper_.assign(n, {});
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      bool between = false;
      for (Index k = 0; k < n && !between; ++k) {
        between = p.less(a, k) && p.less(k, b);
      }
      if (!between) {
        p.covers_.emplace_back(a, b);
        p.upper_[a].push_back(b);
        p.lower_[b].push_back(a);
      }
    }
  }
  p.topo_ = std::move(topo);
  return p;
}

std::optional<Index> Poset::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

Index Poset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::UnknownLabel, "'" + std::string(label) + "'");
}

std::vector<LabelPair> Poset::cover_labels() const {
  std::vector<LabelPair> out;
  out.reserve(covers_.size());
  for (auto [a, b] : covers_) out.emplace_back(labels_[a], labels_[b]);
  return out;
}

bool operator==(const Poset& a, const Poset& b) {
  return a.labels_ == b.labels_ && a.covers_ == b.covers_;
}

bool same_poset(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::set<Label> la(a.labels().begin(), a.labels().end());
  std::set<Label> lb(b.labels().begin(), b.labels().end());
  if (la != lb) return false;
  auto ca = a.cover_labels();
  auto cb = b.cover_labels();
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

void require_within(const Poset& p, std::size_t bound, std::string_view what) {
  if (p.size() > bound) {
    throw Error(ErrorKind::SizeLimit, std::string(what) + " refuses " + std::to_string(p.size()) +
                                          " elements (bound " + std::to_string(bound) + ")");
  }
}

std::vector<Index> minimal_elements(const Poset& p) {
  std::vector<Index> out;
  for (Index i = 0; i < p.size(); ++i) {
    if (p.lower_covers(i).empty()) out.push_back(i);
  }
  return out;
}

std::vector<Index> maximal_elements(const Poset& p) {
  std::vector<Index> out;
  for (Index i = 0; i < p.size(); ++i) {
    if (p.upper_covers(i).empty()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> heights(const Poset& p) {
  std::vector<std::size_t> h(p.size(), 1);
  for (Index v : p.linear_extension()) {
    for (Index w : p.lower_covers(v)) h[v] = std::max(h[v], h[w] + 1);
  }
  return h;
}

namespace {

void extend_maximal(const Poset& p, Chain& current, std::vector<Chain>& out) {
  const Index top = current.back();
  if (p.upper_covers(top).empty()) {
    out.push_back(current);
    return;
  }
  for (Index next : p.upper_covers(top)) {
    current.push_back(next);
    extend_maximal(p, current, out);
    current.pop_back();
  }
}

// Saturated chains from a minimal element up to x (below) and from x up to a
// maximal element (above); a maximal chain is exactly one of each glued at x.
std::pair<std::vector<Integer>, std::vector<Integer>> saturated_counts(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Integer> below(n, 0), above(n, 0);
  const auto& topo = p.linear_extension();
  for (Index v : topo) {
    if (p.lower_covers(v).empty()) {
      below[v] = 1;
    } else {
      for (Index w : p.lower_covers(v)) below[v] += below[w];
    }
  }
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const Index v = *it;
    if (p.upper_covers(v).empty()) {
      above[v] = 1;
    } else {
      for (Index w : p.upper_covers(v)) above[v] += above[w];
    }
  }
  return {std::move(below), std::move(above)};
}

}  // namespace

std::vector<Chain> maximal_chains(const Poset& p, std::size_t bound) {
  require_within(p, bound, "maximal_chains");
  std::vector<Chain> out;
  if (p.empty()) {
    out.emplace_back();
    return out;
  }
  Chain current;
  for (Index m : minimal_elements(p)) {
    current.assign(1, m);
    extend_maximal(p, current, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer maximal_chain_count(const Poset& p) {
  if (p.empty()) return 1;
  auto [below, above] = saturated_counts(p);
  Integer total = 0;
  for (Index m : minimal_elements(p)) total += above[m];
  return total;
}

Integer maximal_chain_count_through(const Poset& p, Index x) {
  if (x >= p.size()) throw Error(ErrorKind::UnknownLabel, "index " + std::to_string(x));
  auto [below, above] = saturated_counts(p);
  return below[x] * above[x];
}

Integer maximal_chain_count_through(const Poset& p, std::string_view x) {
  return maximal_chain_count_through(p, p.index_of(x));
}

bool is_pure(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return true;
  // Shortest and longest saturated chain from any minimal element to v.
  std::vector<std::size_t> shortest(n, 0), longest(n, 0);
  for (Index v : p.linear_extension()) {
    if (p.lower_covers(v).empty()) {
      shortest[v] = longest[v] = 1;
      continue;
    }
    shortest[v] = n + 1;
    for (Index w : p.lower_covers(v)) {
      shortest[v] = std::min(shortest[v], shortest[w] + 1);
      longest[v] = std::max(longest[v], longest[w] + 1);
    }
  }
  std::size_t lo = n + 1, hi = 0;
  for (Index m : maximal_elements(p)) {
    lo = std::min(lo, shortest[m]);
    hi = std::max(hi, longest[m]);
  }
  return lo == hi;
}

bool has_unique_minimum(const Poset& p) { return minimal_elements(p).size() == 1; }

bool has_unique_maximum(const Poset& p) { return maximal_elements(p).size() == 1; }

std::vector<Label> chain_labels(const Poset& p, const Chain& c) {
  std::vector<Label> out;
  out.reserve(c.size());
  for (Index i : c) out.push_back(p.label(i));
  return out;
}

}  // namespace modlat
