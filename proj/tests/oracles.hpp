#pragma once

// Brute-force reference computations for the tests. Everything here works on
// an explicit order matrix built by Floyd-Warshall from cover pairs and uses
// none of the library's chain, polynomial or lattice code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

struct Order {
  std::size_t n = 0;
  std::vector<std::vector<bool>> le;  // reflexive

  bool lt(std::size_t a, std::size_t b) const { return a != b && le[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const { return le[a][b] || le[b][a]; }
};

inline Order closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  Order o{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (std::size_t i = 0; i < n; ++i) o.le[i][i] = true;
  for (auto [a, b] : covers) o.le[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (o.le[i][k] && o.le[k][j]) o.le[i][j] = true;
  return o;
}

inline bool is_chain_mask(const Order& o, std::uint64_t mask) {
  for (std::size_t i = 0; i < o.n; ++i) {
    if (!(mask >> i & 1)) continue;
    for (std::size_t j = i + 1; j < o.n; ++j) {
      if ((mask >> j & 1) && !o.comparable(i, j)) return false;
    }
  }
  return true;
}

/// f-vector by testing every subset for total comparability.
inline std::vector<long long> f_vector(const Order& o) {
  std::vector<long long> f(o.n + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << o.n); ++mask) {
    if (is_chain_mask(o, mask)) ++f[static_cast<std::size_t>(__builtin_popcountll(mask))];
  }
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

/// f-vector by extending chains one strictly larger element at a time; for
/// posets too big for the subset scan.
inline std::vector<long long> f_vector_by_extension(const Order& o) {
  std::vector<long long> f(o.n + 1, 0);
  f[0] = 1;
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (top, size)
  for (std::size_t i = 0; i < o.n; ++i) stack.emplace_back(i, 1);
  while (!stack.empty()) {
    auto [top, size] = stack.back();
    stack.pop_back();
    ++f[size];
    for (std::size_t j = 0; j < o.n; ++j) {
      if (o.lt(top, j)) stack.emplace_back(j, size + 1);
    }
  }
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

inline long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// h_k = sum_{i<=k} (-1)^(k-i) C(d-i, k-i) f_i.
inline std::vector<long long> h_from_f(const std::vector<long long>& f) {
  const long long d = static_cast<long long>(f.size()) - 1;
  std::vector<long long> h(f.size(), 0);
  for (long long k = 0; k <= d; ++k) {
    for (long long i = 0; i <= k; ++i) {
      const long long term = choose(d - i, k - i) * f[static_cast<std::size_t>(i)];
      h[static_cast<std::size_t>(k)] += (k - i) % 2 == 0 ? term : -term;
    }
  }
  return h;
}

/// Maximal chains as sorted index masks: chains not strictly inside another chain.
inline std::vector<std::uint64_t> maximal_chain_masks(const Order& o) {
  std::vector<std::uint64_t> chains, out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << o.n); ++mask) {
    if (is_chain_mask(o, mask)) chains.push_back(mask);
  }
  for (auto c : chains) {
    const bool extendable = std::any_of(chains.begin(), chains.end(),
                                        [c](std::uint64_t d) { return d != c && (d & c) == c; });
    if (!extendable) out.push_back(c);
  }
  return out;
}

/// Multichains of length len by enumerating nondecreasing sequences.
inline long long multichains(const Order& o, std::size_t len) {
  if (len == 0) return 1;
  long long count = 0;
  std::vector<std::size_t> seq;
  auto rec = [&](auto&& self) -> void {
    if (seq.size() == len) {
      ++count;
      return;
    }
    // each multiset has exactly one weakly increasing ordering
    for (std::size_t v = 0; v < o.n; ++v) {
      if (!seq.empty() && seq.back() != v && !o.lt(seq.back(), v)) continue;
      seq.push_back(v);
      self(self);
      seq.pop_back();
    }
  };
  rec(rec);
  return count;
}

/// Least upper bound by scanning, or -1.
inline long long join(const Order& o, std::size_t a, std::size_t b) {
  for (std::size_t z = 0; z < o.n; ++z) {
    if (!o.le[a][z] || !o.le[b][z]) continue;
    bool least = true;
    for (std::size_t w = 0; w < o.n && least; ++w) {
      if (o.le[a][w] && o.le[b][w] && !o.le[z][w]) least = false;
    }
    if (least) return static_cast<long long>(z);
  }
  return -1;
}

inline long long meet(const Order& o, std::size_t a, std::size_t b) {
  for (std::size_t z = 0; z < o.n; ++z) {
    if (!o.le[z][a] || !o.le[z][b]) continue;
    bool greatest = true;
    for (std::size_t w = 0; w < o.n && greatest; ++w) {
      if (o.le[w][a] && o.le[w][b] && !o.le[w][z]) greatest = false;
    }
    if (greatest) return static_cast<long long>(z);
  }
  return -1;
}

/// Plain 5-subset scan: closed under join and meet, and the induced order is
/// a pentagon (exactly one element below all, one above all, and among the
/// middle three exactly one comparable pair).
inline bool has_pentagon_sublattice(const Order& o) {
  const std::size_t n = o.n;
  std::array<std::size_t, 5> s{};
  for (s[0] = 0; s[0] < n; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n; ++s[1])
      for (s[2] = s[1] + 1; s[2] < n; ++s[2])
        for (s[3] = s[2] + 1; s[3] < n; ++s[3])
          for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
            bool closed = true;
            for (auto a : s)
              for (auto b : s) {
                const auto j = join(o, a, b), m = meet(o, a, b);
                closed = closed && std::find(s.begin(), s.end(), static_cast<std::size_t>(j)) != s.end() &&
                         std::find(s.begin(), s.end(), static_cast<std::size_t>(m)) != s.end();
              }
            if (!closed) continue;
            std::vector<std::size_t> middle;
            for (auto x : s) {
              bool bottom = true, top = true;
              for (auto y : s) {
                bottom = bottom && o.le[x][y];
                top = top && o.le[y][x];
              }
              if (!bottom && !top) middle.push_back(x);
            }
            if (middle.size() != 3) continue;
            int comparable_pairs = 0;
            for (std::size_t i = 0; i < 3; ++i)
              for (std::size_t j = i + 1; j < 3; ++j)
                if (o.comparable(middle[i], middle[j])) ++comparable_pairs;
            if (comparable_pairs == 1) return true;
          }
  return false;
}

/// Modular identity checked over all triples with scanned joins and meets.
inline bool modular_identity(const Order& o) {
  for (std::size_t a = 0; a < o.n; ++a)
    for (std::size_t c = 0; c < o.n; ++c) {
      if (!o.le[a][c]) continue;
      for (std::size_t b = 0; b < o.n; ++b) {
        const auto bc = static_cast<std::size_t>(meet(o, b, c));
        const auto ab = static_cast<std::size_t>(join(o, a, b));
        if (join(o, a, bc) != meet(o, ab, c)) return false;
      }
    }
  return true;
}

/// Adds `copies` clones of x directly to the order matrix. Each clone sits
/// below and above exactly what x does and is incomparable to x and to the
/// other clones.
inline Order clone_in_order(Order o, std::size_t x, std::size_t copies) {
  const std::size_t original = o.n;
  for (std::size_t k = 0; k < copies; ++k) {
    const std::size_t c = o.n++;
    for (auto& row : o.le) row.push_back(false);
    o.le.emplace_back(o.n, false);
    o.le[c][c] = true;
    for (std::size_t b = 0; b < original; ++b) {
      if (b == x) continue;
      o.le[b][c] = o.lt(b, x);
      o.le[c][b] = o.lt(x, b);
    }
  }
  return o;
}

/// Partial-sum inequalities h_0+..+h_j <= h_s+..+h_{s-j}, j <= s/2, on the
/// vector with trailing zeros removed.
inline bool partial_sums_hold(std::vector<long long> h) {
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  const std::size_t s = h.size() - 1;
  for (std::size_t j = 1; j <= s / 2; ++j) {
    long long lhs = 0, rhs = 0;
    for (std::size_t i = 0; i <= j; ++i) lhs += h[i];
    for (std::size_t i = s - j; i <= s; ++i) rhs += h[i];
    if (lhs > rhs) return false;
  }
  return true;
}

}  // namespace oracle
