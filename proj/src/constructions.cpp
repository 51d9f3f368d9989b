#include "modlat/constructions.hpp"

#include <algorithm>

namespace modlat {

namespace {

std::vector<std::pair<std::uint64_t, std::size_t>> factor(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, std::size_t>> out;
  for (std::uint64_t p = 2; p <= m / p; ++p) {
    std::size_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

}  // namespace

LatticeView divisor_lattice(std::uint64_t m, std::size_t bound) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  const auto primes = factor(m);
  std::size_t count = 1;
  for (auto [p, e] : primes) {
    count *= e + 1;
    if (count > bound) {
      throw Error(ErrorKind::SizeLimit, std::to_string(m) + " has more than " + std::to_string(bound) +
                                            " divisors");
    }
  }
  std::vector<std::uint64_t> divisors{1};
  for (auto [p, e] : primes) {
    const std::size_t before = divisors.size();
    std::uint64_t power = 1;
    for (std::size_t k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < before; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());

  std::vector<Label> labels;
  for (auto d : divisors) labels.push_back(std::to_string(d));
  std::vector<std::pair<Index, Index>> covers;
  for (Index i = 0; i < divisors.size(); ++i) {
    for (auto [p, e] : primes) {
      if ((m / divisors[i]) % p != 0) continue;
      auto it = std::lower_bound(divisors.begin(), divisors.end(), divisors[i] * p);
      covers.emplace_back(i, static_cast<Index>(it - divisors.begin()));
    }
  }
  return LatticeView::from_poset(Poset::from_index_covers(std::move(labels), covers));
}

Label grid_label(std::size_t a, std::size_t b) {
  auto power = [](const char* base, std::size_t e) {
    return e == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(e);
  };
  if (a == 0 && b == 0) return "1";
  if (b == 0) return power("2", a);
  if (a == 0) return power("3", b);
  return power("2", a) + "·" + power("3", b);
}

LatticeView grid_lattice(std::size_t s, std::size_t t, std::size_t bound) {
  if ((s + 1) * (t + 1) > bound) {
    throw Error(ErrorKind::SizeLimit, "grid " + std::to_string(s) + "x" + std::to_string(t) +
                                          " exceeds " + std::to_string(bound) + " elements");
  }
  std::vector<Label> labels;
  std::vector<std::pair<Index, Index>> covers;
  auto at = [t](std::size_t a, std::size_t b) { return a * (t + 1) + b; };
  for (std::size_t a = 0; a <= s; ++a) {
    for (std::size_t b = 0; b <= t; ++b) {
      labels.push_back(grid_label(a, b));
      if (a < s) covers.emplace_back(at(a, b), at(a + 1, b));
      if (b < t) covers.emplace_back(at(a, b), at(a, b + 1));
    }
  }
  return LatticeView::from_poset(Poset::from_index_covers(std::move(labels), covers));
}

Poset chain_poset(std::size_t k) {
  std::vector<Label> labels;
  std::vector<std::pair<Index, Index>> covers;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    if (i) covers.emplace_back(i - 1, i);
  }
  return Poset::from_index_covers(std::move(labels), covers);
}

Poset antichain_poset(std::size_t k) { return Poset::from_index_covers(chain_poset(k).labels(), {}); }

Poset diamond_poset(std::size_t k) {
  std::vector<Label> labels;
  std::vector<std::pair<Index, Index>> covers;
  for (std::size_t i = 0; i < k + 2; ++i) labels.push_back(std::to_string(i));
  for (std::size_t i = 1; i <= k; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, k + 1);
  }
  if (k == 0) covers.emplace_back(0, 1);
  return Poset::from_index_covers(std::move(labels), covers);
}

Poset product(const Poset& a, const Poset& b) {
  const std::size_t nb = b.size();
  std::vector<Label> labels;
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = 0; j < nb; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  }
  std::vector<std::pair<Index, Index>> covers;
  for (auto [x, y] : a.covers()) {
    for (Index j = 0; j < nb; ++j) covers.emplace_back(x * nb + j, y * nb + j);
  }
  for (auto [x, y] : b.covers()) {
    for (Index i = 0; i < a.size(); ++i) covers.emplace_back(i * nb + x, i * nb + y);
  }
  return Poset::from_index_covers(std::move(labels), covers);
}

Poset ordinal_sum(const Poset& lower, const Poset& upper) {
  const std::size_t off = lower.size();
  std::vector<Label> labels;
  for (const auto& l : lower.labels()) labels.push_back("L." + l);
  for (const auto& l : upper.labels()) labels.push_back("U." + l);
  std::vector<std::pair<Index, Index>> covers = lower.covers();
  for (auto [x, y] : upper.covers()) covers.emplace_back(x + off, y + off);
  for (Index top : maximal_elements(lower)) {
    for (Index bottom : minimal_elements(upper)) covers.emplace_back(top, bottom + off);
  }
  return Poset::from_index_covers(std::move(labels), covers);
}

Poset relabel_by_index(const Poset& p) {
  std::vector<Label> labels;
  for (Index i = 0; i < p.size(); ++i) labels.push_back(std::to_string(i));
  return Poset::from_index_covers(std::move(labels), p.covers());
}

std::optional<std::size_t> predicted_minimal_n(std::span<const Integer> base_h) {
  if (base_h.size() < 2) return std::nullopt;
  const std::size_t s = base_h.size() - 1;
  std::optional<std::size_t> best;
  Integer lhs = base_h[0];
  Integer rhs = base_h[s];
  for (std::size_t j = 1; j <= s / 2; ++j) {
    lhs += base_h[j];
    rhs += base_h[s - j];
    if (s - j <= 1) continue;  // h_1 sits on both sides
    Integer gap = rhs - lhs + 1;
    const std::size_t n = gap < 1 ? 1 : gap.get_ui();
    if (!best || n < *best) best = n;
  }
  return best;
}

CounterexampleCertificate find_minimal_n(std::size_t s, std::size_t t, const CounterexampleOptions& opts) {
  const std::size_t min_s = opts.experimental ? 2 : 3;
  if (s < min_s || t < s) {
    throw Error(ErrorKind::InvalidArgument, "need " + std::to_string(min_s) + " <= s <= t, got s=" +
                                                std::to_string(s) + " t=" + std::to_string(t));
  }
  const LatticeView base = grid_lattice(s, t);
  const Label site = opts.site.value_or(grid_label(s, 0));
  const Index x = base.poset().index_of(site);

  CounterexampleCertificate cert;
  cert.s = s;
  cert.t = t;
  cert.site = site;
  cert.site_maximal_chains = maximal_chain_count_through(base.poset(), x);
  if (cert.site_maximal_chains != 1 || !is_pure(base.poset())) {
    throw Error(ErrorKind::ContractViolation,
                "site '" + site + "' must lie on exactly one maximal chain of a pure lattice");
  }
  const TruncatedH base_h = truncate(h_vector(base.poset(), opts.chain_bound));
  cert.base_h = base_h.entries;
  const auto predicted = predicted_minimal_n(cert.base_h);
  if (!predicted) {
    // With s = 2 the only inequality has h_1 on both sides.
    if (opts.experimental) {
      throw Error(ErrorKind::SearchExhausted, "no inequality can fail by growing h_1 when s = " +
                                                  std::to_string(base_h.s));
    }
    throw Error(ErrorKind::ContractViolation, "no inequality can fail by growing h_1");
  }

  bool previous_passed = stanley_check(cert.base_h).passed;
  LatticeView current = base;
  for (std::size_t n = 1; n <= opts.max_n; ++n) {
    try {
      current = duplicate_lattice(current, x).lattice;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotIrreducible) throw;
      throw Error(ErrorKind::IrreducibilityLost, "at step " + std::to_string(n) + ": " + e.what());
    }
    if (maximal_chain_count_through(current.poset(), x) != 1 || !is_pure(current.poset())) {
      throw Error(ErrorKind::ContractViolation, "site left its unique maximal chain at step " +
                                                    std::to_string(n));
    }
    const TruncatedH h = truncate(h_vector(current.poset(), opts.chain_bound));
    std::vector<Integer> expected = cert.base_h;
    expected[1] += n;
    if (h.entries != expected) {
      throw Error(ErrorKind::ContractViolation,
                  "h-vector after " + std::to_string(n) + " duplications is not base + (0,n,0,...)");
    }
    const StanleyReport report = stanley_check(h.entries);
    if (report.passed) {
      previous_passed = true;
      continue;
    }
    if (opts.experimental && s < 3) {
      throw Error(ErrorKind::InvalidArgument, "experimental run found a violation at n=" +
                                                  std::to_string(n) + "; certificates require s >= 3");
    }
    cert.n = n;
    cert.final_h = h.entries;
    cert.violated_j = report.violations.front().j;
    cert.lhs = report.violations.front().lhs;
    cert.rhs = report.violations.front().rhs;
    cert.previous_passed = previous_passed;
    cert.element_count = current.size();
    cert.modularity_witnessed =
        is_modular_by_identity(current).holds && is_modular_by_pentagon(current).holds;
    cert.closed_form_n = predicted.value_or(0);
    if (!cert.modularity_witnessed || !cert.previous_passed || cert.closed_form_n != n) {
      throw Error(ErrorKind::ContractViolation, "certificate for n=" + std::to_string(n) +
                                                    " failed its own cross-checks");
    }
    return cert;
  }
  throw Error(ErrorKind::SearchExhausted,
              "no violation for n <= " + std::to_string(opts.max_n));
}

}  // namespace modlat
