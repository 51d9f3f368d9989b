#include "modlat/selftest.hpp"

#include <algorithm>

#include "modlat/io.hpp"
#include "modlat/random.hpp"

namespace modlat {

namespace {

void fail(SuiteResult& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

std::string ints(const std::vector<Integer>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

}  // namespace

SuiteResult duplication_increment_suite(std::uint64_t seed, std::size_t posets, std::size_t max_elements) {
  SuiteResult r;
  r.name = "duplication_h_vector_increment";
  Generator gen({seed, max_elements, true, false});
  std::size_t attempts = 0;
  while (r.instances < posets && attempts++ < posets * 50) {
    const Poset p = gen.poset();
    if (!is_pure(p)) {
      fail(r, "generator produced an impure poset");
      continue;
    }
    const HVector h = h_vector(p);
    const std::size_t d = h.entries.size() - 1;
    bool any_site = false;
    for (Index x = 0; x < p.size(); ++x) {
      if (maximal_chain_count_through(p, x) != 1) continue;
      any_site = true;
      ++r.cases;
      const Duplicated dup = duplicate(p, x);
      const Index clone = dup.poset.index_of(dup.certificate.new_label);

      std::vector<Integer> expected = h.entries;
      if (expected.size() > 1) expected[1] += 1;
      const HVector got = h_vector(dup.poset);
      if (got.entries != expected) {
        fail(r, "h" + ints(got.entries) + " != " + ints(expected) + " at site " + p.label(x));
      }

      std::vector<Integer> through(d + 1, 0);
      for_each_chain(dup.poset, [&](const Chain& c) {
        if (std::find(c.begin(), c.end(), clone) == c.end()) return;
        if (c.size() >= through.size()) through.resize(c.size() + 1, 0);
        through[c.size()] += 1;
      });
      std::vector<Integer> binomials(d + 1, 0);
      for (std::size_t i = 1; i <= d; ++i) binomials[i] = binomial(d - 1, i - 1);
      if (through != binomials) {
        fail(r, "chains through clone " + ints(through) + " != " + ints(binomials));
      }
    }
    if (any_site) ++r.instances;
  }
  if (r.instances < posets) fail(r, "only " + std::to_string(r.instances) + " posets had a qualifying site");
  return r;
}

SuiteResult modular_duplication_suite(std::uint64_t seed, std::size_t lattices, std::size_t max_elements) {
  SuiteResult r;
  r.name = "modular_duplication";
  Generator modular({seed, max_elements, false, true});
  Generator arbitrary({seed ^ 0x9e3779b97f4a7c15ULL, max_elements, false, true});

  auto agree = [&](const LatticeView& l, const char* what) {
    ++r.cases;
    const bool by_identity = is_modular_by_identity(l).holds;
    const bool by_pentagon = is_modular_by_pentagon(l).holds;
    if (by_identity != by_pentagon) fail(r, std::string("modularity methods disagree on ") + what);
    if (is_distributive(l).holds && !by_identity) fail(r, std::string("distributive but not modular: ") + what);
    return by_identity && by_pentagon;
  };

  for (std::size_t i = 0; i < lattices; ++i) {
    ++r.instances;
    const LatticeView l = modular.modular_lattice();
    if (!agree(l, "generated modular lattice")) fail(r, "generator produced a non-modular lattice");
    for (Index x = 0; x < l.size(); ++x) {
      if (!is_join_irreducible(l, x) || !is_meet_irreducible(l, x)) continue;
      ++r.cases;
      try {
        const DuplicatedLattice dup = duplicate_lattice(l, x);
        if (!agree(dup.lattice, "duplicated lattice")) {
          fail(r, "duplication at " + l.poset().label(x) + " is not modular");
        }
      } catch (const Error& e) {
        fail(r, e.what());
      }
    }
    ++r.instances;
    agree(arbitrary.lattice(), "arbitrary lattice");
  }
  return r;
}

SuiteResult hilbert_suite(std::uint64_t seed, std::size_t posets, std::size_t max_elements,
                          std::size_t max_degree) {
  SuiteResult r;
  r.name = "hilbert_series_identity";
  Generator gen({seed, max_elements, false, false});
  for (std::size_t i = 0; i < posets; ++i) {
    const Poset p = gen.poset();
    ++r.instances;
    ++r.cases;
    if (!hilbert_series_check(p, max_degree)) {
      fail(r, "numerator " + ints(hilbert_numerator(p, max_degree)) + " vs h" + ints(h_vector(p).entries));
    }
  }
  return r;
}

SuiteResult stanley_monotone_suite(std::uint64_t seed, std::size_t vectors) {
  SuiteResult r;
  r.name = "stanley_monotone_failure";
  Generator gen({seed, 1, false, false});
  for (std::size_t i = 0; i < vectors; ++i) {
    std::vector<Integer> h(1 + gen.below(8));
    for (auto& v : h) v = 1 + static_cast<long>(gen.below(30));
    ++r.instances;
    const bool failed = !stanley_check(h).passed;
    const long bump = static_cast<long>(gen.below(50));
    h[std::min<std::size_t>(1, h.size() - 1)] += h.size() > 1 ? bump : 0;
    ++r.cases;
    if (failed && stanley_check(h).passed) fail(r, "raising h_1 repaired " + ints(h));
  }
  return r;
}

SuiteResult roundtrip_suite(std::uint64_t seed, std::size_t posets, std::size_t max_elements) {
  SuiteResult r;
  r.name = "json_and_f_h_roundtrip";
  Generator plain({seed, max_elements, false, false});
  Generator lattices({seed + 1, max_elements, false, true});
  for (std::size_t i = 0; i < posets; ++i) {
    const Poset p = i % 2 == 0 ? plain.poset() : lattices.poset();
    ++r.instances;
    ++r.cases;
    if (!same_poset(from_json(to_json(p)), p)) fail(r, "JSON round trip changed a poset");
    ++r.cases;
    const FVector f = f_vector(p);
    if (f_from_h(h_from_f(f)) != f) fail(r, "f -> h -> f changed " + ints(f.counts));
  }
  return r;
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
  return {duplication_increment_suite(seed), modular_duplication_suite(seed), hilbert_suite(seed), stanley_monotone_suite(seed),
          roundtrip_suite(seed)};
}

}  // namespace modlat
