#include <doctest.h>

#include "modlat/constructions.hpp"
#include "modlat/random.hpp"
#include "test_helpers.hpp"

using namespace modlat;
using testing::ints;
using testing::to_ll;

// Frozen values below were produced by the subset-filter oracle in
// oracles.hpp (and cross-checked with an independent script):
//   grid(3,4): f = 1 20 130 420 780 876 590 220 35, h = 1 12 18 4 0 0 0 0 0
//   grid(3,3): h = 1 9 9 1 0 0 0 0
//   pentagon:  f = 1 5 8 5 1, h = 1 1 -1 0 0

TEST_CASE("f-vectors") {
  CHECK(f_vector(testing::three_chain()).counts == ints({1, 3, 3, 1}));
  CHECK(f_vector(testing::two_antichain()).counts == ints({1, 2}));
  CHECK(f_vector(testing::d5()).counts == ints({1, 5, 8, 5, 1}));
  CHECK(f_vector(Poset{}).counts == ints({1}));
  CHECK_THROWS_AS(f_vector(chain_poset(70)), Error);

  const FVector f = f_vector(grid_lattice(3, 4).poset());
  CHECK(f.counts == ints({1, 20, 130, 420, 780, 876, 590, 220, 35}));
  CHECK(f.d() == 8);
}

TEST_CASE("h-vectors") {
  CHECK(h_vector(testing::three_chain()).entries == ints({1, 0, 0, 0}));
  CHECK(h_vector(testing::two_antichain()).entries == ints({1, 1}));
  CHECK(h_vector(testing::d5()).entries == ints({1, 1, -1, 0, 0}));

  const HVector grid = h_vector(grid_lattice(3, 4).poset());
  CHECK(grid.entries == ints({1, 12, 18, 4, 0, 0, 0, 0, 0}));
  CHECK(grid.s == 3u);
  CHECK(h_vector(grid_lattice(3, 3).poset()).entries == ints({1, 9, 9, 1, 0, 0, 0, 0}));
  CHECK(h_vector(grid_lattice(1, 1).poset()).entries == ints({1, 1, 0, 0}));

  CHECK_THROWS_AS(h_vector(Poset{}), Error);
}

TEST_CASE("truncation") {
  const TruncatedH t = truncate(HVector::from_entries(ints({1, 12, 18, 4, 0, 0, 0, 0})));
  CHECK(t.entries == ints({1, 12, 18, 4}));
  CHECK(t.s == 3);
  CHECK(truncate(HVector::from_entries(ints({1}))).s == 0);
  try {
    truncate(HVector::from_entries(ints({0, 0})));
    FAIL("all-zero vector truncated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AllZero);
  }
}

TEST_CASE("the defining polynomial identity holds literally") {
  const FVector f = f_vector(grid_lattice(3, 4).poset());
  const auto h = h_from_f(f);
  IntPoly lhs, rhs;
  for (std::size_t i = 0; i <= f.d(); ++i) {
    lhs += IntPoly{f.counts[i]} * IntPoly::binomial_power(-1, f.d() - i);
    rhs += IntPoly::monomial(h[i], f.d() - i);
  }
  CHECK(lhs == rhs);
  CHECK(h_polynomial(f) == rhs);
}

TEST_CASE("Hilbert function counts multichains") {
  CHECK(hilbert_function(testing::two_antichain(), 2) == 2);
  CHECK(hilbert_function(chain_poset(2), 3) == 4);
  CHECK(hilbert_function(divisor_lattice(12).poset(), 1) == 6);
  CHECK(hilbert_function(testing::d5(), 0) == 1);
  CHECK(hilbert_function(Poset{}, 0) == 1);
  CHECK(hilbert_function(Poset{}, 3) == 0);
}

TEST_CASE("Hilbert series numerator") {
  CHECK(hilbert_series_check(testing::two_antichain(), 5));
  CHECK(hilbert_numerator(testing::two_antichain(), 5) == ints({1, 1, 0, 0, 0, 0}));
  CHECK(hilbert_series_check(chain_poset(2), 5));
  CHECK(hilbert_series_check(grid_lattice(3, 4).poset(), 6));
  CHECK(hilbert_numerator(grid_lattice(3, 4).poset(), 6) == ints({1, 12, 18, 4, 0, 0, 0}));
  CHECK(hilbert_series_check(testing::d5(), 8));
}

TEST_CASE("for_each_chain visits every chain once") {
  const Poset p = testing::d5();
  std::vector<Chain> seen;
  for_each_chain(p, [&](const Chain& c) { seen.push_back(c); });
  CHECK(seen.size() == 20);  // 1 + 5 + 8 + 5 + 1
  CHECK(seen.front().empty());
}

TEST_CASE("random posets against the brute-force oracle") {
  Generator gen({3, 9, false, false});
  Generator pure({4, 10, true, false});
  for (int i = 0; i < 200; ++i) {
    const Poset p = i % 2 ? gen.poset() : pure.poset();
    const auto o = testing::order_of(p);
    const auto f_oracle = oracle::f_vector(o);
    const FVector f = f_vector(p);
    REQUIRE(to_ll(f.counts) == f_oracle);
    CHECK(to_ll(h_vector(p).entries) == oracle::h_from_f(f_oracle));
    CHECK(f_from_h(h_from_f(f)) == f);

    // evaluating the identity at x = 1: sum h_i = f_d
    Integer sum = 0;
    for (const auto& v : h_vector(p).entries) sum += v;
    CHECK(sum == f.counts.back());

    for (std::size_t n = 0; n <= 4; ++n) CHECK(hilbert_function(p, n) == Integer(static_cast<long>(oracle::multichains(o, n))));

    for (Index x = 0; x < p.size(); ++x) {
      std::vector<Integer> through(f.counts.size(), 0);
      for_each_chain(p, [&](const Chain& c) {
        if (std::find(c.begin(), c.end(), x) != c.end()) through[c.size()] += 1;
      });
      while (through.size() > 1 && through.back() == 0) through.pop_back();
      CHECK(chains_through(p, x) == through);
    }
  }
}
