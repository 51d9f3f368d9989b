#include <doctest.h>

#include <set>

#include "modlat/constructions.hpp"
#include "modlat/random.hpp"
#include "test_helpers.hpp"

using namespace modlat;
using testing::d5;
using testing::three_chain;
using testing::two_antichain;

TEST_CASE("from_covers builds singletons and the pentagon") {
  const Poset one = Poset::from_covers({"a"}, {});
  CHECK(one.size() == 1);
  CHECK(one.leq("a", "a"));
  CHECK(one.covers().empty());

  const Poset p = d5();
  CHECK(p.size() == 5);
  CHECK(p.covers().size() == 5);
}

TEST_CASE("from_covers reports malformed input") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::ContractViolation;
  };
  CHECK(kind_of([] { Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorKind::CycleDetected);
  CHECK(kind_of([] { Poset::from_covers({"a"}, {{"a", "a"}}); }) == ErrorKind::CycleDetected);
  CHECK(kind_of([] { Poset::from_covers({"a"}, {{"a", "z"}}); }) == ErrorKind::UnknownLabel);
  CHECK(kind_of([] { Poset::from_covers({"a", "a"}, {}); }) == ErrorKind::DuplicateLabel);
  CHECK(kind_of([] { three_chain().index_of("q"); }) == ErrorKind::UnknownLabel);
}

TEST_CASE("redundant cover edges are reduced away") {
  const Poset p = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(p == three_chain());
  CHECK(p.leq("a", "c"));
}

TEST_CASE("leq on the pentagon") {
  const Poset p = d5();
  CHECK(p.leq("0", "1"));
  CHECK(p.leq("b", "b"));
  CHECK_FALSE(p.leq("a", "b"));
  CHECK_FALSE(p.leq("b", "a"));
  CHECK(p.leq("b", "1"));
}

TEST_CASE("maximal chains") {
  CHECK(maximal_chains(three_chain()) == std::vector<Chain>{{0, 1, 2}});
  CHECK(maximal_chains(two_antichain()) == std::vector<Chain>{{0}, {1}});

  const Poset p = d5();
  const auto chains = maximal_chains(p);
  REQUIRE(chains.size() == 2);
  CHECK(chain_labels(p, chains[0]) == std::vector<Label>{"0", "a", "1"});
  CHECK(chain_labels(p, chains[1]) == std::vector<Label>{"0", "b", "c", "1"});

  CHECK(maximal_chains(Poset{}) == std::vector<Chain>{{}});
}

TEST_CASE("maximal chains refuse oversized posets") {
  CHECK_THROWS_AS(maximal_chains(chain_poset(10), 5), Error);
}

TEST_CASE("maximal chains through an element") {
  CHECK(maximal_chain_count_through(three_chain(), "b") == 1);
  CHECK(maximal_chain_count_through(d5(), "0") == 2);
  CHECK(maximal_chain_count_through(d5(), "c") == 1);
  const LatticeView grid = grid_lattice(3, 4);
  CHECK(maximal_chain_count_through(grid.poset(), "2^3") == 1);
  CHECK(maximal_chain_count(grid.poset()) == 35);
}

TEST_CASE("purity") {
  CHECK(is_pure(three_chain()));
  CHECK_FALSE(is_pure(d5()));
  CHECK(is_pure(grid_lattice(3, 4).poset()));
  CHECK(is_pure(two_antichain()));
  for (const auto& c : maximal_chains(grid_lattice(3, 4).poset())) CHECK(c.size() == 8);
}

TEST_CASE("unique minimum") {
  CHECK(has_unique_minimum(d5()));
  CHECK_FALSE(has_unique_minimum(two_antichain()));
  CHECK_FALSE(has_unique_minimum(Poset{}));
}

TEST_CASE("random posets agree with brute force") {
  Generator gen({7, 8, false, false});
  for (int i = 0; i < 150; ++i) {
    const Poset p = gen.poset();
    const auto o = testing::order_of(p);

    // the materialized order is the closure and covers are its reduction
    for (Index a = 0; a < p.size(); ++a) {
      for (Index b = 0; b < p.size(); ++b) {
        REQUIRE(p.leq(a, b) == o.le[a][b]);
        bool between = false;
        for (Index k = 0; k < p.size(); ++k) between = between || (o.lt(a, k) && o.lt(k, b));
        const bool is_cover = o.lt(a, b) && !between;
        const bool listed = std::count(p.covers().begin(), p.covers().end(), std::pair{a, b}) == 1;
        REQUIRE(is_cover == listed);
      }
    }
    // rebuilding from covers is the identity
    CHECK(Poset::from_covers(p.labels(), p.cover_labels()) == p);

    // maximal chains equal the brute-force subset filter
    std::set<std::uint64_t> expected;
    for (auto m : oracle::maximal_chain_masks(o)) expected.insert(m);
    std::set<std::uint64_t> got;
    const auto chains = maximal_chains(p);
    for (const auto& c : chains) {
      std::uint64_t m = 0;
      for (Index x : c) m |= std::uint64_t{1} << x;
      got.insert(m);
    }
    CHECK(got == expected);
    CHECK(std::is_sorted(chains.begin(), chains.end()));
    CHECK(chains.size() == got.size());

    for (Index x = 0; x < p.size(); ++x) {
      long through = 0;
      for (const auto& c : chains) through += std::count(c.begin(), c.end(), x);
      CHECK(maximal_chain_count_through(p, x) == through);
    }

    std::set<std::size_t> sizes;
    for (const auto& c : chains) sizes.insert(c.size());
    CHECK(is_pure(p) == (sizes.size() == 1));
  }
}
