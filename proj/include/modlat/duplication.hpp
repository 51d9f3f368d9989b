#pragma once

#include <string>
#include <vector>

#include "modlat/lattice.hpp"

namespace modlat {

struct DuplicationCertificate {
  Label site;
  Label new_label;
  bool was_join_irreducible = false;
  bool was_meet_irreducible = false;
  Integer maximal_chains_through_site = 0;
};

struct Duplicated {
  Poset poset;
  DuplicationCertificate certificate;
};

struct DuplicatedLattice {
  LatticeView lattice;
  DuplicationCertificate certificate;
};

struct IteratedDuplication {
  LatticeView lattice;
  std::vector<DuplicationCertificate> steps;
};

/// `site` followed by the fewest primes (x', x'', ...) not already a label of `p`.
Label fresh_label(const Poset& p, std::string_view site);

/// Adds a clone x' of x comparable to exactly what x is comparable to and
/// incomparable to x itself. No precondition beyond x being an element.
Duplicated duplicate(const Poset& p, Index x);
Duplicated duplicate(const Poset& p, std::string_view x);

/// Lattice-preserving duplication; x must be join- and meet-irreducible.
DuplicatedLattice duplicate_lattice(const LatticeView& l, Index x);
DuplicatedLattice duplicate_lattice(const LatticeView& l, std::string_view x);

/// n successive duplications at the same site, re-verifying irreducibility
/// before each step.
IteratedDuplication iterate_duplication(const LatticeView& l, std::string_view x, std::size_t n);

}  // namespace modlat
