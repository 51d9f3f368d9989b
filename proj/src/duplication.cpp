#include "modlat/duplication.hpp"

namespace modlat {

Label fresh_label(const Poset& p, std::string_view site) {
  Label candidate(site);
  do {
    candidate += '\'';
  } while (p.find(candidate));
  return candidate;
}

Duplicated duplicate(const Poset& p, Index x) {
  if (x >= p.size()) throw Error(ErrorKind::UnknownLabel, "index " + std::to_string(x));
  const Index clone = p.size();

  std::vector<Label> labels = p.labels();
  labels.push_back(fresh_label(p, p.label(x)));

  std::vector<std::pair<Index, Index>> covers = p.covers();
  for (Index below : p.lower_covers(x)) covers.emplace_back(below, clone);
  for (Index above : p.upper_covers(x)) covers.emplace_back(clone, above);

  DuplicationCertificate cert;
  cert.site = p.label(x);
  cert.new_label = labels.back();
  cert.was_join_irreducible = p.lower_covers(x).size() == 1;
  cert.was_meet_irreducible = p.upper_covers(x).size() == 1;
  cert.maximal_chains_through_site = maximal_chain_count_through(p, x);

  return {Poset::from_index_covers(std::move(labels), covers), std::move(cert)};
}

Duplicated duplicate(const Poset& p, std::string_view x) { return duplicate(p, p.index_of(x)); }

DuplicatedLattice duplicate_lattice(const LatticeView& l, Index x) {
  const bool join_irr = is_join_irreducible(l, x);
  const bool meet_irr = is_meet_irreducible(l, x);
  if (!join_irr || !meet_irr) {
    std::string which = !join_irr && !meet_irr ? "join- and meet-irreducibility"
                        : !join_irr            ? "join-irreducibility"
                                               : "meet-irreducibility";
    throw Error(ErrorKind::NotIrreducible, "'" + l.poset().label(x) + "' fails " + which);
  }
  auto dup = duplicate(l.poset(), x);
  try {
    return {LatticeView::from_poset(std::move(dup.poset)), std::move(dup.certificate)};
  } catch (const Error& e) {
    throw Error(ErrorKind::ContractViolation,
                "duplication at an irreducible site produced a non-lattice: " + std::string(e.what()));
  }
}

DuplicatedLattice duplicate_lattice(const LatticeView& l, std::string_view x) {
  return duplicate_lattice(l, l.poset().index_of(x));
}

IteratedDuplication iterate_duplication(const LatticeView& l, std::string_view x, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "duplication count must be positive");
  const Index site = l.poset().index_of(x);
  IteratedDuplication out{l, {}};
  out.steps.reserve(n);
  for (std::size_t step = 1; step <= n; ++step) {
    try {
      auto next = duplicate_lattice(out.lattice, site);
      out.lattice = std::move(next.lattice);
      out.steps.push_back(std::move(next.certificate));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotIrreducible) throw;
      throw Error(ErrorKind::NotIrreducible, "at step " + std::to_string(step) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace modlat
