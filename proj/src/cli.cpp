#include "modlat/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modlat/io.hpp"
#include "modlat/random.hpp"
#include "modlat/selftest.hpp"

namespace modlat {

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t flag_value) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv("SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, std::string("SEED is not an integer: '") + env + "'");
    }
  }
  return 1;
}

json labels_of(const Poset& p, std::span<const Index> idx) {
  json out = json::array();
  for (Index i : idx) out.push_back(p.label(i));
  return out;
}

struct Options {
  std::uint64_t m = 0;
  std::size_t s = 0, t = 0;
  std::uint64_t seed = 1;
  std::size_t max_elements = 8;
  bool pure = false, lattice = false, modular = false;

  std::string file = "-";
  bool check_modular = false, check_distributive = false, check_lattice = false, check_pure = false;
  bool selftest = false;

  std::string h_list;
  std::string at;
  std::size_t times = 1;
  bool lattice_dup = false;

  std::size_t max_n = 1000;
  bool experimental = false;
  std::string site;
  bool dot = false;
};

int cmd_check(const Options& o, std::uint64_t seed, std::istream& in, std::ostream& out) {
  if (o.selftest) {
    json doc{{"kind", "selftest"}, {"format_version", kFormatVersion}, {"seed", seed}};
    bool ok = true;
    json suites = json::array();
    for (const auto& r : run_selftest(seed)) {
      ok = ok && r.passed();
      suites.push_back({{"name", r.name},
                        {"instances", r.instances},
                        {"cases", r.cases},
                        {"failures", r.failures},
                        {"first_failure", r.first_failure}});
    }
    doc["suites"] = std::move(suites);
    doc["passed"] = ok;
    out << render(doc) << '\n';
    return ok ? kOk : kPropertyFails;
  }
  if (!(o.check_modular || o.check_distributive || o.check_lattice || o.check_pure)) {
    throw CLI::ValidationError("check", "give at least one of --modular --distributive --lattice --pure --selftest");
  }
  const Poset p = from_json(slurp(o.file, in));
  json doc{{"kind", "check"}, {"format_version", kFormatVersion}};
  bool ok = true;
  if (o.check_pure) {
    doc["pure"] = is_pure(p);
    ok = ok && is_pure(p);
  }
  std::optional<LatticeView> l;
  std::string why_not;
  try {
    l = as_lattice(p);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotALattice) throw;
    why_not = e.what();
  }
  if (o.check_lattice || ((o.check_modular || o.check_distributive) && !l)) {
    doc["lattice"] = l.has_value();
    if (!l) doc["lattice_failure"] = why_not;
    ok = ok && l.has_value();
  }
  if (l && o.check_modular) {
    const auto identity = is_modular_by_identity(*l);
    const auto pentagon = is_modular_by_pentagon(*l);
    doc["modular"] = identity.holds && pentagon.holds;
    doc["methods_agree"] = identity.holds == pentagon.holds;
    doc["identity_witness"] = identity.witness ? labels_of(p, *identity.witness) : json(nullptr);
    doc["pentagon_witness"] = pentagon.witness ? labels_of(p, *pentagon.witness) : json(nullptr);
    ok = ok && identity.holds && pentagon.holds;
  }
  if (l && o.check_distributive) {
    const auto d = is_distributive(*l);
    doc["distributive"] = d.holds;
    doc["distributive_witness"] = d.witness ? labels_of(p, *d.witness) : json(nullptr);
    ok = ok && d.holds;
  }
  out << render(doc) << '\n';
  return ok ? kOk : kPropertyFails;
}

int cmd_hvec(const Options& o, std::istream& in, std::ostream& out) {
  const Poset p = from_json(slurp(o.file, in));
  const FVector f = f_vector(p);
  const HVector h = h_vector(p);
  const TruncatedH th = truncate(h);
  json doc{{"kind", "h_vector"}, {"format_version", kFormatVersion}};
  doc["f"] = integers_to_json(f.counts);
  doc["d"] = f.d();
  doc["h_full"] = integers_to_json(h.entries);
  doc["h"] = integers_to_json(th.entries);
  doc["s"] = th.s;
  out << render(doc) << '\n';
  return kOk;
}

std::vector<Integer> h_from_document(const json& doc) {
  const std::string kind = doc.is_object() ? doc.value("kind", "poset") : "";
  if (kind == "poset") return truncate(h_vector(poset_document_from_json(doc).poset)).entries;
  if (kind != "h_vector" && kind != "stanley_report") {
    throw Error(ErrorKind::SchemaError, "expected a poset or h_vector document");
  }
  if (!doc.contains("h") || !doc["h"].is_array()) throw Error(ErrorKind::SchemaError, "missing field 'h'");
  std::vector<Integer> h;
  for (const auto& v : doc["h"]) h.push_back(integer_from_json(v, "h"));
  return truncate(HVector::from_entries(std::move(h))).entries;
}

int cmd_stanley(const Options& o, std::istream& in, std::ostream& out) {
  const std::vector<Integer> h =
      o.h_list.empty() ? h_from_document(parse_json(slurp(o.file, in))) : parse_h_list(o.h_list);
  const StanleyReport r = stanley_check(h);
  out << to_json(r, h) << '\n';
  return r.passed ? kOk : kPropertyFails;
}

int cmd_duplicate(const Options& o, std::istream& in, std::ostream& out) {
  if (o.times == 0) throw CLI::ValidationError("--times", "must be positive");
  PosetDocument doc = poset_document_from_json(parse_json(slurp(o.file, in)));
  json certs = doc.metadata.value("duplications", json::array());
  if (o.lattice_dup) {
    const auto result = iterate_duplication(as_lattice(doc.poset), o.at, o.times);
    for (const auto& c : result.steps) certs.push_back(duplication_json(c));
    doc.poset = result.lattice.poset();
  } else {
    const Index site = doc.poset.index_of(o.at);
    for (std::size_t i = 0; i < o.times; ++i) {
      auto dup = duplicate(doc.poset, site);
      certs.push_back(duplication_json(dup.certificate));
      doc.poset = std::move(dup.poset);
    }
  }
  doc.metadata["duplications"] = std::move(certs);
  out << render(poset_json(doc.poset, doc.metadata)) << '\n';
  return kOk;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
  CounterexampleOptions opts;
  opts.max_n = o.max_n;
  opts.experimental = o.experimental;
  if (!o.site.empty()) opts.site = o.site;
  try {
    out << to_json(find_minimal_n(o.s, o.t, opts)) << '\n';
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SearchExhausted) throw;
    json doc{{"kind", "counterexample_search"}, {"format_version", kFormatVersion},
             {"found", false}, {"max_n", o.max_n}, {"s", o.s}, {"t", o.t}};
    out << render(doc) << '\n';
    return kPropertyFails;
  }
  return kOk;
}

int cmd_export(const Options& o, std::istream& in, std::ostream& out) {
  const Poset p = from_json(slurp(o.file, in));
  if (o.dot) {
    out << to_dot(p);
  } else {
    out << to_json(p) << '\n';
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite posets, modular lattices, order complexes and their h-vectors", "modlat"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a poset");
  gen->require_subcommand(1);
  auto* gen_divisor = gen->add_subcommand("divisor", "Divisor lattice of m");
  gen_divisor->add_option("--m", o.m, "Positive integer")->required();
  auto* gen_grid = gen->add_subcommand("grid", "Divisor lattice of 2^s 3^t");
  gen_grid->add_option("--s", o.s)->required();
  gen_grid->add_option("--t", o.t)->required();
  auto* gen_random = gen->add_subcommand("random", "Seeded random poset or lattice");
  auto* gen_seed = gen_random->add_option("--seed", o.seed, "Overrides the SEED environment variable");
  gen_random->add_option("--max", o.max_elements, "Element bound")->check(CLI::PositiveNumber);
  gen_random->add_flag("--pure", o.pure, "Graded so every maximal chain has the same size");
  gen_random->add_flag("--lattice", o.lattice, "Any lattice");
  gen_random->add_flag("--modular", o.modular, "A modular lattice");

  auto* check = app.add_subcommand("check", "Run predicates on a poset");
  check->add_option("file", o.file, "Poset JSON, '-' for stdin");
  check->add_flag("--modular", o.check_modular, "Identity and pentagon criteria");
  check->add_flag("--distributive", o.check_distributive);
  check->add_flag("--lattice", o.check_lattice);
  check->add_flag("--pure", o.check_pure);
  check->add_flag("--selftest", o.selftest, "Run the seeded property suites");
  auto* check_seed = check->add_option("--seed", o.seed, "Overrides the SEED environment variable");

  auto* hvec = app.add_subcommand("hvec", "f-vector and h-vector of the order complex");
  hvec->add_option("file", o.file, "Poset JSON, '-' for stdin");

  auto* stanley = app.add_subcommand("stanley", "Partial-sum inequalities on an h-vector");
  stanley->add_option("file", o.file, "Poset or h_vector JSON, '-' for stdin");
  stanley->add_option("--h", o.h_list, "Comma separated, e.g. 1,22,18,4");

  auto* dup = app.add_subcommand("duplicate", "Duplicate an element");
  dup->add_option("file", o.file, "Poset JSON, '-' for stdin");
  dup->add_option("--at", o.at, "Label of the site")->required();
  dup->add_option("--times", o.times, "Number of duplications at the same site");
  dup->add_flag("--lattice", o.lattice_dup, "Require a lattice and a join- and meet-irreducible site");

  auto* cex = app.add_subcommand("counterexample", "Search for the first failing duplication count");
  cex->add_option("--s", o.s)->required();
  cex->add_option("--t", o.t)->required();
  cex->add_option("--max-n", o.max_n);
  cex->add_flag("--experimental", o.experimental, "Permit s = 2 (never certified)");
  cex->add_option("--site", o.site, "Duplication site label (default 2^s)");

  auto* exp = app.add_subcommand("export", "Render a poset");
  exp->add_option("file", o.file, "Poset JSON, '-' for stdin");
  exp->add_flag("--dot", o.dot, "Graphviz Hasse diagram");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (gen->parsed()) {
      if (gen_divisor->parsed()) {
        out << to_json(divisor_lattice(o.m).poset()) << '\n';
      } else if (gen_grid->parsed()) {
        out << to_json(grid_lattice(o.s, o.t).poset()) << '\n';
      } else {
        GenConfig cfg{resolve_seed(gen_seed, o.seed), o.max_elements, o.pure, o.lattice};
        Generator g(cfg);
        const Poset p = o.modular ? g.modular_lattice().poset() : g.poset();
        out << render(poset_json(p, json{{"seed", cfg.seed}})) << '\n';
      }
      return kOk;
    }
    if (check->parsed()) return cmd_check(o, resolve_seed(check_seed, o.seed), in, out);
    if (hvec->parsed()) return cmd_hvec(o, in, out);
    if (stanley->parsed()) return cmd_stanley(o, in, out);
    if (dup->parsed()) return cmd_duplicate(o, in, out);
    if (cex->parsed()) return cmd_counterexample(o, out);
    if (exp->parsed()) return cmd_export(o, in, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace modlat
