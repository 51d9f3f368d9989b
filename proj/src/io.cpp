#include "modlat/io.hpp"

#include <map>
#include <sstream>

namespace modlat {

namespace {

json stamp(std::string_view kind) {
  return json{{"kind", kind}, {"format_version", kFormatVersion}};
}

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaError, what); }

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) schema(std::string("missing field '") + name + "'");
  return *it;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Integer integer_from_json(const json& v, std::string_view name) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                  : Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    Integer out;
    const auto& s = v.get_ref<const std::string&>();
    if (!s.empty() && s.find_first_not_of("-0123456789") == s.npos && out.set_str(s, 10) == 0) return out;
  }
  schema("field '" + std::string(name) + "' must hold integers");
}

json integers_to_json(std::span<const Integer> v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(integer_to_json(x));
  return arr;
}

json poset_json(const Poset& p, const json& metadata) {
  json doc = stamp("poset");
  doc["elements"] = p.labels();
  json covers = json::array();
  for (const auto& [a, b] : p.cover_labels()) covers.push_back({a, b});
  doc["covers"] = std::move(covers);
  if (!metadata.empty()) doc["metadata"] = metadata;
  return doc;
}

json h_vector_json(const HVector& h) {
  json doc = stamp("h_vector");
  doc["h"] = integers_to_json(h.entries);
  doc["s"] = h.s ? json(*h.s) : json(nullptr);
  return doc;
}

json h_vector_json(const TruncatedH& h) {
  json doc = stamp("h_vector");
  doc["h"] = integers_to_json(h.entries);
  doc["s"] = h.s;
  return doc;
}

json f_vector_json(const FVector& f) {
  json doc = stamp("f_vector");
  doc["f"] = integers_to_json(f.counts);
  doc["d"] = f.d();
  return doc;
}

json stanley_json(const StanleyReport& r, std::span<const Integer> h) {
  json doc = stamp("stanley_report");
  doc["passed"] = r.passed;
  doc["s"] = r.s;
  doc["h"] = integers_to_json(h);
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"j", v.j}, {"lhs", integer_to_json(v.lhs)}, {"rhs", integer_to_json(v.rhs)}});
  }
  doc["violations"] = std::move(violations);
  doc["nonpositive_entries"] = r.nonpositive_entries;
  return doc;
}

json duplication_json(const DuplicationCertificate& c) {
  json doc = stamp("duplication_certificate");
  doc["site"] = c.site;
  doc["new_label"] = c.new_label;
  doc["was_join_irreducible"] = c.was_join_irreducible;
  doc["was_meet_irreducible"] = c.was_meet_irreducible;
  doc["maximal_chains_through_site"] = integer_to_json(c.maximal_chains_through_site);
  return doc;
}

json certificate_json(const CounterexampleCertificate& c) {
  json doc = stamp("counterexample_certificate");
  doc["s"] = c.s;
  doc["t"] = c.t;
  doc["n"] = c.n;
  doc["site"] = c.site;
  doc["site_maximal_chains"] = integer_to_json(c.site_maximal_chains);
  doc["base_h"] = integers_to_json(c.base_h);
  doc["final_h"] = integers_to_json(c.final_h);
  doc["violated_j"] = c.violated_j;
  doc["lhs"] = integer_to_json(c.lhs);
  doc["rhs"] = integer_to_json(c.rhs);
  doc["modularity_witnessed"] = c.modularity_witnessed;
  doc["previous_passed"] = c.previous_passed;
  doc["closed_form_n"] = c.closed_form_n;
  doc["element_count"] = c.element_count;
  return doc;
}

std::string render(const json& doc) { return doc.dump(); }

std::string to_json(const Poset& p) { return render(poset_json(p)); }
std::string to_json(const HVector& h) { return render(h_vector_json(h)); }
std::string to_json(const TruncatedH& h) { return render(h_vector_json(h)); }
std::string to_json(const StanleyReport& r, std::span<const Integer> h) { return render(stanley_json(r, h)); }
std::string to_json(const CounterexampleCertificate& c) { return render(certificate_json(c)); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + e.what());
  }
}

PosetDocument poset_document_from_json(const json& doc) {
  if (!doc.is_object()) schema("document must be an object");
  if (auto it = doc.find("kind"); it != doc.end() && *it != "poset") {
    schema("expected kind 'poset', got " + it->dump());
  }
  if (auto it = doc.find("format_version"); it != doc.end() && *it != kFormatVersion) {
    schema("unsupported format_version " + it->dump());
  }
  const json& elements = field(doc, "elements");
  const json& covers = field(doc, "covers");
  if (!elements.is_array()) schema("field 'elements' must be an array");
  if (!covers.is_array()) schema("field 'covers' must be an array");

  std::vector<Label> labels;
  for (const auto& e : elements) {
    if (!e.is_string()) schema("field 'elements' must hold strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<LabelPair> pairs;
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
      schema("field 'covers' must hold [string, string] pairs");
    }
    pairs.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  PosetDocument out{Poset::from_covers(std::move(labels), pairs)};
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) schema("field 'metadata' must be an object");
    out.metadata = *it;
  }
  return out;
}

Poset from_json(std::string_view text) { return poset_document_from_json(parse_json(text)).poset; }

CounterexampleCertificate certificate_from_json(const json& doc) {
  if (!doc.is_object() || doc.value("kind", "") != "counterexample_certificate") {
    schema("expected kind 'counterexample_certificate'");
  }
  auto ints = [&](const char* name) {
    std::vector<Integer> out;
    const json& arr = field(doc, name);
    if (!arr.is_array()) schema(std::string("field '") + name + "' must be an array");
    for (const auto& v : arr) out.push_back(integer_from_json(v, name));
    return out;
  };
  auto count = [&](const char* name) {
    const json& v = field(doc, name);
    if (!v.is_number_unsigned()) schema(std::string("field '") + name + "' must be a nonnegative integer");
    return v.get<std::size_t>();
  };
  auto flag = [&](const char* name) {
    const json& v = field(doc, name);
    if (!v.is_boolean()) schema(std::string("field '") + name + "' must be a boolean");
    return v.get<bool>();
  };
  CounterexampleCertificate c;
  c.s = count("s");
  c.t = count("t");
  c.n = count("n");
  if (!field(doc, "site").is_string()) schema("field 'site' must be a string");
  c.site = doc["site"].get<std::string>();
  c.site_maximal_chains = integer_from_json(field(doc, "site_maximal_chains"), "site_maximal_chains");
  c.base_h = ints("base_h");
  c.final_h = ints("final_h");
  c.violated_j = count("violated_j");
  c.lhs = integer_from_json(field(doc, "lhs"), "lhs");
  c.rhs = integer_from_json(field(doc, "rhs"), "rhs");
  c.modularity_witnessed = flag("modularity_witnessed");
  c.previous_passed = flag("previous_passed");
  c.closed_form_n = count("closed_form_n");
  c.element_count = count("element_count");
  return c;
}

std::string to_dot(const Poset& p) {
  const auto h = heights(p);
  std::map<std::size_t, std::vector<Index>> ranks;
  for (Index i = 0; i < p.size(); ++i) ranks[h[i]].push_back(i);

  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (const auto& [rank, members] : ranks) {
    out << "  { rank=same;";
    for (Index i : members) out << ' ' << quoted(p.label(i)) << ';';
    out << " }\n";
  }
  for (auto [a, b] : p.covers()) out << "  " << quoted(p.label(a)) << " -> " << quoted(p.label(b)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace modlat
