#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "modlat/constructions.hpp"

namespace modlat {

using json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

/// A poset plus the free-form "metadata" object carried alongside it.
struct PosetDocument {
  Poset poset;
  json metadata = json::object();
};

/// Integers that fit a signed long become JSON numbers; larger ones become
/// decimal strings. Parsing accepts both.
json integer_to_json(const Integer& v);
Integer integer_from_json(const json& v, std::string_view field);
json integers_to_json(std::span<const Integer> v);

json poset_json(const Poset& p, const json& metadata = json::object());
json h_vector_json(const HVector& h);
json h_vector_json(const TruncatedH& h);
json f_vector_json(const FVector& f);
json stanley_json(const StanleyReport& r, std::span<const Integer> h);
json duplication_json(const DuplicationCertificate& c);
json certificate_json(const CounterexampleCertificate& c);

/// Compact rendering with sorted keys.
std::string render(const json& doc);

std::string to_json(const Poset& p);
std::string to_json(const HVector& h);
std::string to_json(const TruncatedH& h);
std::string to_json(const StanleyReport& r, std::span<const Integer> h);
std::string to_json(const CounterexampleCertificate& c);

/// Parses text, reporting syntax errors as ParseError with line and column.
json parse_json(std::string_view text);

/// Accepts documents of kind "poset" or without a "kind" field.
PosetDocument poset_document_from_json(const json& doc);
Poset from_json(std::string_view text);

CounterexampleCertificate certificate_from_json(const json& doc);

/// Hasse diagram in Graphviz DOT: one edge per cover, lower -> upper, with
/// same-rank groups by height.
std::string to_dot(const Poset& p);

}  // namespace modlat
