#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sparsetree/graph.hpp"
#include "sparsetree/verify.hpp"

namespace sparsetree {

using Json = nlohmann::ordered_json;

/// Parses the text instance format:
///   graph <n> <m> <k>
///   terminals <id>...
///   edge <u> <v> [<cap>]
/// '#' starts a comment. Failures throw ParseError naming the line.
CapacitatedGraph parse_instance(std::string_view text);
CapacitatedGraph read_instance_file(const std::string& path);

/// Terminals in id order, edges sorted by name; capacity omitted when 1.
std::string serialize_instance(const CapacitatedGraph& graph);

struct Provenance {
  std::string algorithm;
  std::optional<std::uint64_t> seed;
  std::string variant;
};

struct SparsifierFile {
  CapacitatedGraph graph;
  Provenance provenance;
  std::optional<Json> certificate;
};

Json rational_json(const Rational& value);
Rational rational_from_json(const Json& value);

Json quality_report_json(const QualityReport& report);
Json flow_certificate_json(const FlowCertificate& certificate);

std::string write_sparsifier_json(const SparsifierFile& file);
SparsifierFile parse_sparsifier_json(std::string_view text);

/// Accepts either a sparsifier JSON document or a text instance.
SparsifierFile read_sparsifier_file(const std::string& path);

}  // namespace sparsetree
