#include "sparsetree/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "sparsetree/error.hpp"

namespace sparsetree {

namespace {

[[noreturn]] void fail_at(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::size_t parse_count(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) fail_at(line, "expected a count, got '" + token + "'");
  return value;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

CapacitatedGraph parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n, m, k;
  bool have_terminals = false;
  InstanceDescription description;
  std::set<std::string> seen;
  auto note_vertex = [&](const std::string& name) {
    if (seen.insert(name).second) description.vertices.push_back(name);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    const std::string& directive = words[0];
    if (!n) {
      if (directive != "graph") fail_at(line_no, "expected 'graph <n> <m> <k>' header");
      if (words.size() != 4) fail_at(line_no, "header needs exactly three counts");
      n = parse_count(words[1], line_no);
      m = parse_count(words[2], line_no);
      k = parse_count(words[3], line_no);
      continue;
    }
    if (directive == "graph") {
      fail_at(line_no, "duplicate header");
    } else if (directive == "terminals") {
      if (have_terminals) fail_at(line_no, "duplicate terminals line");
      have_terminals = true;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (std::find(description.terminals.begin(), description.terminals.end(), words[i]) != description.terminals.end()) {
          fail_at(line_no, "terminal '" + words[i] + "' listed twice");
        }
        description.terminals.push_back(words[i]);
        note_vertex(words[i]);
      }
    } else if (directive == "edge") {
      if (words.size() != 3 && words.size() != 4) fail_at(line_no, "edge needs two endpoints and an optional capacity");
      Rational capacity(1);
      if (words.size() == 4) {
        try {
          capacity = Rational::parse(words[3]);
        } catch (const Error&) {
          fail_at(line_no, "bad capacity '" + words[3] + "'");
        }
      }
      if (capacity.sign() <= 0) fail_at(line_no, "capacity must be positive");
      if (words[1] == words[2]) fail_at(line_no, "self-loop at '" + words[1] + "'");
      note_vertex(words[1]);
      note_vertex(words[2]);
      description.edges.push_back({words[1], words[2], capacity});
    } else {
      fail_at(line_no, "unknown directive '" + directive + "'");
    }
  }
  if (!n) throw Error(ErrorKind::ParseError, "missing 'graph' header");
  if (!have_terminals) throw Error(ErrorKind::ParseError, "missing 'terminals' line");
  if (description.edges.size() != *m) {
    throw Error(ErrorKind::ParseError, "header declares " + std::to_string(*m) + " edges, found " +
                                           std::to_string(description.edges.size()));
  }
  if (description.terminals.size() != *k) {
    throw Error(ErrorKind::ParseError, "header declares " + std::to_string(*k) + " terminals, found " +
                                           std::to_string(description.terminals.size()));
  }
  if (description.vertices.size() != *n) {
    throw Error(ErrorKind::ParseError, "header declares " + std::to_string(*n) + " vertices, found " +
                                           std::to_string(description.vertices.size()));
  }
  return validate_instance(description);
}

CapacitatedGraph read_instance_file(const std::string& path) { return parse_instance(slurp(path)); }

std::string serialize_instance(const CapacitatedGraph& graph) {
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, Rational> caps;
  for (const Edge& e : graph.edges()) {
    auto key = std::minmax(graph.name(e.u), graph.name(e.v));
    caps[{key.first, key.second}] = e.capacity;
  }
  std::ostringstream out;
  out << "graph " << graph.vertex_count() << ' ' << graph.edge_count() << ' ' << graph.terminal_count() << '\n';
  out << "terminals";
  for (const auto& name : graph.terminal_names()) out << ' ' << name;
  out << '\n';
  for (const auto& [key, capacity] : caps) {
    out << "edge " << key.first << ' ' << key.second;
    if (capacity != Rational(1)) out << ' ' << capacity;
    out << '\n';
  }
  return out.str();
}

Json rational_json(const Rational& value) {
  Json j;
  const auto& num = value.raw().get_num();
  const auto& den = value.raw().get_den();
  if (num.fits_slong_p() && den.fits_slong_p()) {
    j["num"] = static_cast<std::int64_t>(num.get_si());
    j["den"] = static_cast<std::int64_t>(den.get_si());
  } else {
    j["num"] = num.get_str();
    j["den"] = den.get_str();
  }
  j["approx"] = value.to_double();
  return j;
}

Rational rational_from_json(const Json& value) {
  auto part = [](const Json& p) -> std::string {
    if (p.is_number_integer()) return std::to_string(p.get<std::int64_t>());
    if (p.is_string()) return p.get<std::string>();
    throw Error(ErrorKind::ParseError, "rational part must be an integer or string");
  };
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (!value.is_object() || !value.contains("num") || !value.contains("den")) {
    throw Error(ErrorKind::ParseError, "rational needs num and den");
  }
  const Rational den = Rational::parse(part(value["den"]));
  if (den.sign() == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  return Rational::parse(part(value["num"])) / den;
}

Json quality_report_json(const QualityReport& report) {
  Json j;
  j["kind"] = "cut";
  j["cuts"] = report.cuts;
  j["dominates"] = report.dominates() && !report.unbounded;
  j["unbounded"] = report.unbounded;
  j["minRatio"] = rational_json(report.min_ratio);
  j["maxRatio"] = rational_json(report.max_ratio);
  j["witnessMin"] = report.witness_min;
  j["witnessMax"] = report.witness_max;
  if (!report.table.empty()) {
    Json rows = Json::array();
    for (const auto& row : report.table) {
      rows.push_back({{"side", row.side}, {"mincutG", rational_json(row.mincut_g)}, {"cutH", rational_json(row.cut_h)}});
    }
    j["table"] = rows;
  }
  return j;
}

Json flow_certificate_json(const FlowCertificate& certificate) {
  Json j;
  j["kind"] = "flow-tree";
  j["quality"] = rational_json(certificate.quality);
  j["bottleneck"] = {certificate.bottleneck.first, certificate.bottleneck.second};
  Json edges = Json::array();
  for (const auto& e : certificate.per_edge) {
    edges.push_back({{"u", e.u},
                     {"v", e.v},
                     {"load", rational_json(e.load)},
                     {"capacity", rational_json(e.capacity)},
                     {"congestion", rational_json(e.congestion)}});
  }
  j["edges"] = edges;
  return j;
}

std::string write_sparsifier_json(const SparsifierFile& file) {
  const CapacitatedGraph& g = file.graph;
  Json j;
  Json vertices = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.name(v));
  j["vertices"] = vertices;
  j["terminals"] = g.terminal_names();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    Json edge = {{"u", g.name(e.u)}, {"v", g.name(e.v)}};
    edge.update(rational_json(e.capacity));
    edges.push_back(edge);
  }
  j["edges"] = edges;
  Json provenance;
  provenance["algorithm"] = file.provenance.algorithm;
  if (file.provenance.seed) {
    provenance["seed"] = *file.provenance.seed;
  } else {
    provenance["seed"] = nullptr;
  }
  provenance["paperVariant"] = file.provenance.variant;
  j["provenance"] = provenance;
  if (file.certificate) j["certificate"] = *file.certificate;
  return j.dump(2) + "\n";
}

SparsifierFile parse_sparsifier_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    SparsifierFile file;
    InstanceDescription description;
    description.vertices = j.at("vertices").get<std::vector<std::string>>();
    description.terminals = j.at("terminals").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges")) {
      description.edges.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(), rational_from_json(e)});
    }
    file.graph = validate_instance(description);
    if (j.contains("provenance")) {
      const auto& p = j["provenance"];
      file.provenance.algorithm = p.value("algorithm", "");
      if (p.contains("seed") && !p["seed"].is_null()) file.provenance.seed = p["seed"].get<std::uint64_t>();
      file.provenance.variant = p.value("paperVariant", "");
    }
    if (j.contains("certificate")) file.certificate = j["certificate"];
    return file;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

SparsifierFile read_sparsifier_file(const std::string& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_sparsifier_json(text);
  SparsifierFile file;
  file.graph = parse_instance(text);
  return file;
}

}  // namespace sparsetree
