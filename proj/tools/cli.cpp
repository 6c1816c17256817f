#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sparsetree/concurrent_flow.hpp"
#include "sparsetree/error.hpp"
#include "sparsetree/instance_io.hpp"
#include "sparsetree/lower_bound.hpp"
#include "sparsetree/quasi_bipartite.hpp"
#include "sparsetree/random_instances.hpp"
#include "sparsetree/tree_prep.hpp"
#include "sparsetree/verify.hpp"
#include "sparsetree/zero_extension.hpp"

namespace sparsetree::cli {

namespace {

struct VerifyOutcome {
  bool ok = true;
  Json certificate;
  std::string summary;
};

std::string side_string(const std::vector<std::string>& side) {
  std::string s = "{";
  for (std::size_t i = 0; i < side.size(); ++i) s += (i ? "," : "") + side[i];
  return s + "}";
}

Json exact_certificate_json(const ExactVerification& report, std::size_t demands) {
  Json j;
  j["kind"] = "exact";
  j["ok"] = report.ok;
  j["mincutsEqual"] = report.mincuts_equal;
  j["demands"] = demands;
  if (report.witness_demand) {
    j["witnessDemand"] = *report.witness_demand;
    j["lambdaG"] = rational_json(report.lambda_g[*report.witness_demand]);
    j["lambdaH"] = rational_json(report.lambda_h[*report.witness_demand]);
  }
  if (!report.witness_cut.empty()) j["witnessCut"] = report.witness_cut;
  return j;
}

std::vector<Demand> exact_demands(const CapacitatedGraph& g, std::optional<std::uint64_t> seed) {
  auto demands = standard_demands(g);
  if (seed) {
    const auto extra = random_demands(g, 20, *seed);
    demands.insert(demands.end(), extra.begin(), extra.end());
  }
  return demands;
}

VerifyOutcome verify_cut(const CapacitatedGraph& g, const CapacitatedGraph& h) {
  const auto report = enumerate_cut_quality(g, h);
  VerifyOutcome out;
  out.ok = report.dominates() && !report.unbounded;
  out.certificate = quality_report_json(report);
  std::ostringstream s;
  s << "cuts " << report.cuts << "\n";
  s << "min-ratio " << report.min_ratio << " witness " << side_string(report.witness_min) << "\n";
  if (report.unbounded) {
    s << "max-ratio unbounded\n";
  } else {
    s << "max-ratio " << report.max_ratio << " witness " << side_string(report.witness_max) << "\n";
  }
  s << "dominates " << (out.ok ? "yes" : "no") << "\n";
  if (!out.ok) s << "witness-cut " << side_string(report.witness_min) << "\n";
  out.summary = s.str();
  return out;
}

VerifyOutcome verify_flow_tree(const CapacitatedGraph& g, const CapacitatedGraph& h) {
  const auto cert = flow_quality_tree(g, h);
  const auto cuts = enumerate_cut_quality(g, h);
  VerifyOutcome out;
  out.ok = cuts.dominates() && !cuts.unbounded;
  out.certificate = flow_certificate_json(cert);
  std::ostringstream s;
  s << "quality " << cert.quality << "\n";
  s << "bottleneck " << cert.bottleneck.first << ' ' << cert.bottleneck.second << "\n";
  s << "dominates " << (out.ok ? "yes" : "no") << "\n";
  if (!out.ok) s << "witness-cut " << side_string(cuts.witness_min) << "\n";
  out.summary = s.str();
  return out;
}

VerifyOutcome verify_exact_pair(const CapacitatedGraph& g, const CapacitatedGraph& h, std::optional<std::uint64_t> seed) {
  const auto demands = exact_demands(g, seed);
  const auto report = verify_exact(g, h, demands);
  VerifyOutcome out;
  out.ok = report.ok;
  out.certificate = exact_certificate_json(report, demands.size());
  std::ostringstream s;
  s << "demands " << demands.size() << "\n";
  s << "mincuts-equal " << (report.mincuts_equal ? "yes" : "no") << "\n";
  if (report.witness_demand) {
    const std::size_t i = *report.witness_demand;
    s << "witness-demand " << i << " lambda-g " << report.lambda_g[i] << " lambda-h " << report.lambda_h[i] << "\n";
  }
  if (!report.witness_cut.empty()) s << "witness-cut " << side_string(report.witness_cut) << "\n";
  s << "exact " << (report.ok ? "yes" : "no") << "\n";
  out.summary = s.str();
  return out;
}

Rational certificate_quality(const Json& certificate) {
  if (certificate.contains("quality")) return rational_from_json(certificate["quality"]);
  if (certificate.contains("maxRatio")) return rational_from_json(certificate["maxRatio"]);
  return Rational(1);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  file << text;
}

// Leaf-terminal pieces of a tree, each contracted below its root.
struct PreparedTree {
  std::vector<RootedTree> pieces;
  MergePlan plan;
};

PreparedTree prepare_for_sampling(const CapacitatedGraph& g) {
  if (!g.is_tree()) throw Error(ErrorKind::NotATree, "input is not a tree");
  PreparedTree out;
  auto split = prepare_tree(g);
  for (const auto& comp : split.components) {
    out.pieces.push_back(root_tree(contract_degree2_nonterminals(comp, choose_root(comp))));
  }
  out.plan = std::move(split.plan);
  return out;
}

int cmd_sparsify(const std::string& input, const std::string& mode, bool certify, const std::string& out_path,
                 const std::string& format, std::ostream& out) {
  const auto g = read_instance_file(input);
  SparsifierFile file;
  if (mode == "tree") {
    file.graph = expected_sparsifier(g);
    file.provenance = {"expected-zero-extension", std::nullopt, "closed-form"};
    if (certify) file.certificate = verify_flow_tree(g, file.graph).certificate;
  } else if (mode == "qb") {
    file.graph = qb_sparsifier(g);
    file.provenance = {"star-decomposition", std::nullopt, "weighted-star"};
    if (certify) file.certificate = verify_cut(g, file.graph).certificate;
  } else if (mode == "qb-exact") {
    file.graph = exact_qb_sparsifier(g);
    file.provenance = {"type-merging", std::nullopt, "exact"};
    if (certify) file.certificate = verify_exact_pair(g, file.graph, std::nullopt).certificate;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown mode '" + mode + "'");
  }
  emit(format == "text" ? serialize_instance(file.graph) : write_sparsifier_json(file), out_path, out);
  return kExitOk;
}

int cmd_sample(const std::string& input, std::uint64_t seed, std::uint64_t count, const std::string& format,
               std::ostream& out) {
  const auto prepared = prepare_for_sampling(read_instance_file(input));
  Json stream = Json::array();
  std::ostringstream text;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t s = seed + i;
    std::vector<CapacitatedGraph> induced;
    Json pieces = Json::array();
    text << "sample " << i << " seed " << s << "\n";
    for (std::size_t c = 0; c < prepared.pieces.size(); ++c) {
      const auto& tree = prepared.pieces[c];
      const auto& g = tree.graph();
      const auto ext = sample_zero_extension(tree, s + c * 0x9E3779B97F4A7C15ULL);
      Json map = Json::object();
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_terminal(v)) continue;
        map[g.name(v)] = g.name(ext.retraction[v]);
        text << "map " << g.name(v) << ' ' << g.name(ext.retraction[v]) << "\n";
      }
      pieces.push_back(map);
      induced.push_back(ext.induced);
    }
    const auto merged = replay_merge_plan(induced, prepared.plan);
    Json edges = Json::array();
    for (const Edge& e : merged.edges()) {
      text << "edge " << merged.name(e.u) << ' ' << merged.name(e.v) << ' ' << e.capacity << "\n";
      edges.push_back({{"u", merged.name(e.u)}, {"v", merged.name(e.v)}, {"capacity", e.capacity.to_string()}});
    }
    stream.push_back({{"sample", i}, {"seed", s}, {"retraction", pieces}, {"edges", edges}});
  }
  if (format == "json") {
    if (count > 0) out << stream.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_verify(const std::string& g_path, const std::string& h_path, const std::string& kind,
               std::optional<std::string> max_quality, std::optional<std::uint64_t> seed, const std::string& format,
               std::ostream& out) {
  const auto g = read_instance_file(g_path);
  const auto h = read_sparsifier_file(h_path).graph;
  VerifyOutcome outcome;
  if (kind == "cut") {
    outcome = verify_cut(g, h);
  } else if (kind == "flow-tree") {
    outcome = verify_flow_tree(g, h);
  } else if (kind == "exact") {
    outcome = verify_exact_pair(g, h, seed);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown verification kind '" + kind + "'");
  }
  bool ok = outcome.ok;
  std::string threshold_line;
  if (max_quality) {
    const Rational limit = Rational::parse(*max_quality);
    const Rational q = certificate_quality(outcome.certificate);
    const bool within = outcome.certificate.value("unbounded", false) ? false : q <= limit;
    threshold_line = std::string("within-max-quality ") + (within ? "yes" : "no") + "\n";
    ok = ok && within;
  }
  if (format == "json") {
    Json j = outcome.certificate;
    j["verified"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << outcome.summary << threshold_line << "result " << (ok ? "pass" : "fail") << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_lowerbound(std::size_t k, std::ostream& out) {
  if (k < 2 || k > 16) throw Error(ErrorKind::InvalidArgument, "k must lie in [2, 16]");
  const auto bound = star_lower_bound(k);
  out << "k " << k << "\n";
  out << "lower-bound " << bound.value << "\n";
  out << "sparsifier\n" << serialize_instance(bound.sparsifier);
  out << "min-ratio " << bound.report.min_ratio << "\n";
  out << "max-ratio " << bound.report.max_ratio << " witness " << side_string(bound.report.witness_max) << "\n";
  if (k <= 5) {
    const Rational lp = optimal_star_sparsifier_lp(k);
    out << "lp-optimum " << lp << "\n";
    out << "lp-confirms " << (lp == bound.value ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

}  // namespace

std::string bench_csv(const std::string& config, bool timing) {
  struct Job {
    std::string id;
    std::string family;
    std::size_t a = 0, b = 0;
    std::uint64_t seed = 0;
  };
  std::vector<Job> jobs;
  std::istringstream in(config);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string family;
    if (!(words >> family)) continue;
    std::size_t count = 0, a = 0, b = 0;
    std::uint64_t seed = 0;
    std::string extra;
    if (family != "tree" && family != "qb") {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": unknown generator '" + family + "'");
    }
    if (!(words >> count >> a >> b >> seed) || (words >> extra)) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected '" + family +
                                             (family == "tree" ? " <count> <n> <k> <seed>'" : " <count> <k> <centers> <seed>'"));
    }
    for (std::size_t i = 0; i < count; ++i) {
      std::ostringstream id;
      id << family << '-' << std::setw(3) << std::setfill('0') << line_no << '-' << std::setw(4) << i;
      jobs.push_back({id.str(), family, a, b, seed + i});
    }
  }

  struct Row {
    std::string algorithm;
    Rational quality;
    std::size_t size = 0;
    double wall_ms = 0;
  };
  std::vector<std::vector<Row>> rows(jobs.size());
  std::vector<std::string> failures(jobs.size());
  const auto count = static_cast<std::ptrdiff_t>(jobs.size());
  auto timed = [](auto&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto value = f();
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    return std::make_pair(std::move(value), elapsed.count());
  };
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const Job& job = jobs[i];
    try {
      if (job.family == "tree") {
        const auto g = random_unit_tree(job.a, job.b, job.seed);
        auto [h, ms] = timed([&] { return expected_sparsifier(g, Execution::serial); });
        rows[i].push_back({"tree", flow_quality_tree(g, h).quality, h.vertex_count(), ms});
      } else {
        const auto g = random_unit_qb(job.a, job.b, job.seed);
        auto [h, ms] = timed([&] { return qb_sparsifier(g, Execution::serial); });
        rows[i].push_back({"qb", flow_quality_lp(g, h), h.vertex_count(), ms});
        auto [x, xms] = timed([&] { return exact_qb_sparsifier(g); });
        CutQualityOptions options;
        options.exec = Execution::serial;
        rows[i].push_back({"qb-exact", enumerate_cut_quality(g, x, options).max_ratio, x.vertex_count(), xms});
      }
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!failures[i].empty()) throw Error(ErrorKind::InvalidArgument, jobs[i].id + ": " + failures[i]);
  }

  std::ostringstream csv;
  csv << "instance,algorithm,quality,size" << (timing ? ",wall_ms" : "") << "\n";
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    for (const auto& r : rows[i]) {
      csv << jobs[i].id << ',' << r.algorithm << ',' << r.quality << ',' << r.size;
      if (timing) csv << ',' << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat;
      csv << "\n";
    }
  }
  return csv.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Terminal sparsifiers for trees and quasi-bipartite graphs", "sparsetree"};
  app.require_subcommand(1);

  std::string input, h_path, mode, out_path, config;
  std::string sparsify_format, sample_format, verify_format;
  bool certify = false, timing = false;
  std::uint64_t seed = 0, count = 1;
  std::string max_quality;
  std::size_t k = 0;

  auto* sparsify = app.add_subcommand("sparsify", "Build a sparsifier from an instance file");
  sparsify->add_option("input", input, "Instance file")->required();
  sparsify->add_option("--mode", mode, "tree, qb or qb-exact")->required()->check(CLI::IsMember({"tree", "qb", "qb-exact"}));
  sparsify->add_flag("--certify", certify, "Attach a verification certificate");
  sparsify->add_option("--out", out_path, "Output file (default stdout)");
  sparsify->add_option("--format", sparsify_format, "json or text")->default_val("json")->check(CLI::IsMember({"json", "text"}));

  auto* sample = app.add_subcommand("sample", "Sample random 0-extensions of a tree");
  sample->add_option("input", input, "Tree instance file")->required();
  sample->add_option("--seed", seed, "First seed")->required();
  sample->add_option("--count", count, "Number of samples")->default_val(1);
  sample->add_option("--format", sample_format, "text or json")->default_val("text")->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Check a sparsifier against its instance");
  verify->add_option("instance", input, "Instance file")->required();
  verify->add_option("sparsifier", h_path, "Sparsifier file (json or instance text)")->required();
  verify->add_option("--mode,--kind", mode, "cut, flow-tree or exact")
      ->default_val("cut")
      ->check(CLI::IsMember({"cut", "flow-tree", "exact"}));
  auto* max_q = verify->add_option("--max-quality", max_quality, "Fail when quality exceeds this rational");
  auto* verify_seed = verify->add_option("--seed", seed, "Add 20 random demands (exact mode)");
  verify->add_option("--format", verify_format, "text or json")->default_val("text")->check(CLI::IsMember({"json", "text"}));

  auto* lowerbound = app.add_subcommand("lowerbound", "Star lower bound report");
  lowerbound->add_option("k", k, "Number of terminals")->required();

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and print CSV");
  bench->add_option("config", config, "Suite config file")->required();
  bench->add_flag("--timing", timing, "Add a wall_ms column");
  bench->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sparsify->parsed()) return cmd_sparsify(input, mode, certify, out_path, sparsify_format, out);
    if (sample->parsed()) return cmd_sample(input, seed, count, sample_format, out);
    if (verify->parsed()) {
      return cmd_verify(input, h_path, mode, max_q->count() ? std::optional(max_quality) : std::nullopt,
                        verify_seed->count() ? std::optional(seed) : std::nullopt, verify_format, out);
    }
    if (lowerbound->parsed()) return cmd_lowerbound(k, out);
    if (bench->parsed()) {
      std::ifstream file(config, std::ios::binary);
      if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open '" + config + "'");
      std::ostringstream text;
      text << file.rdbuf();
      emit(bench_csv(text.str(), timing), out_path, out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sparsetree::cli
