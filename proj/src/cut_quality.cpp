#include <algorithm>
#include <cstdlib>
#include <set>

#include "sparsetree/error.hpp"
#include "sparsetree/verify.hpp"

namespace sparsetree {

std::size_t default_max_terminals() {
  if (const char* env = std::getenv("SPARSETREE_MAX_K")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 2) return static_cast<std::size_t>(value);
  }
  return 16;
}

namespace {

struct CutValues {
  Rational mincut_g;
  Rational cut_h;
};

// Side of the bipartition that is reported: the smaller one, and between two
// equal halves the lexicographically smaller name list.
std::vector<std::string> canonical_side(const std::vector<std::string>& terminals, std::uint64_t mask) {
  std::vector<std::string> in{terminals[0]};
  std::vector<std::string> out;
  for (std::size_t i = 1; i < terminals.size(); ++i) {
    ((mask >> (i - 1)) & 1 ? in : out).push_back(terminals[i]);
  }
  std::sort(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  if (in.size() != out.size()) return in.size() < out.size() ? in : out;
  return std::min(in, out);
}

}  // namespace

QualityReport enumerate_cut_quality(const CapacitatedGraph& g, const CapacitatedGraph& h,
                                    const CutQualityOptions& options) {
  const auto g_terms = g.terminals();
  const std::size_t k = g_terms.size();
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "need at least two terminals");
  if (k > options.max_terminals || k > 62) {
    throw Error(ErrorKind::TooManyTerminals, std::to_string(k) + " terminals exceed the enumeration cap of " +
                                                 std::to_string(options.max_terminals));
  }
  std::vector<std::string> names;
  std::vector<VertexId> h_terms;
  for (VertexId t : g_terms) {
    names.push_back(g.name(t));
    auto v = h.find(g.name(t));
    if (!v) throw Error(ErrorKind::VertexSetMismatch, "terminal '" + g.name(t) + "' is missing from the sparsifier");
    h_terms.push_back(*v);
  }
  const bool direct = h.vertex_count() == k;

  const std::uint64_t cuts = (std::uint64_t{1} << (k - 1)) - 1;
  std::vector<CutValues> values(cuts);
  auto evaluate = [&](std::uint64_t mask) {
    std::vector<VertexId> gs{g_terms[0]}, gt, hs{h_terms[0]}, ht;
    for (std::size_t i = 1; i < k; ++i) {
      const bool in = (mask >> (i - 1)) & 1;
      (in ? gs : gt).push_back(g_terms[i]);
      (in ? hs : ht).push_back(h_terms[i]);
    }
    CutValues out;
    out.mincut_g = max_flow(g, gs, gt);
    if (direct) {
      std::vector<bool> side(h.vertex_count(), false);
      for (VertexId v : hs) side[v] = true;
      out.cut_h = h.boundary(side);
    } else {
      out.cut_h = max_flow(h, hs, ht);
    }
    return out;
  };

  const auto total = static_cast<std::int64_t>(cuts);
  if (options.exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t m = 0; m < total; ++m) values[m] = evaluate(static_cast<std::uint64_t>(m));
  } else {
    for (std::int64_t m = 0; m < total; ++m) values[m] = evaluate(static_cast<std::uint64_t>(m));
  }

  QualityReport report;
  report.cuts = cuts;
  bool have_min = false;
  bool have_max = false;
  for (std::uint64_t m = 0; m < cuts; ++m) {
    const auto& [mg, ch] = values[m];
    auto side = canonical_side(names, m);
    if (options.keep_table) report.table.push_back({side, mg, ch});
    if (mg.sign() == 0) {
      if (ch.sign() == 0) {
        // both sides disconnected: treated as an exact match
      } else {
        report.unbounded = true;
        continue;
      }
    }
    const Rational ratio = mg.sign() == 0 ? Rational(1) : ch / mg;
    if (!have_min || ratio < report.min_ratio || (ratio == report.min_ratio && side < report.witness_min)) {
      report.min_ratio = ratio;
      report.witness_min = side;
      have_min = true;
    }
    if (!have_max || ratio > report.max_ratio || (ratio == report.max_ratio && side < report.witness_max)) {
      report.max_ratio = ratio;
      report.witness_max = std::move(side);
      have_max = true;
    }
  }
  return report;
}

}  // namespace sparsetree
