#pragma once

// The graphinv command-line front end. Kept in a header so the tests can drive
// it in-process; tools/main.cpp is a thin wrapper.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphinv/graphinv.hpp"
#include "graphinv/verify.hpp"

namespace graphinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitInput = 2;

inline std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

inline std::string fmt(bool b) { return b ? "true" : "false"; }

/// Rows grouped into lines. Text output prints "k=v" pairs space-separated per
/// line; structured output prints one "key,value,tolerance" row per entry.
class Report {
 public:
  struct Row {
    std::string key, value, tolerance;
  };

  Report& line() {
    lines_.emplace_back();
    return *this;
  }
  Report& add(std::string key, std::string value, std::string tolerance = "exact") {
    if (lines_.empty()) line();
    lines_.back().push_back({std::move(key), std::move(value), std::move(tolerance)});
    return *this;
  }
  Report& add(std::string key, double v, double tol) { return add(std::move(key), fmt(v), fmt(tol)); }

  /// Quotes a field that would otherwise break its line format.
  static std::string quoted(const std::string& v, bool structured) {
    if (v.find_first_of(structured ? ",\"\n" : " \"\n") == std::string::npos) return v;
    std::string q = "\"";
    for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + '"';
  }

  void print(std::ostream& out, bool structured) const {
    if (structured) out << "key,value,tolerance\n";
    for (const auto& l : lines_) {
      if (l.empty()) continue;
      for (std::size_t k = 0; k < l.size(); ++k) {
        if (structured) {
          out << l[k].key << ',' << quoted(l[k].value, true) << ',' << l[k].tolerance << '\n';
        } else {
          out << (k ? " " : "") << l[k].key << '=' << quoted(l[k].value, false);
        }
      }
      if (!structured) out << '\n';
    }
  }

 private:
  std::vector<std::vector<Row>> lines_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline WeightedGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

inline std::string describe(const SachsSubgraph& s) {
  std::ostringstream os;
  os << "C=[";
  for (std::size_t k = 0; k < s.cycles.size(); ++k) {
    os << (k ? " " : "") << '(';
    for (std::size_t i = 0; i < s.cycles[k].size(); ++i) os << (i ? " " : "") << s.cycles[k][i];
    os << ')';
  }
  os << "] M=[";
  for (std::size_t k = 0; k < s.matching.size(); ++k)
    os << (k ? " " : "") << s.matching[k].u << '-' << s.matching[k].v;
  os << "] L=[";
  for (std::size_t k = 0; k < s.loops.size(); ++k) os << (k ? " " : "") << s.loops[k];
  os << ']';
  return os.str();
}

struct Options {
  std::uint64_t seed = 20240607;
  std::size_t max_n = 7;
  std::size_t samples = 1000;
  std::string format = "text";
  std::string family;
  std::string signature = "all-positive";
  std::string base;
  std::string input;
  std::string out;
  std::string map_out;
};

/// A family member built from --base, with its map rendered as comments.
struct Built {
  WeightedGraph graph;
  std::vector<std::string> map_lines;
};

inline WeightedGraph apply_signature(const WeightedGraph& g, const Options& o) {
  if (o.signature == "all-positive") return g;
  if (o.signature == "random") {
    std::mt19937_64 rng(o.seed);
    return gen::random_signature(g, rng);
  }
  WeightedGraph signs = load_graph(o.signature);
  if (!(underlying(signs) == underlying(g)))
    throw Error(ErrorCode::Parse, "signature file does not have the edge set of the constructed graph");
  SignedGraph checked(signs);
  return checked.graph();
}

inline Built build_family(const Options& o) {
  if (o.base.empty()) throw Error(ErrorCode::Parse, "--base is required with --family");
  WeightedGraph base = load_graph(o.base);
  Built b;
  if (o.family == "stellated") {
    Stellation st = stellate(base);
    b.graph = st.graph;
    for (VertexId v = 0; v < st.map.clique_of.size(); ++v) {
      std::string line = "# clique " + std::to_string(v) + ":";
      for (VertexId x : st.map.clique_of[v]) line += " " + std::to_string(x);
      b.map_lines.push_back(line);
    }
  } else if (o.family == "corona") {
    b.graph = corona(base);
    for (VertexId i = 0; i < base.order(); ++i)
      b.map_lines.push_back("# pendant " + std::to_string(i) + ": " + std::to_string(base.order() + i));
  } else {
    throw Error(ErrorCode::Parse, "unknown family '" + o.family + "'");
  }
  b.graph = apply_signature(b.graph, o);
  return b;
}

inline void header(std::ostream& out, const std::string& verb, const Options& o) {
  out << "# graphinv " << verb << " seed=" << o.seed << '\n';
}

inline int cmd_det(const Options& o, std::ostream& out) {
  WeightedGraph g = load_graph(o.input);
  Rational sachs = det_via_sachs(g);
  Rational oracle = determinant(adjacency_matrix(g));
  bool agree = sachs == oracle;
  header(out, "det", o);
  Report r;
  r.add("sachs", to_string(sachs)).add("oracle", to_string(oracle)).add("agree", fmt(agree));
  r.print(out, o.format == "structured");
  return agree ? kExitOk : kExitDisagreement;
}

inline int cmd_sachs(const Options& o, std::ostream& out) {
  WeightedGraph g = load_graph(o.input);
  header(out, "sachs", o);
  Report r;
  r.add("n", std::to_string(g.order()));
  std::optional<UniqueSachsResult> u;
  if (g.is_simple()) {
    u = has_unique_sachs(g);
    r.add("unique", fmt(u->unique));
  }
  std::vector<SachsSubgraph> all;
  if (g.order() <= kEnumerationCap) {
    all = enumerate_sachs(g);
    r.add("count", std::to_string(all.size()));
    if (u && u->unique != (all.size() == 1)) {
      r.print(out, o.format == "structured");
      throw Error(ErrorCode::Disagreement, "pendant reduction and enumeration disagree on uniqueness");
    }
  }
  for (std::size_t k = 0; k < all.size(); ++k) {
    r.line().add("S" + std::to_string(k), describe(all[k])).add("term", to_string(sachs_term(g, all[k])));
  }
  if (u && u->unique && all.empty()) r.line().add("witness", describe(*u->witness));
  r.print(out, o.format == "structured");
  return kExitOk;
}

inline int cmd_invert(const Options& o, std::ostream& out) {
  WeightedGraph g = load_graph(o.input);
  InverseReport rep = invert_graph(g, InverseMethod::both);
  std::ostringstream body;
  header(body, "invert", o);
  body << "# method=both agree=" << fmt(rep.agreement.value_or(false)) << '\n';
  body << serialize_graph(rep.inverse);
  if (o.out.empty()) {
    out << body.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw Error(ErrorCode::Parse, "cannot write '" + o.out + "'");
    f << body.str();
  }
  return kExitOk;
}

inline int cmd_construct(const Options& o, std::ostream& out) {
  Built b = build_family(o);
  std::ostringstream map;
  for (const auto& l : b.map_lines) map << l << '\n';
  header(out, "construct", o);
  out << "# family=" << o.family << " signature=" << o.signature << '\n';
  out << serialize_graph(b.graph) << map.str();
  if (!o.map_out.empty()) {
    std::ofstream f(o.map_out);
    if (!f) throw Error(ErrorCode::Parse, "cannot write '" + o.map_out + "'");
    f << map.str();
  }
  return kExitOk;
}

inline int cmd_analyze(const Options& o, std::ostream& out) {
  WeightedGraph g = o.input.empty() ? build_family(o).graph : load_graph(o.input);
  if (g.order() == 0) throw Error(ErrorCode::Parse, "cannot analyze the empty graph");
  FloatMatrix a = to_float(adjacency_matrix(g));
  Spectrum s = eigenvalues(a);
  MedianReport m = median_eigenvalues(s);

  header(out, "analyze", o);
  Report r;
  r.add("n", std::to_string(g.order()));
  if (!o.family.empty()) r.add("family", o.family);
  r.line()
      .add("H", std::to_string(m.H))
      .add("L", std::to_string(m.L))
      .add("lambda_H", m.lambda_H, s.zero_tolerance)
      .add("lambda_L", m.lambda_L, s.zero_tolerance)
      .add("gap", m.gap, s.zero_tolerance);
  r.line()
      .add("splits", fmt(m.splits), fmt(s.zero_tolerance))
      .add("near_zero", std::to_string(near_zero_count(s)), fmt(s.zero_tolerance))
      .add("symmetric", fmt(m.symmetric), fmt(kSymmetryTolerance))
      .add("max_residual", max_residual(a, s), s.zero_tolerance);

  if (m.splits) {
    MedianReport via = median_via_inverse(g);
    r.line()
        .add("lambda_H_via_inverse", via.lambda_H, kReciprocityTolerance)
        .add("lambda_L_via_inverse", via.lambda_L, kReciprocityTolerance);
  }
  if (g.is_simple() && g.is_signed()) {
    SignedGraph sg(g);
    bool cert = split_certificate(sg);
    r.line().add("certificate", fmt(cert));
    if (cert && g.order() <= kEnumerationCap) {
      std::vector<Edge> m = has_unique_sachs(g).witness->matching;
      WeightSweepReport sw = sampled_weight_sweep(sg, m, o.samples, o.seed);
      r.add("sweep_samples", std::to_string(sw.samples))
          .add("sweep_singular", std::to_string(sw.singular))
          .add("sweep_min_abs_det", to_string(sw.min_abs_det));
    }
  }
  if (!o.family.empty() && g.is_unweighted()) {
    Family f = o.family == "corona" ? Family::corona : Family::stellated_tree;
    if (o.family != "corona" && o.family != "stellated") throw Error(ErrorCode::Parse, "unknown family");
    bool member = f == Family::corona ? recognize_corona(g).has_value() : recognize_stellated_tree(g).has_value();
    r.line().add("member", fmt(member));
    if (member) r.add("bounds", fmt(check_median_bounds(g, f)), fmt(s.zero_tolerance));
  }
  r.print(out, o.format == "structured");
  return kExitOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  verify::Config cfg;
  cfg.seed = o.seed;
  cfg.max_n = o.max_n;
  cfg.random_max_n = o.max_n + 1;
  cfg.random_samples = o.samples;
  cfg.tree_max = o.max_n;
  cfg.corona_base_max = std::min<std::size_t>(cfg.corona_base_max, o.max_n);
  cfg.stellation_base_max = std::min<std::size_t>(cfg.stellation_base_max, o.max_n);
  header(out, "verify", o);
  Report r;
  bool ok = true;
  for (const verify::CheckResult& c : verify::run_invariant_suites(cfg)) {
    ok = ok && c.passed;
    r.line().add("status", c.passed ? "PASS" : "FAIL").add("cases", std::to_string(c.cases)).add("check", c.name);
    if (!c.passed) r.add("detail", c.detail);
  }
  r.print(out, o.format == "structured");
  return ok ? kExitOk : kExitDisagreement;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverses and median eigenvalues of weighted graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--format", o.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  auto* det = app.add_subcommand("det", "determinant by Sachs subgraphs and by elimination");
  det->add_option("graph", o.input)->required();
  auto* sachs = app.add_subcommand("sachs", "enumerate Sachs subgraphs and test uniqueness");
  sachs->add_option("graph", o.input)->required();
  auto* inv = app.add_subcommand("invert", "inverse graph (structural and oracle, cross-checked)");
  inv->add_option("graph", o.input)->required();
  inv->add_option("--out", o.out, "write the inverse here instead of stdout");

  auto family_opts = [&](CLI::App* sub, bool required) {
    auto* f = sub->add_option("--family", o.family)->check(CLI::IsMember({"stellated", "corona"}));
    if (required) f->required();
    sub->add_option("--base", o.base, "base graph file");
    sub->add_option("--signature", o.signature, "file | all-positive | random")->capture_default_str();
  };
  auto* construct = app.add_subcommand("construct", "emit st(G) or the corona of G");
  family_opts(construct, true);
  construct->add_option("--map-out", o.map_out, "also write the vertex map here");
  auto* analyze = app.add_subcommand("analyze", "median eigenvalues and splitting");
  family_opts(analyze, false);
  analyze->add_option("graph", o.input);
  analyze->add_option("--samples", o.samples, "weight-sweep samples")->capture_default_str();
  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  ver->add_option("--max-n", o.max_n)->capture_default_str()->check(CLI::Range(1, 8));
  ver->add_option("--samples", o.samples, "random graphs per suite")->capture_default_str();
  for (auto* sub : {det, sachs, inv, construct, analyze, ver}) {
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "structured"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*det) return cmd_det(o, out);
    if (*sachs) return cmd_sachs(o, out);
    if (*inv) return cmd_invert(o, out);
    if (*construct) return cmd_construct(o, out);
    if (*analyze) {
      if (o.input.empty() && o.base.empty()) throw Error(ErrorCode::Parse, "analyze needs a graph file or --base");
      return cmd_analyze(o, out);
    }
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Disagreement ? kExitDisagreement : kExitInput;
  }
}

}  // namespace graphinv::cli
