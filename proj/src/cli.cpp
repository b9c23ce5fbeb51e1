#include "kalliance/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kalliance/bounds.hpp"
#include "kalliance/errors.hpp"
#include "kalliance/generators.hpp"
#include "kalliance/io.hpp"
#include "kalliance/solvers.hpp"
#include "kalliance/spectral.hpp"
#include "kalliance/verifier.hpp"

namespace kalliance {

namespace {

using json = nlohmann::ordered_json;

SolverOptions solver_options(const Command& c) {
  SolverOptions o;
  o.budget = c.budget;
  o.threads = std::max(1u, c.threads);
  return o;
}

const Graph& only_graph(const Command& c, std::optional<Graph>& slot) {
  if (c.args.size() != 1) throw InputError(c.subcommand + " expects exactly one graph file");
  slot = parse_graph_file(c.args.front());
  return *slot;
}

json members(const VertexSet& s) { return json(s.members()); }

json blocks(const Partition& p) {
  json out = json::array();
  for (const auto& b : p.blocks()) out.push_back(members(b));
  return out;
}

/// Writes to --output when given, else to `out`.
void emit(const Command& c, std::ostream& out, const std::string& text) {
  if (c.output) {
    std::ofstream f(*c.output);
    if (!f) throw InputError("cannot write '" + *c.output + "'");
    f << text;
  } else {
    out << text;
  }
}

std::string printf_double(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

// -- gen / product ----------------------------------------------------------

int cmd_gen(const Command& c, std::ostream& out) {
  if (c.args.empty()) throw InputError("gen needs a generator kind");
  std::vector<double> params;
  for (std::size_t i = 1; i < c.args.size(); ++i) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(c.args[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != c.args[i].size()) throw InputError("generator parameter '" + c.args[i] + "' is not a number");
    params.push_back(v);
  }
  emit(c, out, write_graph_text(generate(c.args.front(), params, c.seed)));
  return kExitOk;
}

int cmd_product(const Command& c, std::ostream& out) {
  if (c.args.size() != 2) throw InputError("product expects two graph files");
  const Graph a = parse_graph_file(c.args[0]);
  const Graph b = parse_graph_file(c.args[1]);
  emit(c, out, write_graph_text(cartesian_product(a, b)));
  return kExitOk;
}

// -- solve ------------------------------------------------------------------

struct Answer {
  std::string label;
  json value;
  std::string value_text;
  json witness;
  std::string witness_text;
  std::optional<bool> exact;
  std::optional<std::uint64_t> nodes;
  std::string note;
};

Answer from_result(std::string label, const SolveResult& r, const char* missing) {
  Answer a;
  a.label = std::move(label);
  a.value = r.value ? json(*r.value) : json(nullptr);
  a.value_text = r.value ? std::to_string(*r.value) : "none";
  if (r.partition) {
    a.witness = blocks(*r.partition);
    a.witness_text = to_string(*r.partition);
  } else if (r.set) {
    a.witness = members(*r.set);
    a.witness_text = to_string(*r.set);
  }
  a.exact = r.exact;
  a.nodes = r.nodes_explored;
  if (!r.value && r.exact) a.note = missing;
  return a;
}

int cmd_solve(const Command& c, std::ostream& out) {
  std::optional<Graph> slot;
  const Graph& g = only_graph(c, slot);
  const SolverOptions opts = solver_options(c);
  std::string q = c.quantity;
  if (c.global && q == "a") q = "gamma";
  if (c.global && q == "psi") q = "psi-gd";
  const std::string kk = " k=" + std::to_string(c.k);

  Answer ans;
  if (q == "a") {
    ans = from_result("a" + kk, alliance_number(g, c.k, false, opts), "no alliance exists");
  } else if (q == "gamma") {
    ans = from_result("gamma" + kk, alliance_number(g, c.k, true, opts), "no alliance exists");
  } else if (q == "psi") {
    ans = from_result("psi" + kk, partition_number(g, c.k, false, opts), "no partition exists");
  } else if (q == "psi-gd") {
    ans = from_result("psi-gd" + kk, partition_number(g, c.k, true, opts), "no partition exists");
  } else if (q == "cut") {
    if (!c.r) throw InputError("cut needs --r");
    ans = from_result("cut" + kk + " r=" + std::to_string(*c.r), min_cut_partition(g, c.k, *c.r, opts),
                      "no partition exists");
  } else if (q == "dom") {
    ans = from_result("dom", domination_number(g, opts), "no dominating set exists");
  } else if (q == "bw") {
    ans = from_result("bw", bipartition_width(g, opts), "graph has fewer than two vertices");
  } else if (q == "iso") {
    const auto r = isoperimetric_number(g, opts);
    ans.label = "iso";
    ans.value = to_string(r.value);
    ans.value_text = to_string(r.value);
    ans.witness = members(r.witness);
    ans.witness_text = to_string(r.witness);
    ans.exact = r.exact;
    ans.nodes = r.nodes_explored;
  } else if (q == "mu") {
    const auto r = algebraic_connectivity(g);
    ans.label = "mu";
    ans.value = r.mu;
    ans.value_text = printf_double("%.9f", r.mu);
    ans.note = "residual: " + printf_double("%.3e", r.residual);
  } else {
    throw InputError("unknown quantity '" + c.quantity + "'");
  }

  std::ostringstream text;
  if (c.format == "json") {
    json j;
    j["quantity"] = q;
    if (q != "iso" && q != "mu" && q != "bw" && q != "dom") j["k"] = c.k;
    if (q == "cut") j["r"] = *c.r;
    j["value"] = ans.value;
    j["witness"] = ans.witness;
    if (ans.exact) j["exact"] = *ans.exact;
    if (ans.nodes) j["nodes"] = *ans.nodes;
    if (!ans.note.empty()) j["note"] = ans.note;
    text << j.dump(2) << '\n';
  } else {
    text << ans.label << ": " << ans.value_text << '\n';
    if (!ans.note.empty()) text << ans.note << '\n';
    if (!ans.witness_text.empty()) text << "witness: " << ans.witness_text << '\n';
    if (ans.exact) text << "exact: " << (*ans.exact ? "true" : "false") << '\n';
  }
  emit(c, out, text.str());
  return kExitOk;
}

// -- bounds -----------------------------------------------------------------

void append(json& arr, std::ostringstream& text, const std::string& section, const BoundReport& report) {
  text << "[" << section << "]\n";
  for (const auto& e : report.entries) {
    json j;
    j["section"] = section;
    j["name"] = e.name;
    j["value"] = to_string(e.value);
    j["applicable"] = e.applicable;
    j["marginal"] = e.marginal;
    j["formula"] = e.formula;
    j["hypothesis"] = e.hypothesis;
    arr.push_back(std::move(j));
    text << "  " << e.name << " = " << (e.applicable ? to_string(e.value) : "n/a");
    if (e.marginal) text << " (marginal)";
    text << "    " << e.formula;
    if (!e.hypothesis.empty()) text << "  [if " << e.hypothesis << "]";
    text << '\n';
  }
}

int cmd_bounds(const Command& c, std::ostream& out) {
  std::optional<Graph> slot;
  const Graph& g = only_graph(c, slot);
  const SolverOptions opts = solver_options(c);
  const int n = g.order();
  json arr = json::array();
  std::ostringstream text;

  append(arr, text, "defensive", bounds_defensive(n, g.size(), g.min_degree(), c.k));
  append(arr, text, "global", bounds_global(n, g.min_degree(), g.max_degree(), c.k));
  const bool searchable = n <= kMaxExactOrder;
  if (c.r) {
    std::optional<std::int64_t> gamma;
    if (searchable) {
      const auto r = alliance_number(g, c.k, true, opts);
      if (r.exact) gamma = r.value;
    }
    append(arr, text, "cut", bounds_cut(n, g.size(), g.min_degree(), c.k, *c.r, gamma));
  }
  if (searchable && n >= 2) {
    const auto iso = isoperimetric_number(g, opts);
    const auto mu = algebraic_connectivity(g);
    append(arr, text, "spectral", bounds_spectral(n, g.size(), g.min_degree(), g.max_degree(), c.k, iso.value, mu.mu));
  } else {
    text << "[spectral]\n  skipped: needs 2 <= n <= " << kMaxExactOrder << " for the exact isoperimetric number\n";
  }
  emit(c, out, c.format == "json" ? arr.dump(2) + "\n" : text.str());
  return kExitOk;
}

// -- bisect -----------------------------------------------------------------

int cmd_bisect(const Command& c, std::ostream& out) {
  std::optional<Graph> slot;
  const Graph& g = only_graph(c, slot);
  const auto r = alliance_bisection(g, c.k, solver_options(c));
  std::string reason;
  if (!r.partition && r.exact && g.order() >= 2) {
    const auto mu = algebraic_connectivity(g).mu;
    const auto b = bounds_spectral(g.order(), g.size(), g.min_degree(), g.max_degree(), c.k, Rational(0), mu);
    const auto& flag = b.at("nobisection");
    if (std::get<bool>(flag.value) && !flag.marginal) {
      const std::int64_t cap = floor_div(2 * static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(g.order()) * c.k, 4);
      reason = "no-bisection bound: " + std::to_string(cap) + " < " + std::to_string(b.integer("bw_lower"));
    }
  }
  std::ostringstream text;
  if (c.format == "json") {
    json j;
    j["k"] = c.k;
    j["bisection"] = r.partition ? blocks(*r.partition) : json(nullptr);
    j["exact"] = r.exact;
    if (!reason.empty()) j["reason"] = reason;
    text << j.dump(2) << '\n';
  } else if (r.partition) {
    text << "bisection: " << to_string(*r.partition) << '\n' << "exact: " << (r.exact ? "true" : "false") << '\n';
  } else {
    text << "none";
    if (!reason.empty()) text << " (" << reason << ")";
    text << '\n' << "exact: " << (r.exact ? "true" : "false") << '\n';
  }
  emit(c, out, text.str());
  return kExitOk;
}

// -- verify -----------------------------------------------------------------

int cmd_verify(const Command& c, std::ostream& out) {
  std::vector<CorpusEntry> corpus;
  if (c.args.empty()) {
    corpus = builtin_corpus();
  } else {
    for (const auto& path : c.args) {
      CorpusEntry e;
      e.name = path;
      e.graph = std::make_shared<const Graph>(parse_graph_file(path));
      if (e.graph->order() > kMaxExactOrder) e.scope = Scope::witness;
      corpus.push_back(std::move(e));
    }
  }
  VerifyOptions vo;
  vo.solver = solver_options(c);
  const Report report = verify_corpus(corpus, vo, std::max(1u, c.threads));

  std::ostringstream text;
  if (c.format == "json") {
    text << report.to_json() << '\n';
  } else {
    for (const auto& v : report.verdicts) {
      if (v.verdict != Verdict::violated) continue;
      text << "VIOLATED " << v.theorem << " on " << v.graph;
      if (v.k) text << " k=" << *v.k;
      if (v.r) text << " r=" << *v.r;
      text << ": " << v.lhs << ' ' << v.relation << ' ' << v.rhs << "  (" << v.anchor << ")\n";
    }
    text << "graphs: " << corpus.size() << "  verdicts: " << report.verdicts.size()
         << "  holds: " << report.count(Verdict::holds) << "  violated: " << report.violations()
         << "  skipped: " << report.count(Verdict::skipped) << '\n';
  }
  emit(c, out, text.str());
  return report.violations() == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int run(const Command& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.format != "text" && c.format != "json") throw InputError("--format must be text or json");
    if (c.subcommand == "gen") return cmd_gen(c, out);
    if (c.subcommand == "product") return cmd_product(c, out);
    if (c.subcommand == "solve") return cmd_solve(c, out);
    if (c.subcommand == "bounds") return cmd_bounds(c, out);
    if (c.subcommand == "bisect") return cmd_bisect(c, out);
    if (c.subcommand == "verify") return cmd_verify(c, out);
    throw InputError("unknown subcommand '" + c.subcommand + "'");
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver and bound checker for defensive k-alliances"};
  app.require_subcommand(1);
  Command c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget, "search nodes per solve")->capture_default_str();
    sub->add_option("--threads", c.threads, "worker threads")->capture_default_str();
    sub->add_option("-o,--output", c.output, "write the result here instead of stdout");
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "write a generated graph");
  gen->add_option("generator", c.args, "kind followed by parameters, e.g. family-h 3 0")->required();
  gen->add_option("--seed", c.seed, "seed for random graphs");
  gen->add_option("-o,--output", c.output, "output path");

  auto* solve = app.add_subcommand("solve", "compute one quantity exactly");
  solve->add_option("graph", c.args, "graph file")->required();
  solve->add_option("--quantity,-q", c.quantity, "a | gamma | psi | psi-gd | cut | iso | bw | mu | dom")
      ->required()
      ->check(CLI::IsMember({"a", "gamma", "psi", "psi-gd", "cut", "iso", "bw", "mu", "dom"}));
  solve->add_option("--k", c.k, "alliance strength");
  solve->add_option("--r", c.r, "block count for cut");
  solve->add_flag("--global", c.global, "use global alliances for a and psi");
  common(solve);

  auto* bounds = app.add_subcommand("bounds", "evaluate the closed-form bounds");
  bounds->add_option("graph", c.args, "graph file")->required();
  bounds->add_option("--k", c.k, "alliance strength");
  bounds->add_option("--r", c.r, "block count for the cut bounds");
  common(bounds);

  auto* product = app.add_subcommand("product", "write the Cartesian product of two graphs");
  product->add_option("graphs", c.args, "two graph files")->required()->expected(2);
  product->add_option("-o,--output", c.output, "output path");

  auto* bisect = app.add_subcommand("bisect", "bisection into two global defensive k-alliances");
  bisect->add_option("graph", c.args, "graph file")->required();
  bisect->add_option("--k", c.k, "alliance strength");
  common(bisect);

  auto* verify = app.add_subcommand("verify", "check every bound on the built-in corpus or the given graphs");
  verify->add_option("graphs", c.args, "graph files (default: built-in corpus)");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  return run(c, out, err);
}

}  // namespace kalliance
