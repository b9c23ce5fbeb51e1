#include "kalliance/verifier.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "kalliance/alliances.hpp"
#include "kalliance/bounds.hpp"
#include "kalliance/errors.hpp"
#include "kalliance/generators.hpp"
#include "kalliance/products.hpp"
#include "kalliance/spectral.hpp"
#include "search.hpp"

namespace kalliance {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    case Verdict::skipped:
      return "skipped";
  }
  return "?";
}

std::string to_string(HypothesisStatus h) {
  switch (h) {
    case HypothesisStatus::none:
      return "none";
    case HypothesisStatus::established:
      return "established";
    case HypothesisStatus::not_established:
      return "not-established";
    case HypothesisStatus::witness_limited:
      return "witness-limited";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// family H recognition

namespace {

class CliqueBlocks {
 public:
  CliqueBlocks(const Graph& g, int r, int size) : g_(g), r_(r), size_(size), block_(g.order(), -1) {}

  bool run() { return place(0); }

 private:
  bool place(int b) {
    if (b == r_) return cross_ok();
    Vertex v = 0;
    while (block_[v] != -1) ++v;
    std::vector<Vertex> open;
    for (Vertex u : g_.neighbors(v)) {
      if (block_[u] == -1) open.push_back(u);
    }
    std::vector<Vertex> clique{v};
    return extend(b, clique, open, 0);
  }

  bool extend(int b, std::vector<Vertex>& clique, const std::vector<Vertex>& open, std::size_t from) {
    if (static_cast<int>(clique.size()) == size_) {
      for (Vertex u : clique) block_[u] = b;
      const bool found = place(b + 1);
      for (Vertex u : clique) block_[u] = -1;
      return found;
    }
    for (std::size_t i = from; i < open.size(); ++i) {
      const Vertex u = open[i];
      const bool joins = std::all_of(clique.begin(), clique.end(), [&](Vertex w) { return g_.adjacent(u, w); });
      if (!joins) continue;
      clique.push_back(u);
      if (extend(b, clique, open, i + 1)) return true;
      clique.pop_back();
    }
    return false;
  }

  bool cross_ok() const {
    std::vector<int> hits(r_);
    for (Vertex v = 0; v < g_.order(); ++v) {
      std::fill(hits.begin(), hits.end(), 0);
      for (Vertex u : g_.neighbors(v)) ++hits[block_[u]];
      for (int j = 0; j < r_; ++j) {
        if (j != block_[v] && hits[j] != 1) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  int r_;
  int size_;
  std::vector<int> block_;
};

}  // namespace

bool recognize_family_h(const Graph& g, int r, int k) {
  if (r <= 1 || r + k <= 0) return false;
  const int size = r + k;
  if (g.order() != r * size) return false;
  const int degree = (size - 1) + (r - 1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return CliqueBlocks(g, r, size).run();
}

// ---------------------------------------------------------------------------
// harness

namespace {

using OptInt = std::optional<int>;

enum class Rel { le, lt, ge, eq };

const char* symbol(Rel rel) {
  switch (rel) {
    case Rel::le:
      return "<=";
    case Rel::lt:
      return "<";
    case Rel::ge:
      return ">=";
    case Rel::eq:
      return "==";
  }
  return "?";
}

bool compare(const Rational& a, Rel rel, const Rational& b) {
  switch (rel) {
    case Rel::le:
      return a <= b;
    case Rel::lt:
      return a < b;
    case Rel::ge:
      return a >= b;
    case Rel::eq:
      return a == b;
  }
  return false;
}

struct Side {
  Side(std::int64_t x) : value(x), text(std::to_string(x)) {}
  Side(int x) : Side(static_cast<std::int64_t>(x)) {}
  Side(const Rational& x) : value(x), text(to_string(x)) {}
  Side(Rational x, std::string t) : value(x), text(std::move(t)) {}

  Rational value;
  std::string text;
};

/// 0 standing in for "no such partition".
Side count_or_none(const std::optional<std::int64_t>& v) {
  return v ? Side(*v) : Side(Rational(0), "none");
}

std::string show(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "none"; }

/// Lazily solved quantities of one graph.
class Quantities {
 public:
  Quantities(const Graph& g, SolverOptions options, int offset) : g_(g), options_(options), offset_(offset) {}

  const SolveResult& alliance(int k, bool global) {
    auto key = std::pair{k, global};
    auto it = alliance_.find(key);
    if (it == alliance_.end()) it = alliance_.emplace(key, alliance_number(g_, k + offset_, global, options_)).first;
    return it->second;
  }

  const SolveResult& partition(int k, bool global) {
    auto key = std::pair{k, global};
    auto it = partition_.find(key);
    if (it == partition_.end()) it = partition_.emplace(key, partition_number(g_, k + offset_, global, options_)).first;
    return it->second;
  }

  const Graph& graph() const { return g_; }
  const SolverOptions& options() const { return options_; }
  int offset() const { return offset_; }

 private:
  const Graph& g_;
  SolverOptions options_;
  int offset_;
  std::map<std::pair<int, bool>, SolveResult> alliance_;
  std::map<std::pair<int, bool>, SolveResult> partition_;
};

class Harness {
 public:
  Harness(const CorpusEntry& entry, const VerifyOptions& options)
      : entry_(entry),
        g_(*entry.graph),
        options_(options),
        n_(g_.order()),
        m_(g_.size()),
        delta_(g_.min_degree()),
        Delta_(g_.max_degree()),
        q_(g_, options.solver, options.mutation_k_offset) {
    const KRange range = options.k_range.value_or(KRange{-Delta_, Delta_});
    lo_ = range.lo;
    hi_ = range.hi;
  }

  std::vector<TheoremVerdict> run() {
    if (entry_.scope != Scope::witness) {
      for (int k = lo_; k <= hi_; ++k) basic(k);
      if (entry_.family_h) family_values();
    }
    if (entry_.scope != Scope::witness && n_ >= 2) {
      graph_spectral();
      for (int k = lo_; k <= hi_; ++k) {
        spectral(k);
        if (entry_.scope == Scope::full) cuts(k);
      }
    }
    if (entry_.first && entry_.second) products();
    return std::move(out_);
  }

 private:
  TheoremVerdict& add(std::string theorem, std::string anchor, OptInt k, OptInt r) {
    TheoremVerdict v;
    v.theorem = std::move(theorem);
    v.anchor = std::move(anchor);
    v.graph = entry_.name;
    v.k = k;
    v.r = r;
    out_.push_back(std::move(v));
    return out_.back();
  }

  void check(std::string theorem, std::string anchor, OptInt k, OptInt r, const Side& lhs, Rel rel, const Side& rhs,
             HypothesisStatus hyp = HypothesisStatus::none, std::string witness = {}) {
    auto& v = add(std::move(theorem), std::move(anchor), k, r);
    v.lhs = lhs.text;
    v.relation = symbol(rel);
    v.rhs = rhs.text;
    v.hypothesis = hyp;
    v.witness = std::move(witness);
    v.verdict = compare(lhs.value, rel, rhs.value) ? Verdict::holds : Verdict::violated;
    if (v.verdict == Verdict::holds && rel != Rel::eq && lhs.value == rhs.value) v.reason = "equality";
  }

  void check_bool(std::string theorem, std::string anchor, OptInt k, OptInt r, std::string lhs, std::string rhs, bool ok,
                  HypothesisStatus hyp = HypothesisStatus::none, std::string witness = {}) {
    auto& v = add(std::move(theorem), std::move(anchor), k, r);
    v.lhs = std::move(lhs);
    v.relation = "==";
    v.rhs = std::move(rhs);
    v.hypothesis = hyp;
    v.witness = std::move(witness);
    v.verdict = ok ? Verdict::holds : Verdict::violated;
  }

  void skip(std::string theorem, std::string anchor, OptInt k, OptInt r, HypothesisStatus hyp, std::string reason) {
    auto& v = add(std::move(theorem), std::move(anchor), k, r);
    v.hypothesis = hyp;
    v.reason = std::move(reason);
  }

  static bool all_exact(std::initializer_list<const SolveResult*> results) {
    return std::all_of(results.begin(), results.end(), [](const SolveResult* r) { return r->exact; });
  }

  int solve_k(int k) const { return k + options_.mutation_k_offset; }

  // -- per-k alliance and partition numbers ---------------------------------

  void basic(int k) {
    const auto& a = q_.alliance(k, false);
    const auto& gm = q_.alliance(k, true);
    const auto& p = q_.partition(k, false);
    const auto& pg = q_.partition(k, true);
    if (!all_exact({&a, &gm, &p, &pg})) {
      skip("exact_quantities", "a_k, gamma_k, psi_k, psi_gd_k solved exactly", k, {}, HypothesisStatus::witness_limited,
           "search budget exhausted");
      return;
    }
    const HypothesisStatus est = HypothesisStatus::established;

    if (a.set) {
      check_bool("alliance_witness", "witness is a defensive k-alliance of size a_k", k, {}, "valid",
                 is_defensive_alliance(g_, *a.set, k) && a.set->size() == *a.value ? "valid" : "invalid",
                 is_defensive_alliance(g_, *a.set, k) && a.set->size() == *a.value, est, to_string(*a.set));
    }
    if (gm.set) {
      const bool ok = is_global_defensive_alliance(g_, *gm.set, k) && gm.set->size() == *gm.value;
      check_bool("global_alliance_witness", "witness is a global defensive k-alliance of size gamma_k", k, {}, "valid",
                 ok ? "valid" : "invalid", ok, est, to_string(*gm.set));
    }
    if (p.partition) {
      const bool ok = is_alliance_partition(g_, *p.partition, {k, false}) && p.partition->size() == *p.value;
      check_bool("partition_witness", "witness splits V into psi_k defensive k-alliances", k, {}, "valid",
                 ok ? "valid" : "invalid", ok, est, to_string(*p.partition));
    }
    if (pg.partition) {
      const bool ok = is_alliance_partition(g_, *pg.partition, {k, true}) && pg.partition->size() == *pg.value;
      check_bool("global_partition_witness", "witness splits V into psi_gd_k global defensive k-alliances", k, {},
                 "valid", ok ? "valid" : "invalid", ok, est, to_string(*pg.partition));
    }

    if (a.value && p.value) {
      check("alliance_partition_product", "a_k * psi_k <= n", k, {}, *a.value * *p.value, Rel::le, n_);
    }
    if (gm.value && pg.value) {
      check("global_partition_product", "gamma_k * psi_gd_k <= n", k, {}, *gm.value * *pg.value, Rel::le, n_);
    }

    const auto def = bounds_defensive(n_, m_, delta_, k);
    if (a.value && def.at("a_lower").applicable) {
      check("alliance_lower", def.at("a_lower").formula, k, {}, *a.value, Rel::ge, def.integer("a_lower"));
    }
    if (p.value && def.at("psi_upper").applicable) {
      check("partition_upper", def.at("psi_upper").formula, k, {}, *p.value, Rel::le, def.integer("psi_upper"));
    }

    const auto glob = bounds_global(n_, delta_, Delta_, k);
    if (gm.value && glob.at("gamma_lower").applicable) {
      check("global_alliance_lower", glob.at("gamma_lower").formula, k, {}, *gm.value, Rel::ge,
            glob.integer("gamma_lower"));
    }
    if (pg.value) {
      const std::string w = to_string(*pg.partition);
      if (glob.at("psi_gd_coarse").applicable) {
        check("global_partition_coarse", glob.at("psi_gd_coarse").formula, k, {}, *pg.value, Rel::le,
              glob.integer("psi_gd_coarse"));
      }
      check("global_partition_sqrt", glob.at("psi_gd_sqrt").formula, k, {}, *pg.value, Rel::le,
            glob.integer("psi_gd_sqrt"), est, w);
      check("global_partition_degree", glob.at("psi_gd_degree").formula, k, {}, *pg.value, Rel::le,
            glob.integer("psi_gd_degree"), est, w);
    }

    const auto& sum = glob.at("gamma_plus_psi");
    if (gm.value && pg.value && sum.applicable && k <= delta_) {
      if (*pg.value >= 2 && *gm.value >= 2) {
        check("global_sum", sum.formula, k, {}, *gm.value + *pg.value, Rel::le, std::get<Rational>(sum.value), est,
              to_string(*pg.partition));
      } else {
        skip("global_sum", sum.formula, k, {}, HypothesisStatus::not_established, "needs psi_gd_k >= 2 and gamma_k >= 2");
      }
    }

    if (gm.value && a.value) check("global_at_least_alliance", "gamma_k >= a_k", k, {}, *gm.value, Rel::ge, *a.value);
    if (!domination_) domination_ = domination_number(g_, options_.solver);
    if (gm.value && domination_->exact) {
      check("global_at_least_domination", "gamma_k >= gamma", k, {}, *gm.value, Rel::ge, *domination_->value);
    }

    if (k + 1 <= hi_) {
      const auto& a1 = q_.alliance(k + 1, false);
      const auto& p1 = q_.partition(k + 1, false);
      const auto& g1 = q_.alliance(k + 1, true);
      const auto& pg1 = q_.partition(k + 1, true);
      if (all_exact({&a1, &p1, &g1, &pg1})) {
        if (a.value && a1.value) check("alliance_monotone", "a_k <= a_{k+1}", k, {}, *a.value, Rel::le, *a1.value);
        if (gm.value && g1.value) check("global_alliance_monotone", "gamma_k <= gamma_{k+1}", k, {}, *gm.value, Rel::le, *g1.value);
        if (p.value && p1.value) check("partition_monotone", "psi_k >= psi_{k+1}", k, {}, *p.value, Rel::ge, *p1.value);
        if (pg.value && pg1.value) {
          check("global_partition_monotone", "psi_gd_k >= psi_gd_{k+1}", k, {}, *pg.value, Rel::ge, *pg1.value);
        }
      }
    }

    const int shifted = canonical_k(g_, k);
    if (shifted != k && shifted <= hi_) {
      const auto& as = q_.alliance(shifted, false);
      const auto& ps = q_.partition(shifted, false);
      if (all_exact({&as, &ps})) {
        check_bool("parity_alliance", "a_k = a_{k+1} under degree parity", k, {}, show(a.value), show(as.value),
                   a.value == as.value);
        check_bool("parity_partition", "psi_k = psi_{k+1} under degree parity", k, {}, show(p.value), show(ps.value),
                   p.value == ps.value);
      }
    }

    if (k == -Delta_ && p.value) check("partition_singletons", "psi_{-Delta} = n", k, {}, *p.value, Rel::eq, n_);
    if (k == delta_ && g_.is_regular() && is_connected(g_)) {
      check("partition_whole", "psi_delta = 1 for connected regular graphs", k, {}, count_or_none(p.value), Rel::eq, 1);
      check("global_partition_whole", "psi_gd_delta = 1 for connected regular graphs", k, {}, count_or_none(pg.value),
            Rel::eq, 1);
    }
  }

  void family_values() {
    const auto [r, k] = *entry_.family_h;
    const auto& a = q_.alliance(k, false);
    const auto& gm = q_.alliance(k, true);
    const auto& p = q_.partition(k, false);
    const auto& pg = q_.partition(k, true);
    if (!all_exact({&a, &gm, &p, &pg})) return;
    check("family_h_alliance", "a_k = r + k on family H", k, r, count_or_none(a.value), Rel::eq, r + k);
    check("family_h_global_alliance", "gamma_k = r + k on family H", k, r, count_or_none(gm.value), Rel::eq, r + k);
    check("family_h_partition", "psi_k = r on family H", k, r, count_or_none(p.value), Rel::eq, r);
    check("family_h_global_partition", "psi_gd_k = r on family H", k, r, count_or_none(pg.value), Rel::eq, r);
    const bool member = recognize_family_h(g_, r, k);
    check_bool("family_h_recognized", "generated family H member is recognized", k, r, member ? "member" : "not member",
               "member", member);
  }

  // -- isoperimetric number, algebraic connectivity, bisection ---------------

  void graph_spectral() {
    iso_ = isoperimetric_number(g_, options_.solver);
    mu_ = algebraic_connectivity(g_).mu;
    const Rational half_mu = rational_mu(*mu_) / 2;
    const Rational guard(1, 10'000'000);
    if (!iso_->exact) {
      skip("mohar", "i >= mu / 2", {}, {}, HypothesisStatus::witness_limited, "search budget exhausted");
    } else if (iso_->value < half_mu && iso_->value >= half_mu - guard) {
      skip("mohar", "i >= mu / 2", {}, {}, HypothesisStatus::none, "numerically marginal");
    } else {
      check("mohar", "i >= mu / 2", {}, {}, iso_->value, Rel::ge, Side(half_mu), HypothesisStatus::none,
            to_string(iso_->witness));
    }

    const auto bw = bipartition_width(g_, options_.solver);
    const auto b = bounds_spectral(n_, m_, delta_, Delta_, 0, iso_->value, *mu_);
    const auto& lower = b.at("bw_lower");
    if (!bw.exact) {
      skip("bisection_width_spectral", lower.formula, {}, {}, HypothesisStatus::witness_limited, "search budget exhausted");
    } else if (lower.marginal) {
      skip("bisection_width_spectral", lower.formula, {}, {}, HypothesisStatus::none, "numerically marginal");
    } else {
      check("bisection_width_spectral", lower.formula, {}, {}, *bw.value, Rel::ge, b.integer("bw_lower"),
            HypothesisStatus::none, to_string(*bw.set));
    }
  }

  void spectral(int k) {
    if (!iso_ || !iso_->exact) return;
    const auto& a = q_.alliance(k, false);
    const auto& p = q_.partition(k, false);
    const auto& pg = q_.partition(k, true);
    if (!all_exact({&a, &p, &pg})) return;
    const auto b = bounds_spectral(n_, m_, delta_, Delta_, k, iso_->value, *mu_);
    const HypothesisStatus est = HypothesisStatus::established;
    const HypothesisStatus nest = HypothesisStatus::not_established;
    const bool global_two = pg.value && *pg.value >= 2;
    const bool plain_two = p.value && *p.value >= 2;

    const auto& iso_upper = b.at("iso_upper_if_partitionable");
    if (global_two) {
      std::optional<Partition> small;
      bool exact = true;
      for (int r = 2; r <= *pg.value && !small; ++r) {
        const auto f = find_partition(g_, {solve_k(k), true}, r, {1, n_ / 2}, options_.solver);
        exact = exact && f.exact;
        if (f.partition) small = f.partition;
      }
      if (small) {
        check("iso_partition_upper", iso_upper.formula, k, small->size(), iso_->value, Rel::le,
              std::get<Rational>(iso_upper.value), est, to_string(*small));
      } else {
        skip("iso_partition_upper", iso_upper.formula, k, {}, exact ? nest : HypothesisStatus::witness_limited,
             "no partition with every block of size at most n/2");
      }
    }

    const auto& iso_psi = b.at("psi_gd_iso");
    if (global_two) {
      check("global_partition_iso", iso_psi.formula, k, {}, *pg.value, Rel::le, std::get<Rational>(iso_psi.value), est,
            to_string(*pg.partition));
    } else if (pg.value) {
      skip("global_partition_iso", iso_psi.formula, k, {}, nest, "needs psi_gd_k >= 2");
    }
    const auto& iso_a = b.at("a_iso_lower");
    if (plain_two && a.value) {
      check("alliance_iso", iso_a.formula, k, {}, *a.value, Rel::ge, std::get<Rational>(iso_a.value), est,
            to_string(*p.partition));
    } else if (p.value) {
      skip("alliance_iso", iso_a.formula, k, {}, nest, "needs psi_k >= 2");
    }

    const auto& mu_psi = b.at("psi_gd_mu");
    if (global_two) {
      if (mu_psi.marginal) {
        skip("global_partition_mu", mu_psi.formula, k, {}, est, "numerically marginal");
      } else {
        check("global_partition_mu", mu_psi.formula, k, {}, *pg.value, Rel::le, std::get<std::int64_t>(mu_psi.value),
              est, to_string(*pg.partition));
      }
    } else if (pg.value) {
      skip("global_partition_mu", mu_psi.formula, k, {}, nest, "needs psi_gd_k >= 2");
    }
    const auto& mu_a = b.at("a_mu_lower");
    if (plain_two && a.value) {
      if (mu_a.marginal) {
        skip("alliance_mu", mu_a.formula, k, {}, est, "numerically marginal");
      } else {
        check("alliance_mu", mu_a.formula, k, {}, *a.value, Rel::ge, std::get<std::int64_t>(mu_a.value), est,
              to_string(*p.partition));
      }
    } else if (p.value) {
      skip("alliance_mu", mu_a.formula, k, {}, nest, "needs psi_k >= 2");
    }

    const auto& mu_block = b.at("mu_nonpartitionable");
    if (std::get<bool>(mu_block.value)) {
      if (mu_block.marginal) {
        skip("mu_nonpartitionable", "mu > 2(Delta - 1 - k) => psi_gd_k < 2", k, {}, HypothesisStatus::none,
             "numerically marginal");
      } else {
        check("mu_nonpartitionable", "mu > 2(Delta - 1 - k) => psi_gd_k < 2", k, {}, count_or_none(pg.value), Rel::lt, 2);
      }
    }

    const auto& nobis = b.at("nobisection");
    if (std::get<bool>(nobis.value)) {
      const std::string anchor = "floor((2m - nk) / 4) < bw_lower => no bisection into global defensive k-alliances";
      if (nobis.marginal) {
        skip("nobisection", anchor, k, {}, HypothesisStatus::none, "numerically marginal");
      } else {
        const auto bis = alliance_bisection(g_, solve_k(k), options_.solver);
        if (!bis.exact) {
          skip("nobisection", anchor, k, {}, HypothesisStatus::witness_limited, "search budget exhausted");
        } else {
          check_bool("nobisection", anchor, k, {}, bis.partition ? "found" : "none", "none", !bis.partition,
                     HypothesisStatus::none, bis.partition ? to_string(*bis.partition) : std::string{});
        }
      }
    }
  }

  // -- cuts between global alliances ----------------------------------------

  void cuts(int k) {
    const auto& gm = q_.alliance(k, true);
    const auto& pg = q_.partition(k, true);
    if (!all_exact({&gm, &pg})) return;
    const HypothesisStatus est = HypothesisStatus::established;

    for (int r = 2; r <= n_; ++r) {
      const auto bc = bounds_cut(n_, m_, delta_, k, r, gm.value);
      if (bc.flag("nonpartitionable")) {
        check("nonpartitionable", bc.at("nonpartitionable").formula + " => psi_gd_k < r", k, r, count_or_none(pg.value),
              Rel::lt, r);
      }
    }

    if (!pg.value || *pg.value < 2 || !gm.value) return;
    for (int r = 2; r <= *pg.value; ++r) {
      const auto c = min_cut_partition(g_, solve_k(k), r, options_.solver);
      const std::string cut_anchor = "C_(r,k) over partitions into r global defensive k-alliances";
      if (!c.exact) {
        skip("cut_bounds", cut_anchor, k, r, HypothesisStatus::witness_limited, "search budget exhausted");
        continue;
      }
      if (!c.value) {
        check_bool("cut_feasible", "r <= psi_gd_k admits an r-block partition", k, r, "none", "found", false);
        continue;
      }
      const auto bc = bounds_cut(n_, m_, delta_, k, r, *gm.value);
      const Rational cut(*c.value);
      const std::string w = to_string(*c.partition);
      const Rational lower_gamma = bc.rational("cut_lower_1");
      const Rational lower_r = bc.rational("cut_lower_2");
      const Rational upper = bc.rational("cut_upper");
      check("cut_lower_gamma", bc.at("cut_lower_1").formula, k, r, Side(cut), Rel::ge, lower_gamma, est, w);
      check("cut_lower_r", bc.at("cut_lower_2").formula, k, r, Side(cut), Rel::ge, lower_r, est, w);
      check("cut_upper", bc.at("cut_upper").formula, k, r, Side(cut), Rel::le, upper, est, w);
      const bool chain = cut == lower_gamma && cut == lower_r && cut == upper;
      const bool member = recognize_family_h(g_, r, k);
      check_bool("cut_equality_family", "C = r(r-1)gamma_k/2 = r(r-1)(r+k)/2 = (2m-nk)/4 iff the graph is in H", k, r,
                 chain ? "equal" : "not equal", member ? "equal" : "not equal", chain == member, est, w);

      std::int64_t least = std::numeric_limits<std::int64_t>::max();
      for (const auto& block : c.partition->blocks()) least = std::min<std::int64_t>(least, induced_size(g_, block));
      check("induced_size", bc.at("induced_size_lower").formula, k, r, least, Rel::ge, bc.rational("induced_size_lower"),
            est, w);

      if (n_ % r == 0) {
        const auto eq = find_partition(g_, {solve_k(k), true}, r, {n_ / r, n_ / r}, options_.solver);
        const auto& cap = bc.at("equal_card_r_max");
        if (eq.partition) {
          check("equal_cardinality", cap.formula, k, r, r, Rel::le, std::get<Rational>(cap.value), est,
                to_string(*eq.partition));
        }
      }
    }
  }

  // -- product theorems -----------------------------------------------------

  /// Exact value of a quantity of the product, or nothing in witness scope.
  std::optional<SolveResult> product_value(int k, bool global, bool partition) {
    if (entry_.scope == Scope::witness) return std::nullopt;
    const auto& r = partition ? q_.partition(k, global) : q_.alliance(k, global);
    if (!r.exact) return std::nullopt;
    return r;
  }

  /// Upper certificate for a minimum: exact value <= certificate, or the
  /// closed-form lower bound <= certificate when the value is out of reach.
  void min_certificate(const std::string& theorem, const std::string& anchor, int k, bool global, std::int64_t cert,
                       const std::string& witness) {
    if (auto v = product_value(k, global, false)) {
      check(theorem, anchor, k, {}, count_or_none(v->value), Rel::le, cert, HypothesisStatus::established, witness);
      if (!v->value) out_.back().verdict = Verdict::violated;
      return;
    }
    if (global) {
      const auto glob = bounds_global(n_, delta_, Delta_, k);
      if (!glob.at("gamma_lower").applicable) return;
      check(theorem + "_certificate", glob.at("gamma_lower").formula + " <= certificate", k, {},
            glob.integer("gamma_lower"), Rel::le, cert, HypothesisStatus::witness_limited, witness);
    } else {
      const auto def = bounds_defensive(n_, m_, delta_, k);
      if (!def.at("a_lower").applicable) return;
      check(theorem + "_certificate", def.at("a_lower").formula + " <= certificate", k, {}, def.integer("a_lower"),
            Rel::le, cert, HypothesisStatus::witness_limited, witness);
    }
  }

  /// Lower certificate for a maximum.
  void max_certificate(const std::string& theorem, const std::string& anchor, int k, bool global, std::int64_t cert,
                       const std::string& witness) {
    if (auto v = product_value(k, global, true)) {
      check(theorem, anchor, k, {}, count_or_none(v->value), Rel::ge, cert, HypothesisStatus::established, witness);
      return;
    }
    if (global) {
      const auto glob = bounds_global(n_, delta_, Delta_, k);
      check(theorem + "_certificate", "certificate <= " + glob.at("psi_gd_degree").formula, k, {}, cert, Rel::le,
            glob.integer("psi_gd_degree"), HypothesisStatus::witness_limited, witness);
    } else {
      const auto def = bounds_defensive(n_, m_, delta_, k);
      if (!def.at("psi_upper").applicable) return;
      check(theorem + "_certificate", "certificate <= " + def.at("psi_upper").formula, k, {}, cert, Rel::le,
            def.integer("psi_upper"), HypothesisStatus::witness_limited, witness);
    }
  }

  /// Runs a constructor and records a violation if its own re-verification fails.
  template <typename F>
  bool constructed(const std::string& theorem, int k, F&& build) {
    try {
      build();
      return true;
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
      check_bool(theorem, "constructed certificate passes its predicate", k, {}, "invalid", "valid", false,
                 HypothesisStatus::established, e.what());
      return false;
    }
  }

  void products() {
    const Graph& g1 = *entry_.first;
    const Graph& g2 = *entry_.second;
    const int n1 = g1.order();
    const int n2 = g2.order();
    const int D1 = g1.max_degree();
    const int D2 = g2.max_degree();
    Quantities f1(g1, options_.solver, 0);
    Quantities f2(g2, options_.solver, 0);

    for (int k1 = -D1; k1 <= D1; ++k1) {
      for (int k2 = -D2; k2 <= D2; ++k2) {
        const int k = k1 + k2;
        const auto& s1 = f1.alliance(k1, false);
        const auto& s2 = f2.alliance(k2, false);
        if (s1.set && s2.set) {
          VertexSet x;
          if (constructed("product_alliance", k, [&] { x = product_alliance(g1, *s1.set, k1, g2, *s2.set, k2); })) {
            min_certificate("product_alliance", "a_{k1+k2} <= a_{k1}(G1) a_{k2}(G2)", k, false, x.size(),
                            to_string(x));
          }
        }
        const auto& p1 = f1.partition(k1, false);
        const auto& p2 = f2.partition(k2, false);
        if (p1.partition && p2.partition) {
          Partition grid;
          if (constructed("product_partition", k, [&] {
                grid = product_partition(FactorPartition(g1, *p1.partition, k1, false),
                                         FactorPartition(g2, *p2.partition, k2, false));
              })) {
            max_certificate("product_partition", "psi_{k1+k2} >= psi_{k1}(G1) psi_{k2}(G2)", k, false, grid.size(),
                            to_string(grid));
          }
        }
      }
    }

    for (int k1 = -D1; k1 <= g1.min_degree(); ++k1) {
      for (int k2 = -D2; k2 <= g2.min_degree(); ++k2) {
        const int k = k1 + k2;
        const auto& q1 = f1.partition(k1, true);
        const auto& q2 = f2.partition(k2, true);
        if (!q1.partition || !q2.partition) continue;
        Partition left;
        Partition right;
        const bool built = constructed("global_product_partition", k, [&] {
          left = global_product_partition(FactorPartition(g1, *q1.partition, k1, true), g2, k2);
          right = global_product_partition(g1, k1, FactorPartition(g2, *q2.partition, k2, true));
        });
        if (!built) continue;
        const std::int64_t x1 = q1.partition->min_block_size();
        const std::int64_t x2 = q2.partition->min_block_size();
        const bool left_smaller = x1 * n2 <= x2 * n1;
        const VertexSet& smallest = left_smaller ? *std::min_element(left.blocks().begin(), left.blocks().end(),
                                                                     [](const VertexSet& a, const VertexSet& b) {
                                                                       return a.size() < b.size();
                                                                     })
                                                 : *std::min_element(right.blocks().begin(), right.blocks().end(),
                                                                     [](const VertexSet& a, const VertexSet& b) {
                                                                       return a.size() < b.size();
                                                                     });
        min_certificate("global_product_alliance", "gamma_{k1+k2} <= min(x1 n2, x2 n1)", k, true,
                        std::min(x1 * n2, x2 * n1), to_string(smallest));
        const bool left_more = left.size() >= right.size();
        max_certificate("global_product_partition", "psi_gd_{k1+k2} >= max(psi_gd_{k1}(G1), psi_gd_{k2}(G2))", k, true,
                        std::max(left.size(), right.size()), to_string(left_more ? left : right));
        const std::int64_t most = std::max(*q1.value, *q2.value);
        const std::int64_t quotient = floor_div(static_cast<std::int64_t>(n1) * n2, most);
        min_certificate("global_product_quotient", "gamma_{k1+k2} <= n1 n2 / max(psi_gd_{k1}(G1), psi_gd_{k2}(G2))", k,
                        true, quotient, to_string(smallest));
      }
    }

    global_factor(f1, g1, g2, true);
    global_factor(f2, g2, g1, false);
    shifted(g1, g2);
    if (entry_.scope == Scope::witness) claims();
  }

  /// S x V(other) from a minimum global k1-alliance S of `factor`.
  void global_factor(Quantities& fq, const Graph& factor, const Graph& other, bool factor_first) {
    const Graph product = factor_first ? cartesian_product(factor, other) : cartesian_product(other, factor);
    for (int k1 = -factor.max_degree(); k1 <= factor.max_degree(); ++k1) {
      const auto& s = fq.alliance(k1, true);
      if (!s.set) continue;
      for (int k2 = -other.max_degree(); k2 <= other.min_degree(); ++k2) {
        const int k = k1 + k2;
        VertexSet x(product.order());
        for (Vertex u : s.set->members()) {
          for (Vertex v = 0; v < other.order(); ++v) {
            x.insert(factor_first ? product_vertex(other, u, v) : product_vertex(factor, v, u));
          }
        }
        if (!is_global_defensive_alliance(product, x, k)) {
          check_bool("global_product_factor", "gamma_{k1} x V(other) is a global defensive (k1+k2)-alliance", k, {},
                     "invalid", "valid", false, HypothesisStatus::established, to_string(x));
          continue;
        }
        min_certificate("global_product_factor", "gamma_{k1+k2} <= gamma_{k1}(G_i) n_j", k, true,
                        *s.value * other.order(), to_string(x));
      }
    }
  }

  void shifted(const Graph& g1, const Graph& g2) {
    const int D1 = g1.max_degree();
    const int D2 = g2.max_degree();
    const int lo_s = std::max(D1, D2);
    for (int k = -std::min(D1, D2); k <= std::max(D1, D2); ++k) {
      for (int s = lo_s; s <= D1 + D2 + k; ++s) {
        const auto cert = shifted_k_certificates(g1, g2, k, s, options_.solver);
        if (!cert.from_first && !cert.from_second) continue;
        const int target = k - s;
        std::string w = cert.from_first ? to_string(*cert.from_first) : to_string(*cert.from_second);
        check_bool("shifted_certificates", "S x {v} and {u} x S are defensive (k-s)-alliances", target, {},
                   cert.verified ? "valid" : "invalid", "valid", cert.verified, HypothesisStatus::established, w);
        if (!cert.verified) continue;
        if (cert.a_upper) {
          min_certificate("shifted_alliance", "a_{k-s} <= min(a_k(G1), a_k(G2))", target, false, *cert.a_upper, w);
        }
        if (cert.psi_lower) {
          const auto& part = cert.partition_from_first ? cert.partition_from_first : cert.partition_from_second;
          max_certificate("shifted_partition", "psi_{k-s} >= max(n2 psi_k(G1), n1 psi_k(G2))", target, false,
                          *cert.psi_lower, part ? to_string(*part) : std::string{});
        }
      }
    }
  }

  /// Statements about witness-scope graphs that cannot be settled by search
  /// at this order. Kept in the report for completeness.
  void claims() {
    if (entry_.name != "PxQ3") return;
    skip("recorded_claim", "a_{-2}(PxQ3) = 4", -2, {}, HypothesisStatus::witness_limited,
         "upper side certified by construction; lower side not searched");
    skip("recorded_claim", "psi_{-2}(PxQ3) = 20", -2, {}, HypothesisStatus::witness_limited,
         "lower side certified by construction; upper side not searched");
    skip("recorded_claim", "a_2(PxQ3) = 16", 2, {}, HypothesisStatus::witness_limited, "not searched at 80 vertices");
    skip("recorded_claim", "psi_2(PxQ3) = 5", 2, {}, HypothesisStatus::witness_limited, "not searched at 80 vertices");
  }

  const CorpusEntry& entry_;
  const Graph& g_;
  const VerifyOptions& options_;
  int n_;
  int m_;
  int delta_;
  int Delta_;
  int lo_ = 0;
  int hi_ = 0;
  Quantities q_;
  std::optional<SolveResult> domination_;
  std::optional<IsoResult> iso_;
  std::optional<double> mu_;
  std::vector<TheoremVerdict> out_;
};

}  // namespace

std::vector<TheoremVerdict> verify_graph(const CorpusEntry& entry, const VerifyOptions& options) {
  if (!entry.graph) throw InputError("corpus entry without a graph");
  if (entry.scope != Scope::witness && entry.graph->order() > kMaxExactOrder) {
    throw InputError("graph " + entry.name + " is too large for exact verification; use witness scope");
  }
  return Harness(entry, options).run();
}

std::vector<TheoremVerdict> verify_graph(const Graph& g, const std::string& name, const VerifyOptions& options) {
  CorpusEntry entry;
  entry.name = name;
  entry.graph = std::make_shared<const Graph>(g);
  return verify_graph(entry, options);
}

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> corpus;
  auto share = [](Graph g) { return std::make_shared<const Graph>(std::move(g)); };
  auto plain = [&](std::string name, Graph g) {
    CorpusEntry e;
    e.name = std::move(name);
    e.graph = share(std::move(g));
    corpus.push_back(std::move(e));
  };
  auto product = [&](std::string name, Graph a, Graph b, Scope scope = Scope::full) {
    CorpusEntry e;
    e.name = std::move(name);
    e.first = share(std::move(a));
    e.second = share(std::move(b));
    e.graph = share(cartesian_product(*e.first, *e.second));
    e.scope = scope;
    corpus.push_back(std::move(e));
    return &corpus.back();
  };

  for (int n = 2; n <= 5; ++n) plain("K" + std::to_string(n), complete_graph(n));
  for (int n = 3; n <= 6; ++n) plain("C" + std::to_string(n), cycle_graph(n));
  for (int n = 2; n <= 5; ++n) plain("P" + std::to_string(n), path_graph(n));
  for (int t = 2; t <= 4; ++t) plain("K1," + std::to_string(t), star_graph(t));
  plain("Q1", hypercube_graph(1));
  for (int d = 2; d <= 4; ++d) product("Q" + std::to_string(d), complete_graph(2), hypercube_graph(d - 1));
  plain("Petersen", petersen_graph());
  product("K4xC4", complete_graph(4), cycle_graph(4));
  product("K3xC4", complete_graph(3), cycle_graph(4));
  product("K2xC4", complete_graph(2), cycle_graph(4));
  product("C3xC3", cycle_graph(3), cycle_graph(3));
  product("K1,4xK2", star_graph(4), complete_graph(2));
  for (auto [r, k] : {std::pair{2, 0}, {3, -1}, {3, 0}, {3, 1}, {4, -1}}) {
    auto* e = product("H(" + std::to_string(r) + "," + std::to_string(k) + ")", complete_graph(r + k), complete_graph(r));
    e->family_h = std::pair{r, k};
  }
  product("C4xQ3", cycle_graph(4), hypercube_graph(3), Scope::alliances);
  product("PxQ3", petersen_graph(), hypercube_graph(3), Scope::witness);
  return corpus;
}

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [v](const TheoremVerdict& t) { return t.verdict == v; }));
}

std::string Report::to_json(int indent) const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    nlohmann::ordered_json rec;
    rec["theorem"] = v.theorem;
    rec["anchor"] = v.anchor;
    rec["graph"] = v.graph;
    rec["k"] = v.k ? nlohmann::ordered_json(*v.k) : nlohmann::ordered_json(nullptr);
    rec["r"] = v.r ? nlohmann::ordered_json(*v.r) : nlohmann::ordered_json(nullptr);
    rec["lhs"] = v.lhs;
    rec["relation"] = v.relation;
    rec["rhs"] = v.rhs;
    rec["verdict"] = to_string(v.verdict);
    rec["hypothesis"] = to_string(v.hypothesis);
    rec["witness"] = v.witness;
    rec["reason"] = v.reason;
    arr.push_back(std::move(rec));
  }
  return arr.dump(indent);
}

Report verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options, unsigned threads) {
  std::vector<std::vector<TheoremVerdict>> parts(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  detail::run_tasks(static_cast<int>(corpus.size()), threads, [&](int i) {
    try {
      parts[i] = verify_graph(corpus[i], options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Report report;
  for (auto& part : parts) {
    report.verdicts.insert(report.verdicts.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
  }
  return report;
}

}  // namespace kalliance
