#include "kalliance/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "kalliance/bounds.hpp"
#include "kalliance/errors.hpp"
#include "search.hpp"

namespace kalliance {

namespace {

using detail::bit;
using detail::Budget;
using detail::Mask;
using detail::popcount;
using detail::range_mask;

constexpr std::int64_t kNoCap = std::numeric_limits<std::int64_t>::max();

void require_searchable(const Graph& g, const std::string& what) {
  if (g.order() == 0) throw InputError(what + " needs a nonempty graph");
  if (g.order() > kMaxExactOrder) {
    throw InputError(what + ": exact search supports at most " + std::to_string(kMaxExactOrder) + " vertices");
  }
}

/// Degrees and neighbour masks in flat arrays for the inner loops.
struct Dense {
  explicit Dense(const Graph& g) : n(g.order()), all(range_mask(0, g.order())), nbr(g.order()), deg(g.order()) {
    for (Vertex v = 0; v < n; ++v) {
      nbr[v] = g.neighbor_mask(v);
      deg[v] = g.degree(v);
    }
  }

  int n;
  Mask all;
  std::vector<Mask> nbr;
  std::vector<int> deg;

  /// Every member of s satisfies deg(v) >= 2 |N(v) ∩ out| + k.
  bool defends(Mask s, Mask out, int k) const {
    for (Mask w = s; w != 0; w &= w - 1) {
      const int v = std::countr_zero(w);
      if (2 * popcount(nbr[v] & out) + k > deg[v]) return false;
    }
    return true;
  }

  /// Every member of targets has a neighbour in reach.
  bool covered(Mask targets, Mask reach) const {
    for (Mask w = targets; w != 0; w &= w - 1) {
      if ((nbr[std::countr_zero(w)] & reach) == 0) return false;
    }
    return true;
  }

  std::int64_t boundary(Mask s, Mask out) const {
    std::int64_t total = 0;
    for (Mask w = s; w != 0; w &= w - 1) total += popcount(nbr[std::countr_zero(w)] & out);
    return total;
  }
};

/// Lexicographically least accepted subset of the given size.
template <typename Viable>
std::optional<Mask> first_subset(int n, int size, const Viable& viable, Budget& budget, unsigned threads) {
  const int tasks = n - size + 1;
  if (tasks <= 0) return std::nullopt;
  std::atomic<int> winner{std::numeric_limits<int>::max()};
  std::vector<std::optional<Mask>> found(tasks);
  detail::run_tasks(tasks, threads, [&](int t) {
    if (winner.load() < t) return;
    Viable check = viable;
    auto stop = [&] { return winner.load() < t; };
    std::optional<Mask> hit;
    auto leaf = [&](Mask c) {
      hit = c;
      return true;
    };
    detail::Combinations<Viable, decltype(leaf), decltype(stop)> comb(n, size, budget, check, leaf, stop);
    comb.run_task(t);
    if (hit) {
      found[t] = hit;
      detail::atomic_min(winner, t);
    }
  });
  for (const auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

struct Scored {
  Mask set = 0;
  std::int64_t cost = 0;
};

/// Minimum-cost subset of the given size with cost strictly below `cap`;
/// ties go to the lexicographically least set. `lower(c, x)` must never
/// exceed the cost of any completion of the partial state.
template <typename Lower, typename Cost>
std::optional<Scored> min_subset(int n, int size, std::int64_t cap, const Lower& lower, const Cost& cost,
                                 Budget& budget, unsigned threads) {
  const int tasks = n - size + 1;
  if (tasks <= 0) return std::nullopt;
  std::atomic<std::int64_t> shared{cap};
  std::vector<std::optional<Scored>> found(tasks);
  detail::run_tasks(tasks, threads, [&](int t) {
    std::int64_t local = cap;
    std::optional<Scored> best;
    auto viable = [&](Mask c, Mask x, int) {
      const std::int64_t lb = lower(c, x);
      // A tie with another task must survive so the lexicographically
      // earlier one can win at merge time.
      return lb < local && lb <= shared.load();
    };
    auto leaf = [&](Mask c) {
      const std::int64_t value = cost(c);
      if (value < local) {
        local = value;
        best = Scored{c, value};
        detail::atomic_min(shared, value);
      }
      return false;
    };
    auto stop = [] { return false; };
    detail::Combinations<decltype(viable), decltype(leaf), decltype(stop)> comb(n, size, budget, viable, leaf, stop);
    comb.run_task(t);
    found[t] = best;
  });
  std::optional<Scored> best;
  for (const auto& f : found) {
    if (f && (!best || f->cost < best->cost)) best = f;
  }
  return best;
}

/// Restricted-growth search over assignments of vertices 0..n-1 to at most r
/// blocks, pruning as soon as a committed vertex can no longer meet the
/// alliance condition (or, for global alliances, be dominated by every other
/// block).
class BlockSearch {
 public:
  enum class Mode { first, min_cut };

  BlockSearch(const Graph& g, AllianceKind kind, int r, PartitionConstraints limits, Mode mode, Budget& budget,
              std::atomic<std::int64_t>* shared_cut)
      : g_(g),
        n_(g.order()),
        r_(r),
        k_(kind.k),
        global_(kind.global),
        limits_(limits),
        mode_(mode),
        budget_(budget),
        shared_cut_(shared_cut),
        block_(n_, -1),
        out_(n_, 0),
        open_nbrs_(n_),
        count_(global_ ? static_cast<std::size_t>(n_) * r_ : 0, 0),
        distinct_(n_, 0),
        size_(r_, 0) {
    for (Vertex v = 0; v < n_; ++v) open_nbrs_[v] = g.degree(v);
  }

  /// Commits vertex v to block b; returns whether the state is still viable.
  /// The caller must undo() regardless.
  bool assign(Vertex v, int b) {
    block_[v] = b;
    ++size_[b];
    ++assigned_;
    if (b == opened_) ++opened_;
    for (Vertex u : g_.neighbors(v)) {
      --open_nbrs_[u];
      if (block_[u] >= 0 && block_[u] != b) {
        ++out_[u];
        ++out_[v];
        ++cut_;
      }
      if (global_ && count_[index(u, b)]++ == 0) ++distinct_[u];
    }
    return viable(v);
  }

  void undo(Vertex v) {
    const int b = block_[v];
    for (Vertex u : g_.neighbors(v)) {
      ++open_nbrs_[u];
      if (block_[u] >= 0 && block_[u] != b) {
        --out_[u];
        --out_[v];
        --cut_;
      }
      if (global_ && --count_[index(u, b)] == 0) --distinct_[u];
    }
    block_[v] = -1;
    --assigned_;
    if (--size_[b] == 0) --opened_;
  }

  /// Depth-first search from vertex `from`. Returns true when the search
  /// should stop (first mode: a partition was found).
  bool search(Vertex from) {
    if (from == n_) return at_leaf();
    if (stop_requested()) return true;
    if (!budget_.tick()) return true;
    const int top = std::min(opened_, r_ - 1);
    for (int b = 0; b <= top; ++b) {
      const bool ok = assign(from, b);
      const bool done = ok && search(from + 1);
      undo(from);
      if (done) return true;
    }
    return false;
  }

  /// Enumerates viable assignments of the first `depth` vertices.
  void collect(Vertex from, int depth, std::vector<std::vector<int>>& out) {
    if (from == depth) {
      out.emplace_back(block_.begin(), block_.begin() + depth);
      return;
    }
    if (!budget_.tick()) return;
    const int top = std::min(opened_, r_ - 1);
    for (int b = 0; b <= top; ++b) {
      if (assign(from, b)) collect(from + 1, depth, out);
      undo(from);
    }
  }

  void set_stop(const std::function<bool()>& stop) { stop_ = stop; }

  const std::optional<std::vector<int>>& best() const { return best_; }
  std::int64_t best_cut() const { return best_cut_; }

 private:
  std::size_t index(Vertex u, int b) const { return static_cast<std::size_t>(u) * r_ + b; }

  bool stop_requested() const { return (stop_ && stop_()) || budget_.exhausted(); }

  bool vertex_ok(Vertex x) const {
    if (2 * out_[x] + k_ > g_.degree(x)) return false;
    if (global_) {
      const int covered = distinct_[x] - (count_[index(x, block_[x])] > 0 ? 1 : 0);
      if ((r_ - 1) - covered > open_nbrs_[x]) return false;
    }
    return true;
  }

  bool viable(Vertex v) const {
    if (size_[block_[v]] > limits_.max_block_size) return false;
    if (!vertex_ok(v)) return false;
    for (Vertex u : g_.neighbors(v)) {
      if (block_[u] >= 0 && !vertex_ok(u)) return false;
    }
    const int remaining = n_ - assigned_;
    long need = 0;
    for (int b = 0; b < r_; ++b) need += std::max(0, limits_.min_block_size - size_[b]);
    if (need > remaining || r_ - opened_ > remaining) return false;
    if (mode_ == Mode::min_cut) {
      if (cut_ >= best_cut_) return false;
      if (shared_cut_ && cut_ > shared_cut_->load()) return false;
    }
    return true;
  }

  bool at_leaf() {
    if (opened_ != r_) return false;
    if (mode_ == Mode::first) {
      best_ = block_;
      return true;
    }
    if (cut_ < best_cut_) {
      best_cut_ = cut_;
      best_ = block_;
      if (shared_cut_) detail::atomic_min(*shared_cut_, cut_);
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int r_;
  int k_;
  bool global_;
  PartitionConstraints limits_;
  Mode mode_;
  Budget& budget_;
  std::atomic<std::int64_t>* shared_cut_;
  std::function<bool()> stop_;

  std::vector<int> block_;
  std::vector<int> out_;
  std::vector<int> open_nbrs_;
  std::vector<int> count_;
  std::vector<int> distinct_;
  std::vector<int> size_;
  int opened_ = 0;
  int assigned_ = 0;
  std::int64_t cut_ = 0;
  std::int64_t best_cut_ = kNoCap;
  std::optional<std::vector<int>> best_;
};

struct BlockOutcome {
  std::optional<std::vector<int>> assignment;
  std::int64_t cut = 0;
};

/// Necessary per-vertex conditions that make any search for r blocks futile.
bool blocks_possible(const Graph& g, AllianceKind kind, int r, PartitionConstraints limits) {
  const int n = g.order();
  if (r < 1 || r > n) return false;
  if (limits.min_block_size > limits.max_block_size) return false;
  if (static_cast<long>(r) * limits.min_block_size > n) return false;
  if (static_cast<long>(r) * std::min<long>(limits.max_block_size, n) < n) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (kind.k > g.degree(v)) return false;
    if (kind.global && 2 * (r - 1) + kind.k > g.degree(v)) return false;
  }
  return true;
}

BlockOutcome run_block_search(const Graph& g, AllianceKind kind, int r, PartitionConstraints limits,
                              BlockSearch::Mode mode, Budget& budget, unsigned threads) {
  if (!blocks_possible(g, kind, r, limits)) return {};
  const int n = g.order();

  // Split the tree on prefixes deep enough to feed every worker.
  std::vector<std::vector<int>> prefixes{{}};
  int depth = 0;
  if (threads > 1) {
    for (depth = 1; depth <= n; ++depth) {
      BlockSearch probe(g, kind, r, limits, mode, budget, nullptr);
      prefixes.clear();
      probe.collect(0, depth, prefixes);
      if (prefixes.size() >= 8 * static_cast<std::size_t>(threads) || depth == n) break;
    }
  }
  const int tasks = static_cast<int>(prefixes.size());
  std::atomic<int> winner{std::numeric_limits<int>::max()};
  std::atomic<std::int64_t> shared_cut{kNoCap};
  std::vector<BlockOutcome> found(tasks);

  detail::run_tasks(tasks, threads, [&](int t) {
    if (mode == BlockSearch::Mode::first && winner.load() < t) return;
    BlockSearch search(g, kind, r, limits, mode, budget, mode == BlockSearch::Mode::min_cut ? &shared_cut : nullptr);
    if (mode == BlockSearch::Mode::first) search.set_stop([&winner, t] { return winner.load() < t; });
    const auto& prefix = prefixes[t];
    bool ok = true;
    for (int v = 0; v < static_cast<int>(prefix.size()) && ok; ++v) ok = search.assign(v, prefix[v]);
    if (ok) search.search(depth);
    if (search.best()) {
      found[t] = BlockOutcome{search.best(), search.best_cut()};
      if (mode == BlockSearch::Mode::first) detail::atomic_min(winner, t);
    }
  });

  BlockOutcome best;
  for (const auto& f : found) {
    if (!f.assignment) continue;
    if (mode == BlockSearch::Mode::first) return f;
    if (!best.assignment || f.cut < best.cut) best = f;
  }
  return best;
}

void verify_set(const Graph& g, const VertexSet& s, AllianceKind kind) {
  if (!is_alliance(g, s, kind)) throw std::logic_error("solver produced a witness that fails the alliance predicate");
}

void verify_partition(const Graph& g, const Partition& p, AllianceKind kind) {
  if (!is_alliance_partition(g, p, kind)) {
    throw std::logic_error("solver produced a partition that fails the alliance predicate");
  }
}

}  // namespace

SolveResult alliance_number(const Graph& g, int k, bool global, const SolverOptions& options) {
  require_searchable(g, "alliance_number");
  const Dense d(g);
  const int n = d.n;
  Budget budget(options.budget);

  std::int64_t lower = std::max<std::int64_t>(1, ceil_div(static_cast<std::int64_t>(g.min_degree()) + k + 2, 2));
  if (global) {
    const auto gb = bounds_global(n, g.min_degree(), g.max_degree(), k);
    if (gb.at("gamma_lower").applicable) lower = std::max(lower, gb.integer("gamma_lower"));
  }

  auto viable = [&d, k, global](Mask c, Mask x, int next) {
    if (!d.defends(c, x, k)) return false;
    return !global || d.covered(x, c | range_mask(next, d.n));
  };

  SolveResult result;
  for (std::int64_t size = lower; size <= n; ++size) {
    auto hit = first_subset(n, static_cast<int>(size), viable, budget, options.threads);
    if (hit) {
      result.value = size;
      result.set = VertexSet::from_mask(n, *hit);
      break;
    }
    if (budget.exhausted()) break;
  }
  result.nodes_explored = budget.nodes();
  if (budget.exhausted() && !result.value) {
    result.exact = false;
    // Fall back to the whole vertex set, which is an alliance whenever k <= delta.
    if (k <= g.min_degree()) {
      result.value = n;
      result.set = VertexSet::full(n);
    }
  } else if (budget.exhausted()) {
    result.exact = false;
  }
  if (result.set) verify_set(g, *result.set, {k, global});
  return result;
}

SolveResult domination_number(const Graph& g, const SolverOptions& options) {
  require_searchable(g, "domination_number");
  const Dense d(g);
  const int n = d.n;
  Budget budget(options.budget);
  auto viable = [&d](Mask c, Mask x, int next) { return d.covered(x, c | range_mask(next, d.n)); };

  SolveResult result;
  for (int size = static_cast<int>(ceil_div(n, g.max_degree() + 1)); size <= n; ++size) {
    auto hit = first_subset(n, size, viable, budget, options.threads);
    if (hit) {
      result.value = size;
      result.set = VertexSet::from_mask(n, *hit);
      break;
    }
    if (budget.exhausted()) break;
  }
  result.nodes_explored = budget.nodes();
  if (budget.exhausted()) {
    result.exact = false;
    if (!result.value) {
      result.value = n;
      result.set = VertexSet::full(n);
    }
  }
  if (result.set && !is_dominating(g, *result.set)) throw std::logic_error("dominating set witness fails");
  return result;
}

SolveResult find_partition(const Graph& g, AllianceKind kind, int r, PartitionConstraints constraints,
                           const SolverOptions& options) {
  require_searchable(g, "find_partition");
  Budget budget(options.budget);
  auto outcome = run_block_search(g, kind, r, constraints, BlockSearch::Mode::first, budget, options.threads);
  SolveResult result;
  result.nodes_explored = budget.nodes();
  result.exact = !budget.exhausted();
  if (outcome.assignment) {
    result.value = r;
    result.partition = Partition::from_assignment(*outcome.assignment);
    verify_partition(g, *result.partition, kind);
  }
  return result;
}

SolveResult partition_number(const Graph& g, int k, bool global, const SolverOptions& options) {
  require_searchable(g, "partition_number");
  const int n = g.order();
  SolveResult result;
  if (k > g.min_degree()) return result;

  const auto smallest = alliance_number(g, k, global, options);
  std::int64_t min_block = smallest.exact && smallest.value
                               ? *smallest.value
                               : std::max<std::int64_t>(1, ceil_div(static_cast<std::int64_t>(g.min_degree()) + k + 2, 2));
  std::int64_t upper = psi_upper_from_a(n, min_block);
  if (options.seed_with_bounds) {
    if (global) {
      const auto gb = bounds_global(n, g.min_degree(), g.max_degree(), k);
      for (const char* name : {"psi_gd_coarse", "psi_gd_sqrt", "psi_gd_degree"}) {
        if (gb.at(name).applicable) upper = std::min(upper, gb.integer(name));
      }
    } else {
      const auto db = bounds_defensive(n, g.size(), g.min_degree(), k);
      if (db.at("psi_upper").applicable) upper = std::min(upper, db.integer("psi_upper"));
    }
  }
  upper = std::max<std::int64_t>(upper, 1);

  result.nodes_explored = smallest.nodes_explored;
  bool exact = smallest.exact;
  const PartitionConstraints limits{static_cast<int>(min_block), n};
  Budget budget(options.budget);
  for (std::int64_t r = upper; r >= 2; --r) {
    auto outcome = run_block_search(g, {k, global}, static_cast<int>(r), limits, BlockSearch::Mode::first, budget,
                                    options.threads);
    if (outcome.assignment) {
      result.nodes_explored += budget.nodes();
      result.value = r;
      result.partition = Partition::from_assignment(*outcome.assignment);
      result.exact = exact && !budget.exhausted();
      verify_partition(g, *result.partition, {k, global});
      return result;
    }
    if (budget.exhausted()) {
      exact = false;
      break;
    }
  }
  result.nodes_explored += budget.nodes();
  // The whole vertex set is a (global) k-alliance because k <= delta.
  result.value = 1;
  result.partition = Partition(n, {VertexSet::full(n)});
  result.exact = exact;
  verify_partition(g, *result.partition, {k, global});
  return result;
}

SolveResult min_cut_partition(const Graph& g, int k, int r, const SolverOptions& options) {
  require_searchable(g, "min_cut_partition");
  if (r < 2) throw InputError("min_cut_partition needs r >= 2");
  SolveResult result;
  if (k > g.min_degree()) return result;
  Budget budget(options.budget);
  auto outcome =
      run_block_search(g, {k, true}, r, {}, BlockSearch::Mode::min_cut, budget, options.threads);
  result.nodes_explored = budget.nodes();
  result.exact = !budget.exhausted();
  if (outcome.assignment) {
    result.partition = Partition::from_assignment(*outcome.assignment);
    verify_partition(g, *result.partition, {k, true});
    result.value = cut_edges(g, *result.partition).total;
    if (*result.value != outcome.cut) throw std::logic_error("cut bookkeeping mismatch");
  }
  return result;
}

IsoResult isoperimetric_number(const Graph& g, const SolverOptions& options) {
  require_searchable(g, "isoperimetric_number");
  if (g.order() < 2) throw InputError("isoperimetric number needs n >= 2");
  const Dense d(g);
  const int n = d.n;
  Budget budget(options.budget);
  auto lower = [&d](Mask c, Mask x) { return d.boundary(c, x); };
  auto cost = [&d](Mask c) { return d.boundary(c, d.all & ~c); };

  std::optional<Rational> best;
  Mask witness = 0;
  for (int size = 1; size <= n / 2; ++size) {
    std::int64_t cap = kNoCap;
    // Only strict improvements over smaller sets are kept: cut/size < p/q.
    if (best) cap = ceil_div(best->numerator() * size, best->denominator());
    auto hit = min_subset(n, size, cap, lower, cost, budget, options.threads);
    if (hit) {
      best = Rational(hit->cost, size);
      witness = hit->set;
    }
    if (budget.exhausted()) break;
  }
  IsoResult result{best.value_or(Rational(0)), VertexSet::from_mask(n, witness), budget.nodes(), !budget.exhausted()};
  if (!best) throw std::logic_error("isoperimetric search found no set");
  return result;
}

SolveResult bipartition_width(const Graph& g, const SolverOptions& options) {
  require_searchable(g, "bipartition_width");
  if (g.order() < 2) throw InputError("bipartition width needs n >= 2");
  const Dense d(g);
  Budget budget(options.budget);
  auto lower = [&d](Mask c, Mask x) { return d.boundary(c, x); };
  auto cost = [&d](Mask c) { return d.boundary(c, d.all & ~c); };
  auto hit = min_subset(d.n, d.n / 2, kNoCap, lower, cost, budget, options.threads);
  SolveResult result;
  result.nodes_explored = budget.nodes();
  result.exact = !budget.exhausted();
  if (hit) {
    result.value = hit->cost;
    result.set = VertexSet::from_mask(d.n, hit->set);
  }
  return result;
}

SolveResult alliance_bisection(const Graph& g, int k, const SolverOptions& options) {
  require_searchable(g, "alliance_bisection");
  if (g.order() < 2) throw InputError("bisection needs n >= 2");
  const Dense d(g);
  const int n = d.n;
  Budget budget(options.budget);
  auto viable = [&d, k](Mask c, Mask x, int next) {
    const Mask open = range_mask(next, d.n);
    return d.defends(c, x, k) && d.defends(x, c, k) && d.covered(x, c | open) && d.covered(c, x | open);
  };
  SolveResult result;
  auto hit = first_subset(n, (n + 1) / 2, viable, budget, options.threads);
  result.nodes_explored = budget.nodes();
  result.exact = !budget.exhausted();
  if (hit) {
    result.value = 2;
    result.partition = Partition(n, {VertexSet::from_mask(n, *hit), VertexSet::from_mask(n, d.all & ~*hit)});
    verify_partition(g, *result.partition, {k, true});
  }
  return result;
}

}  // namespace kalliance
