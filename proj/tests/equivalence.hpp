#pragma once

// Pruned solvers against the brute-force oracle on one graph.

#include <sstream>
#include <string>
#include <vector>

#include "kalliance/generators.hpp"
#include "kalliance/solvers.hpp"
#include "kalliance/verifier.hpp"
#include "oracle.hpp"

namespace oracle {

struct Mismatch {
  std::string graph;
  std::string what;
};

inline std::string show(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "none"; }
inline std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

/// Lexicographically least set among the minimum (global) k-alliances.
inline std::optional<kalliance::VertexSet> least_alliance(const Adj& a, int k, bool global) {
  std::optional<kalliance::VertexSet> best;
  for (std::uint32_t s = 1; s <= a.all(); ++s) {
    if (!block_ok(a, s, k, global)) continue;
    auto set = kalliance::VertexSet::from_mask(a.n, s);
    if (!best || set.size() < best->size() || (set.size() == best->size() && set < *best)) best = set;
  }
  return best;
}

inline void compare_graph(const kalliance::Graph& g, const std::string& name, std::vector<Mismatch>& out,
                          std::size_t& comparisons) {
  using namespace kalliance;
  const Adj a(g);
  const int lo = -g.max_degree();
  auto fail = [&](const std::string& what) { out.push_back({name, what}); };

  for (int k = lo; k <= g.max_degree() + 1; ++k) {
    for (bool global : {false, true}) {
      const auto r = alliance_number(g, k, global);
      const auto want = min_alliance(a, k, global);
      ++comparisons;
      if (!r.exact || show(r.value) != show(want)) {
        fail(std::string(global ? "gamma" : "a") + " k=" + std::to_string(k) + ": " + show(r.value) + " vs " + show(want));
      } else if (r.value && r.set != least_alliance(a, k, global)) {
        fail(std::string(global ? "gamma" : "a") + " k=" + std::to_string(k) + ": witness " + to_string(*r.set));
      }
    }
  }
  for (int k = lo; k <= g.min_degree() + 1; ++k) {
    for (bool global : {false, true}) {
      const auto r = partition_number(g, k, global);
      const auto want = max_partition(a, k, global);
      ++comparisons;
      if (!r.exact || show(r.value) != show(want)) {
        fail(std::string(global ? "psi-gd" : "psi") + " k=" + std::to_string(k) + ": " + show(r.value) + " vs " +
             show(want));
      }
    }
  }
  ++comparisons;
  if (show(domination_number(g).value) != std::to_string(domination(a))) fail("dom");
  if (g.order() < 2) return;

  const auto iso = isoperimetric_number(g);
  ++comparisons;
  if (iso.value != oracle::iso(a)) fail("iso: " + to_string(iso.value) + " vs " + to_string(oracle::iso(a)));
  const auto b = bipartition_width(g);
  ++comparisons;
  if (show(b.value) != std::to_string(bw(a))) fail("bw: " + show(b.value) + " vs " + std::to_string(bw(a)));

  for (int k = lo; k <= g.min_degree(); ++k) {
    for (int r = 2; r <= g.order(); ++r) {
      const auto c = min_cut_partition(g, k, r);
      const auto want = min_cut(a, k, r);
      ++comparisons;
      if (show(c.value) != show(want)) {
        fail("cut k=" + std::to_string(k) + " r=" + std::to_string(r) + ": " + show(c.value) + " vs " + show(want));
      }
    }
  }
}

/// Corpus graphs with n <= 8 and the 100 seeded random graphs.
inline std::vector<std::pair<std::string, kalliance::Graph>> equivalence_graphs() {
  std::vector<std::pair<std::string, kalliance::Graph>> gs;
  for (const auto& e : kalliance::builtin_corpus()) {
    if (e.graph->order() <= 8) gs.emplace_back(e.name, *e.graph);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    gs.emplace_back("random(" + std::to_string(n) + ",0.5," + std::to_string(seed) + ")",
                    kalliance::random_graph(n, 0.5, seed));
  }
  return gs;
}

}  // namespace oracle
