#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kalliance/graph.hpp"
#include "kalliance/solvers.hpp"

namespace kalliance {

enum class Verdict { holds, violated, skipped };

enum class HypothesisStatus {
  /// Unconditional statement.
  none,
  /// Discharged by an explicit solver witness.
  established,
  /// Known to fail, or not witnessed; the bound is not asserted.
  not_established,
  /// Only one side is certified (budget or witness mode).
  witness_limited,
};

std::string to_string(Verdict v);
std::string to_string(HypothesisStatus h);

struct TheoremVerdict {
  std::string theorem;
  /// Human-readable statement being checked.
  std::string anchor;
  std::string graph;
  std::optional<int> k;
  std::optional<int> r;
  std::string lhs;
  std::string relation;
  std::string rhs;
  Verdict verdict = Verdict::skipped;
  HypothesisStatus hypothesis = HypothesisStatus::none;
  std::string witness;
  std::string reason;
};

/// True iff V splits into r blocks of size r + k, each inducing a complete
/// graph, with every vertex having exactly one neighbour in each other block.
bool recognize_family_h(const Graph& g, int r, int k);

struct KRange {
  int lo = 0;
  int hi = 0;
};

struct VerifyOptions {
  SolverOptions solver;
  /// Added to k before every exact solve while bounds keep the nominal k.
  /// Nonzero only for mutation testing.
  int mutation_k_offset = 0;
  /// Defaults to [-Delta, Delta].
  std::optional<KRange> k_range;
};

enum class Scope {
  /// Every check, including isoperimetric, bisection and cut searches.
  full,
  /// Everything except the cut searches. Meant for mid-sized products.
  alliances,
  /// Too large for exact search: product certificates are checked against
  /// the closed-form bounds only.
  witness,
};

/// A corpus graph plus what is known about its construction.
struct CorpusEntry {
  std::string name;
  std::shared_ptr<const Graph> graph;
  Scope scope = Scope::full;
  /// Set when the graph is family_h(r, k).
  std::optional<std::pair<int, int>> family_h;
  /// Set when the graph is cartesian_product(*first, *second).
  std::shared_ptr<const Graph> first;
  std::shared_ptr<const Graph> second;
};

std::vector<TheoremVerdict> verify_graph(const CorpusEntry& entry, const VerifyOptions& options = {});

/// Convenience overload for a plain graph.
std::vector<TheoremVerdict> verify_graph(const Graph& g, const std::string& name, const VerifyOptions& options = {});

/// K_2..K_5, C_3..C_6, P_2..P_5, K_{1,2..4}, Q_1..Q_4, Petersen, K_4xC_4,
/// K_3xC_4, K_2xC_4, C_3xC_3, K_{1,4}xK_2, family_h for (2,0), (3,-1), (3,0),
/// (3,1), (4,-1), C_4xQ_3 (alliances scope) and PxQ_3 (witness scope).
std::vector<CorpusEntry> builtin_corpus();

struct Report {
  std::vector<TheoremVerdict> verdicts;

  std::size_t count(Verdict v) const;
  std::size_t violations() const { return count(Verdict::violated); }
  /// JSON array of verdict records.
  std::string to_json(int indent = 2) const;
};

/// Graphs are verified independently on up to `threads` workers and merged in
/// corpus order.
Report verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options = {}, unsigned threads = 1);

}  // namespace kalliance
