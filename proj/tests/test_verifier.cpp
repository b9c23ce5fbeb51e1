#include <set>

#include "doctest.h"
#include "json.hpp"
#include "kalliance/generators.hpp"
#include "kalliance/verifier.hpp"

using namespace kalliance;

namespace {

std::size_t count(const std::vector<TheoremVerdict>& vs, Verdict v) {
  std::size_t c = 0;
  for (const auto& x : vs) c += x.verdict == v;
  return c;
}

const TheoremVerdict* find(const std::vector<TheoremVerdict>& vs, const std::string& theorem, std::optional<int> k,
                           std::optional<int> r = std::nullopt) {
  for (const auto& v : vs) {
    if (v.theorem == theorem && v.k == k && (!r || v.r == r)) return &v;
  }
  return nullptr;
}

CorpusEntry entry_for(const std::string& name) {
  for (auto& e : builtin_corpus()) {
    if (e.name == name) return e;
  }
  FAIL("no corpus entry " << name);
  return {};
}

}  // namespace

TEST_CASE("family H recognition") {
  for (int r = 2; r <= 5; ++r) {
    for (int k = 1 - r; r * (r + k) <= 40; ++k) {
      CAPTURE(r);
      CAPTURE(k);
      CHECK(recognize_family_h(family_h(r, k), r, k));
    }
  }
  CHECK(recognize_family_h(family_h(3, 1), 3, 1));
  CHECK(recognize_family_h(family_h(3, 1), 4, -1));  // K4 x K3 is also K3 x K4
  CHECK_FALSE(recognize_family_h(family_h(3, 1), 2, 4));
  for (int r = 2; r <= 6; ++r) {
    for (int k = 1 - r; k <= 4; ++k) CHECK_FALSE(recognize_family_h(petersen_graph(), r, k));
  }
  CHECK_FALSE(recognize_family_h(hypercube_graph(3), 2, 2));
  CHECK_FALSE(recognize_family_h(cartesian_product(cycle_graph(4), cycle_graph(4)), 4, 0));
  CHECK_FALSE(recognize_family_h(family_h(3, 0), 1, 0));
  // a 4-regular graph on 9 vertices that is not K3 x K3: the circulant C9(1,2)
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 9; ++v) {
    edges.emplace_back(std::min(v, (v + 1) % 9), std::max(v, (v + 1) % 9));
    edges.emplace_back(std::min(v, (v + 2) % 9), std::max(v, (v + 2) % 9));
  }
  CHECK_FALSE(recognize_family_h(build_graph(9, edges), 3, 0));
}

TEST_CASE("single edge") {
  const auto vs = verify_graph(complete_graph(2), "K2");
  CHECK_FALSE(vs.empty());
  CHECK(count(vs, Verdict::violated) == 0);
  CHECK(count(vs, Verdict::holds) > 0);

  const Report r = verify_corpus({entry_for("K2")});
  CHECK(r.violations() == 0);
}

TEST_CASE("C3 x C3 over k in -4..4") {
  const Graph g = cartesian_product(cycle_graph(3), cycle_graph(3));
  const auto vs = verify_graph(g, "C3xC3", {.k_range = KRange{-4, 4}});
  CHECK(count(vs, Verdict::violated) == 0);

  const auto* psi_mu = find(vs, "global_partition_mu", 0);
  REQUIRE(psi_mu);
  CHECK(psi_mu->verdict == Verdict::holds);
  CHECK(psi_mu->reason == "equality");
  const auto* a_mu = find(vs, "alliance_mu", 0);
  REQUIRE(a_mu);
  CHECK(a_mu->verdict == Verdict::holds);
  CHECK(a_mu->reason == "equality");

  const auto* nob = find(vs, "nobisection", 1);
  REQUIRE(nob);
  CHECK(nob->verdict == Verdict::holds);

  const auto* cut = find(vs, "cut_upper", 0, 3);
  REQUIRE(cut);
  CHECK(cut->lhs == "9/1");
  CHECK(cut->reason == "equality");

  const auto* mohar = find(vs, "mohar", std::nullopt);
  REQUIRE(mohar);
  CHECK(mohar->verdict == Verdict::holds);
}

TEST_CASE("family H equality chain") {
  const auto vs = verify_graph(entry_for("H(3,0)"));
  CHECK(count(vs, Verdict::violated) == 0);
  const auto* chain = find(vs, "cut_equality_family", 0, 3);
  REQUIRE(chain);
  CHECK(chain->verdict == Verdict::holds);
  CHECK(chain->lhs == "equal");
  const auto* rec = find(vs, "family_h_recognized", 0, 3);
  REQUIRE(rec);
  CHECK(rec->verdict == Verdict::holds);
}

TEST_CASE("random graph with n = 7") {
  const auto vs = verify_graph(random_graph(7, 0.5, 2024), "random7");
  CHECK(count(vs, Verdict::violated) == 0);
  for (const auto& v : vs) CHECK(v.hypothesis != HypothesisStatus::witness_limited);
}

TEST_CASE("verdict invariants") {
  const auto vs = verify_graph(petersen_graph(), "Petersen");
  CHECK(count(vs, Verdict::violated) == 0);
  for (const auto& v : vs) {
    if (v.verdict == Verdict::skipped) CHECK_FALSE(v.reason.empty());
    if (v.verdict == Verdict::holds) CHECK(v.hypothesis != HypothesisStatus::not_established);
  }
}

TEST_CASE("a weakened predicate is caught") {
  const Report r = verify_corpus({entry_for("C4"), entry_for("Petersen")}, {.mutation_k_offset = -1});
  CHECK(r.violations() >= 1);
  std::set<std::string> theorems;
  for (const auto& v : r.verdicts) {
    if (v.verdict == Verdict::violated) theorems.insert(v.theorem);
  }
  CHECK(theorems.count("alliance_lower") == 1);
}

TEST_CASE("JSON report shape") {
  const Report r = verify_corpus({entry_for("K2"), entry_for("C4")});
  const auto j = nlohmann::json::parse(r.to_json());
  REQUIRE(j.is_array());
  REQUIRE(j.size() == r.verdicts.size());
  for (const auto& rec : j) {
    for (const char* field : {"theorem", "anchor", "graph", "k", "r", "lhs", "rhs", "verdict", "witness"}) {
      CHECK(rec.contains(field));
    }
    CHECK((rec["k"].is_null() || rec["k"].is_number_integer()));
    const std::string verdict = rec["verdict"];
    CHECK((verdict == "holds" || verdict == "skipped"));
  }
}

TEST_CASE("corpus contents") {
  const auto corpus = builtin_corpus();
  std::set<std::string> names;
  for (const auto& e : corpus) names.insert(e.name);
  CHECK(names.size() == corpus.size());
  for (const char* n : {"K2", "K5", "C3", "C6", "P2", "P5", "K1,4", "Q1", "Q4", "Petersen", "K4xC4", "K3xC4", "K2xC4",
                        "C3xC3", "K1,4xK2", "H(2,0)", "H(3,-1)", "H(3,0)", "H(3,1)", "H(4,-1)", "PxQ3"}) {
    CHECK_MESSAGE(names.count(n) == 1, n);
  }
  CHECK(entry_for("PxQ3").scope == Scope::witness);
  CHECK(entry_for("PxQ3").graph->order() == 80);
}

TEST_CASE("report is deterministic") {
  const std::vector<CorpusEntry> corpus{entry_for("K4xC4"), entry_for("Petersen"), entry_for("H(3,1)"), entry_for("P4")};
  const std::string a = verify_corpus(corpus, {}, 1).to_json();
  const std::string b = verify_corpus(corpus, {}, 4).to_json();
  CHECK(a == b);
}
