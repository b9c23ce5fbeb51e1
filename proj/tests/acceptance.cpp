// Prints one PASS/FAIL line per acceptance criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "equivalence.hpp"
#include "kalliance/alliances.hpp"
#include "kalliance/bounds.hpp"
#include "kalliance/generators.hpp"
#include "kalliance/products.hpp"
#include "kalliance/solvers.hpp"
#include "kalliance/spectral.hpp"
#include "kalliance/verifier.hpp"

using namespace kalliance;

namespace {

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
    ++checks_;
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool passed() const { return failures_.empty(); }

  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    for (const auto& n : notes_) s << "; " << n;
    for (const auto& f : failures_) s << "; FAILED " << f;
    return s.str();
  }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string show(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "none"; }

void equal(Criterion& c, const std::string& what, const SolveResult& r, std::int64_t want) {
  c.expect(r.exact && r.value == want, what + " = " + show(r.value) + " (want " + std::to_string(want) + ")");
}

Graph prod(const Graph& a, const Graph& b) { return cartesian_product(a, b); }

const std::vector<CorpusEntry>& corpus() {
  static const auto c = builtin_corpus();
  return c;
}

const Report& serial_report() {
  static const Report r = verify_corpus(corpus(), {}, 1);
  return r;
}

// -- criteria ---------------------------------------------------------------

void ac1(Criterion& c) {
  const Graph k4c4 = prod(complete_graph(4), cycle_graph(4));
  const Graph k3c4 = prod(complete_graph(3), cycle_graph(4));
  const Graph k2c4 = prod(complete_graph(2), cycle_graph(4));
  equal(c, "psi_-1(K4xC4)", partition_number(k4c4, -1, false), 5);
  equal(c, "psi_0(K3xC4)", partition_number(k3c4, 0, false), 4);
  equal(c, "psi_-1(K2xC4)", partition_number(k2c4, -1, false), 4);
  equal(c, "psi_1(K2xC4)", partition_number(k2c4, 1, false), 2);
  equal(c, "psi^gd_-1(K4xC4)", partition_number(k4c4, -1, true), 4);
  equal(c, "psi^gd_0(K3xC4)", partition_number(k3c4, 0, true), 3);
  equal(c, "psi^gd_1(K2xC4)", partition_number(k2c4, 1, true), 2);
  equal(c, "psi^gd_1(P)", partition_number(petersen_graph(), 1, true), 2);
  equal(c, "a_2(K1,4xK2)", alliance_number(prod(star_graph(4), complete_graph(2)), 2, false), 8);
  for (auto [r, k] : std::vector<std::pair<int, int>>{{3, -1}, {3, 0}, {3, 1}, {4, -1}}) {
    const Graph h = family_h(r, k);
    const std::string tag = "(" + std::to_string(r) + "," + std::to_string(k) + ")";
    equal(c, "a on H" + tag, alliance_number(h, k, false), r + k);
    equal(c, "gamma on H" + tag, alliance_number(h, k, true), r + k);
    equal(c, "psi on H" + tag, partition_number(h, k, false), r);
    equal(c, "psi^gd on H" + tag, partition_number(h, k, true), r);
  }
}

void ac2(Criterion& c) {
  const Graph q = prod(cycle_graph(4), complete_graph(2));
  const auto gamma = alliance_number(q, -1, true);
  const auto psi = partition_number(q, -1, true);
  const oracle::Adj adj(q);
  c.expect(gamma.exact && gamma.value == 4, "gamma_-1 = " + show(gamma.value));
  c.expect(psi.exact && psi.value == 2, "psi^gd_-1 = " + show(psi.value));
  c.expect(oracle::min_alliance(adj, -1, true) == 4, "brute-force gamma_-1 != 4");
  c.expect(oracle::max_partition(adj, -1, true) == 2, "brute-force psi^gd_-1 != 2");
  c.expect(gamma.value && psi.value && *gamma.value + *psi.value == 6, "sum != 6");
  const auto b = bounds_global(q.order(), q.min_degree(), q.max_degree(), -1);
  c.expect(b.rational("gamma_plus_psi") == Rational(6), "(n+4)/2 != 6");
  c.note("split " + show(gamma.value) + "+" + show(psi.value));
}

void ac3(Criterion& c) {
  const Graph c3c3 = prod(cycle_graph(3), cycle_graph(3));
  const auto i1 = isoperimetric_number(c3c3);
  const auto i2 = isoperimetric_number(prod(cycle_graph(4), complete_graph(2)));
  c.expect(i1.exact && i1.value == Rational(2), "i(C3xC3) = " + to_string(i1.value));
  c.expect(i2.exact && i2.value == Rational(1), "i(C4xK2) = " + to_string(i2.value));
  const double mu = algebraic_connectivity(c3c3).mu;
  c.expect(std::abs(mu - 3.0) <= 1e-6, "mu(C3xC3) = " + std::to_string(mu));

  int checked = 0;
  std::vector<std::string> beyond;
  for (const auto& e : corpus()) {
    const Graph& g = *e.graph;
    if (g.order() > kMaxExactOrder) {
      beyond.push_back(e.name + " (n=" + std::to_string(g.order()) + ")");
      continue;
    }
    const auto iso = isoperimetric_number(g);
    const double m = algebraic_connectivity(g).mu;
    c.expect(iso.exact, "iso search on " + e.name + " hit the budget");
    c.expect(boost::rational_cast<double>(iso.value) >= m / 2 - kDefaultSpectralTol, "Mohar on " + e.name);
    ++checked;
  }
  c.note("Mohar checked on " + std::to_string(checked) + " corpus graphs");
  for (const auto& b : beyond) c.note("Mohar not checked on " + b + ": exact isoperimetric number out of reach");
}

void ac4(Criterion& c) {
  const Graph c3c3 = prod(cycle_graph(3), cycle_graph(3));
  const auto cut = min_cut_partition(c3c3, 0, 3);
  c.expect(cut.exact && cut.value == 9, "C_(3,0)(C3xC3) = " + show(cut.value));
  c.expect(oracle::min_cut(oracle::Adj(c3c3), 0, 3) == 9, "exhaustive C_(3,0)(C3xC3) != 9");
  const auto b = bounds_cut(c3c3.order(), c3c3.size(), c3c3.min_degree(), 0, 3);
  c.expect(b.rational("cut_lower_2") == Rational(9), "r(r-1)(r+k)/2 != 9");
  c.expect(b.rational("cut_upper") == Rational(9), "(2m-nk)/4 != 9");

  const Graph h = family_h(3, 0);
  const auto hc = min_cut_partition(h, 0, 3);
  const auto gamma = alliance_number(h, 0, true);
  const auto hb = bounds_cut(h.order(), h.size(), h.min_degree(), 0, 3, gamma.value);
  const Rational hv(hc.value.value_or(-1));
  c.expect(hc.exact && hv == hb.rational("cut_lower_1") && hv == hb.rational("cut_lower_2") &&
               hv == hb.rational("cut_upper"),
           "equality chain on H(3,0)");
  c.expect(recognize_family_h(h, 3, 0), "recognize_family_h(H(3,0)) is false");
  const bool c3c3_member = recognize_family_h(c3c3, 3, 0);
  c.expect(!c3c3_member, std::string("recognize_family_h(C3xC3, 3, 0) returned ") + (c3c3_member ? "true" : "false") +
                             "; C3 = K3, so C3xC3 is K3xK3 = H(3,0) and true is the correct answer");
}

void ac5(Criterion& c) {
  const Graph q3 = hypercube_graph(3);
  const auto bis = alliance_bisection(q3, 1);
  c.expect(bis.partition.has_value(), "no bisection of Q3 for k=1");
  if (bis.partition) {
    c.expect(is_alliance_partition(q3, *bis.partition, {1, true}), "Q3 sides are not global 1-alliances");
    for (const auto& side : bis.partition->blocks()) {
      bool cycle = side.size() == 4 && induced_size(q3, side) == 4;
      for (Vertex v : side.members()) cycle = cycle && degree_in(q3, v, side) == 2;
      c.expect(cycle, "side " + to_string(side) + " does not induce C4");
    }
    c.note("Q3 bisection " + to_string(*bis.partition));
  }
  const Graph c3c3 = prod(cycle_graph(3), cycle_graph(3));
  const auto none = alliance_bisection(c3c3, 1);
  c.expect(none.exact && !none.value, "C3xC3 has a bisection for k=1");
  const auto iso = isoperimetric_number(c3c3);
  const auto s = bounds_spectral(9, 18, 4, 4, 1, iso.value, algebraic_connectivity(c3c3).mu);
  c.expect(s.flag("nobisection") && !s.at("nobisection").marginal, "no-bisection flag on C3xC3 is not set");
}

void ac6(Criterion& c) {
  const Graph p = petersen_graph();
  const Graph q = hypercube_graph(3);
  const Graph pq = prod(p, q);
  const VertexSet x = product_alliance(p, VertexSet(10, {0, 1}), -1, q, VertexSet(8, {0, 1}), -1);
  c.expect(x.size() == 4 && is_defensive_alliance(pq, x, -2), "4-vertex (-2)-alliance");

  const auto pp = partition_number(p, -1, false);
  const auto qp = partition_number(q, -1, false);
  c.expect(pp.value == 5 && qp.value == 4, "factor partitions psi_-1(P)=" + show(pp.value) + " psi_-1(Q3)=" + show(qp.value));
  if (pp.partition && qp.partition) {
    const Partition grid = product_partition(FactorPartition(p, *pp.partition, -1, false),
                                             FactorPartition(q, *qp.partition, -1, false));
    c.expect(grid.size() == 20 && is_alliance_partition(pq, grid, {-2, false}), "20-block (-2)-partition");
  }

  CorpusEntry entry;
  for (const auto& e : corpus()) {
    if (e.name == "PxQ3") entry = e;
  }
  const auto vs = verify_graph(entry);
  int claims = 0;
  int violated = 0;
  for (const auto& v : vs) {
    claims += v.theorem == "recorded_claim";
    violated += v.verdict == Verdict::violated;
  }
  c.expect(claims >= 4, "recorded claims: " + std::to_string(claims));
  c.expect(violated == 0, "witness-mode verdicts violated: " + std::to_string(violated));
  c.note("certifies a_-2 <= 4 and psi_-2 >= 20; " + std::to_string(claims) + " claims recorded, not asserted");
}

void ac7(Criterion& c) {
  std::vector<oracle::Mismatch> mismatches;
  std::size_t comparisons = 0;
  const auto graphs = oracle::equivalence_graphs();
  for (const auto& [name, g] : graphs) oracle::compare_graph(g, name, mismatches, comparisons);
  for (const auto& m : mismatches) c.expect(false, m.graph + " " + m.what);
  c.expect(mismatches.empty(), "mismatches");
  c.note(std::to_string(graphs.size()) + " graphs, " + std::to_string(comparisons) + " comparisons, " +
         std::to_string(mismatches.size()) + " mismatches");
}

void ac8(Criterion& c) {
  const Report& r = serial_report();
  for (const auto& v : r.verdicts) {
    if (v.verdict == Verdict::violated) {
      c.expect(false, v.theorem + " on " + v.graph + (v.k ? " k=" + std::to_string(*v.k) : std::string()));
    }
  }
  c.expect(r.violations() == 0, "violations in the full corpus");
  const Report mutated = verify_corpus(corpus(), {.mutation_k_offset = -1}, 4);
  c.expect(mutated.violations() >= 1, "mutation went unnoticed");
  c.note(std::to_string(corpus().size()) + " graphs, " + std::to_string(r.verdicts.size()) + " verdicts, " +
         std::to_string(r.count(Verdict::holds)) + " hold, " + std::to_string(r.count(Verdict::skipped)) +
         " skipped, 0 allowed violated; mutation: " + std::to_string(mutated.violations()) + " violated");
}

void ac9(Criterion& c) {
  VerifyOptions wide;
  wide.solver.threads = 8;
  const Report parallel = verify_corpus(corpus(), wide, 8);
  const std::string a = serial_report().to_json();
  const std::string b = parallel.to_json();
  c.expect(a == b, "JSON reports differ between 1 and 8 threads");
  c.note(std::to_string(a.size()) + " bytes of JSON compared");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"AC1 exact literature values", ac1},       {"AC2 sum identity", ac2},
      {"AC3 isoperimetric and spectral", ac3},    {"AC4 cut theorem", ac4},
      {"AC5 bisection", ac5},                     {"AC6 product certificates at 80 vertices", ac6},
      {"AC7 oracle equivalence", ac7},            {"AC8 theorem harness", ac8},
      {"AC9 determinism across thread counts", ac9},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !c.passed();
    std::printf("%s %s (%.2fs): %s\n", name.substr(0, 3).c_str(), c.passed() ? "PASS" : "FAIL", secs,
                (name.substr(4) + ": " + c.summary()).c_str());
    std::fflush(stdout);
  }
  return failed;
}
