#include "kalliance/generators.hpp"

#include <random>
#include <string>
#include <vector>

#include "kalliance/errors.hpp"

namespace kalliance {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph star_graph(int t) {
  require(t >= 1, "star needs t >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= t; ++v) edges.emplace_back(0, v);
  return Graph(t + 1, edges);
}

Graph hypercube_graph(int d) {
  require(d >= 0 && d <= 20, "hypercube dimension must be in 0..20");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (int b = 0; b < d; ++b) {
      Vertex u = v ^ (1 << b);
      if (v < u) edges.emplace_back(v, u);
    }
  }
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

Graph family_h(int r, int k) {
  require(r > 1 && r + k > 0, "family H needs r > 1 and r + k > 0");
  return cartesian_product(complete_graph(r + k), complete_graph(r));
}

Partition family_h_blocks(int r, int k) {
  require(r > 1 && r + k > 0, "family H needs r > 1 and r + k > 0");
  const int n = r * (r + k);
  std::vector<int> block_of(n);
  for (Vertex v = 0; v < n; ++v) block_of[v] = v % r;
  return Partition::from_assignment(block_of);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  require(n >= 0, "random graph needs n >= 0");
  require(p >= 0.0 && p <= 1.0, "edge probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  // Threshold on raw 64-bit draws keeps the stream independent of the
  // standard library's distribution implementations.
  const long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
  const std::uint64_t threshold = p >= 1.0 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(scaled);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      std::uint64_t draw = rng();
      if (p >= 1.0 || draw < threshold) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph generate(std::string_view kind, std::span<const double> params, std::uint64_t seed) {
  auto arity = [&](std::size_t count) {
    require(params.size() == count,
            std::string(kind) + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(params.size()));
  };
  auto as_int = [&](std::size_t i) {
    double x = params[i];
    require(x == static_cast<double>(static_cast<int>(x)), std::string(kind) + " parameters must be integers");
    return static_cast<int>(x);
  };
  if (kind == "complete") return arity(1), complete_graph(as_int(0));
  if (kind == "cycle") return arity(1), cycle_graph(as_int(0));
  if (kind == "path") return arity(1), path_graph(as_int(0));
  if (kind == "star") return arity(1), star_graph(as_int(0));
  if (kind == "hypercube") return arity(1), hypercube_graph(as_int(0));
  if (kind == "petersen") return arity(0), petersen_graph();
  if (kind == "family-h" || kind == "family_h") return arity(2), family_h(as_int(0), as_int(1));
  if (kind == "random") return arity(2), random_graph(as_int(0), params[1], seed);
  throw InputError("unknown generator '" + std::string(kind) + "'");
}

}  // namespace kalliance
