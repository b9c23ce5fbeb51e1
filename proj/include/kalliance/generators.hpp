#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "kalliance/graph.hpp"

namespace kalliance {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// K_{1,t}; vertex 0 is the centre.
Graph star_graph(int t);
/// Q_d on bit strings; identical to cartesian_product(K_2, Q_{d-1}).
Graph hypercube_graph(int d);
Graph petersen_graph();

/// K_{r+k} x K_r. Requires r > 1 and r + k > 0.
Graph family_h(int r, int k);
/// The r copies of K_{r+k} in family_h(r, k).
Partition family_h_blocks(int r, int k);

/// G(n, p) with a portable bit generator; same seed gives the same graph everywhere.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Named generator dispatch used by the CLI: complete n, cycle n, path n,
/// star t, hypercube d, petersen, family-h r k, random n p.
Graph generate(std::string_view kind, std::span<const double> params, std::uint64_t seed = 0);

}  // namespace kalliance
