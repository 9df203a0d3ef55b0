#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvex/graph.hpp"
#include "curvex/rational.hpp"

namespace curvex {

Graph complete_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);   // n >= 1
Graph star_graph(int leaves);  // hub is vertex 0
Graph wheel_graph(int rim);    // hub is vertex 0, rim cycle on 1..rim

/// K_{2,2,2}: 6 vertices, 12 edges; antipodal pairs (0,3), (1,4), (2,5).
Graph octahedron_graph();

/// K_4 minus the edge (1,3).
Graph diamond_graph();

/// Square 0-2-3-1-0 with apex 4 over the edge (2,3); one triangle {2,3,4}.
Graph house_graph();

/// Fixed 10-vertex, 25-edge random-looking fixture used throughout the test
/// and verification suites.
Graph fig6_graph();

/// Molecular graph of cytosine, 13 atoms. Vertices: 0..5 the ring
/// N-C-N-C-C-C (closed), 6 the oxygen on vertex 1, 7 the amine nitrogen on
/// vertex 3, 8/9/10 hydrogens on vertices 0/4/5, 11/12 the amine hydrogens.
Graph cytosine_graph();

/// G(n, p) with p = p_num/p_den, decided pair by pair in row-major order
/// (u ascending, then v) by one splitmix64 draw each: the edge is present
/// iff draw % p_den < p_num. Bit-identical across runs and platforms.
Graph erdos_renyi_graph(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed);

/// Generator registry entry: a name plus integer parameters.
struct GraphSpec {
    std::string name;
    std::vector<long long> params;
};

/// Dispatches on the registry: complete, cycle, path, star, wheel,
/// octahedron, diamond, house, fig6, cytosine, erdos_renyi.
/// Unknown names and invalid parameters raise InputError.
Graph gen_named(const GraphSpec& spec);

/// Registry names in CLI order, with their parameter signatures.
std::vector<std::string> generator_usage();

/// Recursive dimension: dim(empty) = -1, and otherwise one plus the average
/// over vertices of the dimension of their unit sphere. Exact rational;
/// memoized over induced-subgraph vertex sets.
Rational inductive_dimension(const Graph& g);

}  // namespace curvex
