#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace curvex {

/// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

/// Integer-valued function on the vertex set, one value per vertex.
/// Proper colorings are the locally injective instances.
using VertexFunction = std::vector<int>;

/// Immutable finite simple graph on vertices 0..n-1.
///
/// Construction normalizes the edge list (deduplicates, orders endpoints)
/// and rejects loops and out-of-range endpoints. Adjacency is kept both as
/// sorted neighbor lists and as per-vertex bitset rows; the bitsets drive
/// clique enumeration.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from a raw edge list. Throws InputError on loops or
    /// endpoints outside 0..n-1; duplicate and swapped edges are merged.
    static Graph build(int n, const std::vector<Edge>& edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    /// Sorted list of normalized edges.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Sorted neighbor list of v.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(int u, int v) const {
        return (bits_[u][static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    /// Adjacency row of v as packed 64-bit words.
    const std::vector<std::uint64_t>& neighbor_bits(int v) const { return bits_[v]; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<std::uint64_t>> bits_;
};

/// A clique of the host graph, stored as a strictly increasing vertex list.
/// A k-dimensional simplex has k+1 vertices.
struct Simplex {
    std::vector<int> vertices;

    int dim() const noexcept { return static_cast<int>(vertices.size()) - 1; }
};

/// Clique counts by dimension: counts[k] is the number of K_{k+1} subgraphs.
struct FVector {
    std::vector<long long> counts;

    int max_dim() const noexcept { return static_cast<int>(counts.size()) - 1; }
};

/// All cliques of all sizes >= 1, grouped by dimension; within each
/// dimension the vertex lists appear in lexicographic order. Deterministic.
std::vector<std::vector<Simplex>> enumerate_cliques(const Graph& g);

/// Clique counts by dimension; counts[0] = vertex count.
FVector f_vector(const Graph& g);

/// Alternating sum of the f-vector.
long long euler_characteristic(const Graph& g);

/// An induced subgraph relabeled to 0..k-1, together with the map back to
/// the host graph's vertex labels (original[new_label] = old_label).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;
};

/// Induced subgraph on the given vertices (deduplicated and sorted).
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices);

/// Induced subgraph on the neighbors of x.
InducedSubgraph unit_sphere(const Graph& g, int x);

enum class Order { below, above };

/// Induced subgraph of the unit sphere of x on neighbors with f-value
/// strictly below (or above) f(x).
InducedSubgraph sub_sphere(const Graph& g, const VertexFunction& f, int x,
                           Order order = Order::below);

/// f-vector of the unit sphere of x; empty for an isolated vertex.
std::vector<long long> local_clique_vector(const Graph& g, int x);

/// Checks sum_x V_{k-1}(x) = (k+1) v_k for every k up to the largest clique
/// dimension. Always true for a consistent graph; false signals a bug.
bool handshake_check(const Graph& g);

}  // namespace curvex
