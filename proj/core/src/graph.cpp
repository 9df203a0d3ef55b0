#include "curvex/graph.hpp"

#include <algorithm>
#include <string>

#include "curvex/errors.hpp"

namespace curvex {

namespace {

std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& row, int v) {
    row[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

// Calls visit(clique) for every clique, extending strictly upward so each
// one is produced exactly once, in lexicographic order of vertex lists.
template <class Visit>
void walk_cliques(const Graph& g, Visit&& visit) {
    const int n = g.vertex_count();
    if (n == 0) return;
    const std::size_t words = word_count(n);
    std::vector<std::uint64_t> all(words, ~std::uint64_t{0});
    if (n & 63) all[words - 1] = (std::uint64_t{1} << (n & 63)) - 1;

    std::vector<int> current;
    auto step = [&](auto&& self, const std::vector<std::uint64_t>& cand) -> void {
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bitsword = cand[w];
            while (bitsword) {
                const int v = static_cast<int>(w * 64) + __builtin_ctzll(bitsword);
                bitsword &= bitsword - 1;
                current.push_back(v);
                visit(current);
                // candidates above v that are adjacent to the whole clique
                std::vector<std::uint64_t> next(words);
                const auto& row = g.neighbor_bits(v);
                for (std::size_t k = w; k < words; ++k) next[k] = cand[k] & row[k];
                next[w] &= ~((std::uint64_t{2} << (v & 63)) - 1);
                bool any = false;
                for (std::size_t k = w; k < words; ++k) any = any || next[k];
                if (any) self(self, next);
                current.pop_back();
            }
        }
    };
    step(step, all);
}

}  // namespace

Graph Graph::build(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.bits_.assign(n, std::vector<std::uint64_t>(word_count(n), 0));

    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        normalized.emplace_back(u, v);
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    g.edges_ = std::move(normalized);

    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        set_bit(g.bits_[u], v);
        set_bit(g.bits_[v], u);
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
}

std::vector<std::vector<Simplex>> enumerate_cliques(const Graph& g) {
    std::vector<std::vector<Simplex>> by_dim;
    walk_cliques(g, [&](const std::vector<int>& clique) {
        const std::size_t dim = clique.size() - 1;
        if (by_dim.size() <= dim) by_dim.resize(dim + 1);
        by_dim[dim].push_back(Simplex{clique});
    });
    return by_dim;
}

FVector f_vector(const Graph& g) {
    FVector f;
    walk_cliques(g, [&](const std::vector<int>& clique) {
        const std::size_t dim = clique.size() - 1;
        if (f.counts.size() <= dim) f.counts.resize(dim + 1, 0);
        ++f.counts[dim];
    });
    return f;
}

long long euler_characteristic(const Graph& g) {
    long long chi = 0;
    long long sign = 1;
    for (long long v : f_vector(g).counts) {
        chi += sign * v;
        sign = -sign;
    }
    return chi;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices)
        if (v < 0 || v >= g.vertex_count())
            throw InputError("induced subgraph vertex out of range: " + std::to_string(v));

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));

    InducedSubgraph sub;
    sub.graph = Graph::build(static_cast<int>(vertices.size()), edges);
    sub.original = std::move(vertices);
    return sub;
}

InducedSubgraph unit_sphere(const Graph& g, int x) {
    if (x < 0 || x >= g.vertex_count())
        throw InputError("vertex out of range: " + std::to_string(x));
    return induced_subgraph(g, g.neighbors(x));
}

InducedSubgraph sub_sphere(const Graph& g, const VertexFunction& f, int x, Order order) {
    if (x < 0 || x >= g.vertex_count())
        throw InputError("vertex out of range: " + std::to_string(x));
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw InputError("vertex function has wrong length");
    std::vector<int> kept;
    for (int y : g.neighbors(x)) {
        if (order == Order::below ? f[y] < f[x] : f[y] > f[x]) kept.push_back(y);
    }
    return induced_subgraph(g, kept);
}

std::vector<long long> local_clique_vector(const Graph& g, int x) {
    return f_vector(unit_sphere(g, x).graph).counts;
}

bool handshake_check(const Graph& g) {
    const FVector f = f_vector(g);
    const int max_dim = f.max_dim();
    if (max_dim < 1) return true;

    std::vector<long long> sums(max_dim + 1, 0);  // sums[k] = sum_x V_{k-1}(x)
    for (int x = 0; x < g.vertex_count(); ++x) {
        const auto local = local_clique_vector(g, x);
        for (std::size_t k = 0; k < local.size() && k + 1 <= static_cast<std::size_t>(max_dim); ++k)
            sums[k + 1] += local[k];
    }
    for (int k = 1; k <= max_dim; ++k)
        if (sums[k] != (k + 1) * f.counts[k]) return false;
    return true;
}

}  // namespace curvex
