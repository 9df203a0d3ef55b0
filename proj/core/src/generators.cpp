#include "curvex/generators.hpp"

#include <map>

#include "curvex/errors.hpp"
#include "curvex/prng.hpp"

namespace curvex {

Graph complete_graph(int n) {
    if (n < 0) throw InputError("complete: vertex count must be nonnegative");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle: length must be at least 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::build(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw InputError("path: vertex count must be positive");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::build(n, edges);
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw InputError("star: leaf count must be nonnegative");
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::build(leaves + 1, edges);
}

Graph wheel_graph(int rim) {
    if (rim < 3) throw InputError("wheel: rim length must be at least 3");
    std::vector<Edge> edges;
    for (int v = 1; v <= rim; ++v) {
        edges.emplace_back(0, v);
        edges.emplace_back(v, v % rim + 1);
    }
    return Graph::build(rim + 1, edges);
}

Graph octahedron_graph() {
    std::vector<Edge> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v - u != 3) edges.emplace_back(u, v);
    return Graph::build(6, edges);
}

Graph diamond_graph() {
    return Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
}

Graph house_graph() {
    return Graph::build(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

Graph fig6_graph() {
    return Graph::build(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5},
                             {1, 8}, {1, 9}, {2, 3}, {2, 7}, {2, 9}, {3, 5}, {3, 6},
                             {3, 7}, {4, 6}, {4, 7}, {4, 8}, {4, 9}, {5, 6}, {5, 7},
                             {6, 7}, {6, 9}, {7, 9}, {8, 9}});
}

Graph cytosine_graph() {
    return Graph::build(13, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 6},
                             {3, 7}, {0, 8}, {4, 9}, {5, 10}, {7, 11}, {7, 12}});
}

Graph erdos_renyi_graph(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed) {
    if (n < 0) throw InputError("erdos_renyi: vertex count must be nonnegative");
    if (p_den == 0) throw InputError("erdos_renyi: probability denominator must be positive");
    if (p_num > p_den) throw InputError("erdos_renyi: probability above 1");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next() % p_den < p_num) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

namespace {

long long param(const GraphSpec& spec, std::size_t i) {
    if (i >= spec.params.size())
        throw InputError("generator '" + spec.name + "' is missing parameter " +
                         std::to_string(i + 1));
    return spec.params[i];
}

void expect_params(const GraphSpec& spec, std::size_t count) {
    if (spec.params.size() != count)
        throw InputError("generator '" + spec.name + "' takes " + std::to_string(count) +
                         " parameter(s), got " + std::to_string(spec.params.size()));
}

}  // namespace

Graph gen_named(const GraphSpec& spec) {
    const std::string& name = spec.name;
    if (name == "complete") {
        expect_params(spec, 1);
        return complete_graph(static_cast<int>(param(spec, 0)));
    }
    if (name == "cycle") {
        expect_params(spec, 1);
        return cycle_graph(static_cast<int>(param(spec, 0)));
    }
    if (name == "path") {
        expect_params(spec, 1);
        return path_graph(static_cast<int>(param(spec, 0)));
    }
    if (name == "star") {
        expect_params(spec, 1);
        return star_graph(static_cast<int>(param(spec, 0)));
    }
    if (name == "wheel") {
        expect_params(spec, 1);
        return wheel_graph(static_cast<int>(param(spec, 0)));
    }
    if (name == "octahedron") {
        expect_params(spec, 0);
        return octahedron_graph();
    }
    if (name == "diamond") {
        expect_params(spec, 0);
        return diamond_graph();
    }
    if (name == "house") {
        expect_params(spec, 0);
        return house_graph();
    }
    if (name == "fig6") {
        expect_params(spec, 0);
        return fig6_graph();
    }
    if (name == "cytosine") {
        expect_params(spec, 0);
        return cytosine_graph();
    }
    if (name == "erdos_renyi") {
        expect_params(spec, 4);
        const long long n = param(spec, 0);
        const long long num = param(spec, 1);
        const long long den = param(spec, 2);
        const long long seed = param(spec, 3);
        if (num < 0 || den < 1) throw InputError("erdos_renyi: p must be a nonnegative fraction");
        return erdos_renyi_graph(static_cast<int>(n), static_cast<std::uint64_t>(num),
                                 static_cast<std::uint64_t>(den),
                                 static_cast<std::uint64_t>(seed));
    }
    throw InputError("unknown generator '" + name + "'");
}

std::vector<std::string> generator_usage() {
    return {
        "complete N", "cycle N", "path N", "star LEAVES", "wheel RIM",
        "octahedron", "diamond", "house", "fig6", "cytosine",
        "erdos_renyi N P_NUM P_DEN SEED",
    };
}

namespace {

Rational dimension_of_subset(const Graph& g, const std::vector<int>& verts,
                             std::map<std::vector<int>, Rational>& memo) {
    if (verts.empty()) return Rational(-1);
    if (auto it = memo.find(verts); it != memo.end()) return it->second;

    Rational total(0);
    for (int x : verts) {
        std::vector<int> sphere;
        for (int y : verts)
            if (y != x && g.adjacent(x, y)) sphere.push_back(y);
        total += dimension_of_subset(g, sphere, memo);
    }
    Rational dim = Rational(1) + total / Rational(static_cast<long>(verts.size()));
    memo.emplace(verts, dim);
    return dim;
}

}  // namespace

Rational inductive_dimension(const Graph& g) {
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    std::map<std::vector<int>, Rational> memo;
    return dimension_of_subset(g, all, memo);
}

}  // namespace curvex
