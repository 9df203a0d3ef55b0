#include "curvex/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "curvex/errors.hpp"

namespace curvex {

ColoringSpace enumerate_colorings(const Graph& g, int colors) {
    if (colors < 1) throw InputError("color count must be at least 1");
    ColoringSpace space;
    space.colors = colors;
    space.vertex_count = g.vertex_count();
    for_each_coloring(g, colors, [&](const std::vector<int>& f) {
        space.colorings.push_back(f);
        return true;
    });
    return space;
}

long long count_colorings(const Graph& g, int colors) {
    if (colors < 1) throw InputError("color count must be at least 1");
    long long count = 0;
    for_each_coloring(g, colors, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

int chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    const int clique_floor = static_cast<int>(f_vector(g).counts.size());
    for (int c = clique_floor;; ++c) {
        bool found = false;
        for_each_coloring(g, c, [&](const std::vector<int>&) {
            found = true;
            return false;
        });
        if (found) return c;
    }
}

// ---------------------------------------------------------------------------
// Chromatic polynomial
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<BigInt>;  // ascending powers

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

// a * (x - 1)^k
Poly mul_x_minus_one(Poly a, int k) {
    for (int i = 0; i < k; ++i) {
        Poly next(a.size() + 1, 0);
        for (std::size_t j = 0; j < a.size(); ++j) {
            next[j + 1] += a[j];
            next[j] -= a[j];
        }
        a = std::move(next);
    }
    return a;
}

Poly x_power(int n) {
    Poly p(n + 1, 0);
    p[n] = 1;
    return p;
}

int component_count(int n, const std::vector<Edge>& edges) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int comps = n;
    for (auto [u, v] : edges) {
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --comps;
        }
    }
    return comps;
}

// Simple contraction of edge (u,v), u < v: v merges into u, labels above v
// shift down, parallel edges collapse.
std::pair<int, std::vector<Edge>> contract(int n, const std::vector<Edge>& edges, Edge e) {
    auto [cu, cv] = e;
    std::vector<Edge> out;
    out.reserve(edges.size());
    auto relabel = [&](int w) {
        if (w == cv) w = cu;
        return w > cv ? w - 1 : w;
    };
    for (auto [u, v] : edges) {
        int a = relabel(u), b = relabel(v);
        if (a == b) continue;  // the contracted edge itself
        if (a > b) std::swap(a, b);
        out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return {n - 1, std::move(out)};
}

struct PolyMemo {
    std::map<std::vector<int>, Poly> cache;

    static std::vector<int> key(int n, const std::vector<Edge>& edges) {
        std::vector<int> k;
        k.reserve(1 + 2 * edges.size());
        k.push_back(n);
        for (auto [u, v] : edges) {
            k.push_back(u);
            k.push_back(v);
        }
        return k;
    }
};

Poly chromatic_poly_rec(int n, std::vector<Edge> edges, PolyMemo& memo) {
    if (edges.empty()) return x_power(n);

    const int comps = component_count(n, edges);
    if (static_cast<int>(edges.size()) == n - comps) {
        // forest: x^comps (x-1)^{edge count}
        return mul_x_minus_one(x_power(comps), static_cast<int>(edges.size()));
    }

    auto key = PolyMemo::key(n, edges);
    if (auto it = memo.cache.find(key); it != memo.cache.end()) return it->second;

    const Edge e = edges.front();
    std::vector<Edge> deleted(edges.begin() + 1, edges.end());
    auto [cn, cedges] = contract(n, edges, e);

    Poly result = poly_sub(chromatic_poly_rec(n, std::move(deleted), memo),
                           chromatic_poly_rec(cn, std::move(cedges), memo));
    memo.cache.emplace(std::move(key), result);
    return result;
}

}  // namespace

ChromaticPolynomial::ChromaticPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
}

BigInt ChromaticPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ChromaticPolynomial chromatic_polynomial(const Graph& g) {
    PolyMemo memo;
    return ChromaticPolynomial(chromatic_poly_rec(g.vertex_count(), g.edges(), memo));
}

// ---------------------------------------------------------------------------
// Index statistics over the coloring space
// ---------------------------------------------------------------------------

namespace {

// Cliques of each unit sphere, in host-graph labels, so that per-coloring
// index evaluation is a pure counting pass.
struct SphereTable {
    // cliques[x] = list of (vertex list, dim) inside S(x)
    std::vector<std::vector<Simplex>> cliques;

    explicit SphereTable(const Graph& g) {
        const int n = g.vertex_count();
        cliques.resize(n);
        for (int x = 0; x < n; ++x) {
            const auto sphere = unit_sphere(g, x);
            const auto by_dim = enumerate_cliques(sphere.graph);
            for (const auto& level : by_dim) {
                for (const auto& s : level) {
                    Simplex host;
                    host.vertices.reserve(s.vertices.size());
                    for (int v : s.vertices) host.vertices.push_back(sphere.original[v]);
                    cliques[x].push_back(std::move(host));
                }
            }
        }
    }

    // i_f(x) = 1 - sum over sphere cliques fully below f(x) of (-1)^dim
    int index_at(const VertexFunction& f, int x) const {
        int chi = 0;
        for (const auto& s : cliques[x]) {
            bool below = true;
            for (int v : s.vertices) {
                if (f[v] >= f[x]) { below = false; break; }
            }
            if (below) chi += (s.dim() % 2 == 0) ? 1 : -1;
        }
        return 1 - chi;
    }

    // number of dim-k sphere cliques of x fully below f(x)
    long long sublevel_count(const VertexFunction& f, int x, int k) const {
        long long count = 0;
        for (const auto& s : cliques[x]) {
            if (s.dim() != k) continue;
            bool below = true;
            for (int v : s.vertices) {
                if (f[v] >= f[x]) { below = false; break; }
            }
            if (below) ++count;
        }
        return count;
    }
};

}  // namespace

std::vector<std::vector<int>> coloring_index_vectors(const Graph& g, const ColoringSpace& space) {
    const SphereTable table(g);
    std::vector<std::vector<int>> out;
    out.reserve(space.size());
    for (const auto& f : space.colorings) {
        std::vector<int> idx(g.vertex_count());
        for (int x = 0; x < g.vertex_count(); ++x) idx[x] = table.index_at(f, x);
        out.push_back(std::move(idx));
    }
    return out;
}

std::vector<Rational> index_expectation(const Graph& g, int colors) {
    const SphereTable table(g);
    const int n = g.vertex_count();
    std::vector<long long> sums(n, 0);
    long long count = 0;
    for_each_coloring(g, colors, [&](const std::vector<int>& f) {
        for (int x = 0; x < n; ++x) sums[x] += table.index_at(f, x);
        ++count;
        return true;
    });
    if (count == 0)
        throw EmptySpaceError("empty probability space: no proper coloring with " +
                              std::to_string(colors) + " colors");
    std::vector<Rational> expectation;
    expectation.reserve(n);
    for (int x = 0; x < n; ++x) expectation.emplace_back(to_bigint(sums[x]), to_bigint(count));
    return expectation;
}

Rational sublevel_count_expectation(const Graph& g, int colors, int x, int k) {
    if (x < 0 || x >= g.vertex_count())
        throw InputError("vertex out of range: " + std::to_string(x));
    if (k < 0) throw InputError("negative simplex dimension");
    const SphereTable table(g);
    long long total = 0;
    long long count = 0;
    for_each_coloring(g, colors, [&](const std::vector<int>& f) {
        total += table.sublevel_count(f, x, k);
        ++count;
        return true;
    });
    if (count == 0)
        throw EmptySpaceError("empty probability space: no proper coloring with " +
                              std::to_string(colors) + " colors");
    return Rational(to_bigint(total), to_bigint(count));
}

IndexMoments index_moments(const Graph& g, int colors, int max_k) {
    if (max_k < 1) throw InputError("moment order must be at least 1");
    const SphereTable table(g);
    const int n = g.vertex_count();

    std::vector<std::vector<BigInt>> sums(max_k, std::vector<BigInt>(n, 0));
    long long count = 0;
    for_each_coloring(g, colors, [&](const std::vector<int>& f) {
        for (int x = 0; x < n; ++x) {
            const int i = table.index_at(f, x);
            BigInt power = 1;
            for (int k = 0; k < max_k; ++k) {
                power *= i;
                sums[k][x] += power;
            }
        }
        ++count;
        return true;
    });
    if (count == 0)
        throw EmptySpaceError("empty probability space: no proper coloring with " +
                              std::to_string(colors) + " colors");

    IndexMoments m;
    m.colors = colors;
    m.coloring_count = count;
    m.vertex_moments.resize(max_k);
    for (int k = 0; k < max_k; ++k) {
        BigInt total = 0;
        m.vertex_moments[k].reserve(n);
        for (int x = 0; x < n; ++x) {
            m.vertex_moments[k].emplace_back(sums[k][x], to_bigint(count));
            total += sums[k][x];
        }
        m.total_moments.emplace_back(total, to_bigint(count));
    }
    return m;
}

std::vector<Rational> index_variance(const Graph& g, int colors) {
    const IndexMoments m = index_moments(g, colors, 2);
    std::vector<Rational> var;
    var.reserve(g.vertex_count());
    for (int x = 0; x < g.vertex_count(); ++x) {
        const Rational& a1 = m.vertex_moments[0][x];
        var.push_back(m.vertex_moments[1][x] - a1 * a1);
    }
    return var;
}

std::vector<double> index_stddev(const Graph& g, int colors) {
    std::vector<double> sigma;
    for (const Rational& v : index_variance(g, colors)) sigma.push_back(std::sqrt(v.to_double()));
    return sigma;
}

Rational richness(const Graph& g) {
    if (g.vertex_count() < 1) throw InputError("richness needs at least one vertex");
    const int chrom = chromatic_number(g);
    const long long count = count_colorings(g, chrom);
    return Rational(to_bigint(count), factorial(static_cast<unsigned long>(chrom)));
}

}  // namespace curvex
