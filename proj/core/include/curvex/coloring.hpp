#pragma once

#include <cstddef>
#include <vector>

#include "curvex/graph.hpp"
#include "curvex/rational.hpp"

namespace curvex {

/// All proper colorings of a graph with a fixed palette {1..colors}, in
/// lexicographic order of value vectors. Closed under color permutations.
struct ColoringSpace {
    int colors = 0;
    int vertex_count = 0;
    std::vector<std::vector<int>> colorings;

    bool empty() const noexcept { return colorings.empty(); }
    std::size_t size() const noexcept { return colorings.size(); }
};

/// Visits every proper coloring with colors {1..colors} in lexicographic
/// order. The visitor receives the value vector and returns false to stop
/// the walk. Vertices are assigned in order 0..n-1, colors tried ascending.
template <class Visitor>
void for_each_coloring(const Graph& g, int colors, Visitor&& visit) {
    const int n = g.vertex_count();
    std::vector<int> f(n, 0);
    bool go = true;
    auto assign = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (!visit(static_cast<const std::vector<int>&>(f))) go = false;
            return;
        }
        for (int c = 1; c <= colors && go; ++c) {
            bool clash = false;
            for (int u : g.neighbors(v)) {
                if (u >= v) break;  // neighbors are sorted; later ones uncolored
                if (f[u] == c) { clash = true; break; }
            }
            if (clash) continue;
            f[v] = c;
            self(self, v + 1);
            f[v] = 0;
        }
    };
    assign(assign, 0);
}

/// Exhaustive, duplicate-free enumeration; empty when colors is below the
/// chromatic number.
ColoringSpace enumerate_colorings(const Graph& g, int colors);

/// Number of proper colorings, without materializing them.
long long count_colorings(const Graph& g, int colors);

/// Least c admitting a proper coloring; 0 for the empty graph. The search
/// starts from the clique-number lower bound and tries ascending c.
int chromatic_number(const Graph& g);

/// Integer polynomial C(x) counting proper colorings, stored by ascending
/// power. For n >= 1: C(0) = 0, monic of degree n, alternating signs.
class ChromaticPolynomial {
public:
    explicit ChromaticPolynomial(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt evaluate(const BigInt& x) const;

private:
    std::vector<BigInt> coeffs_;
};

/// Chromatic polynomial by deletion-contraction with memoized subproblems;
/// forests short-circuit to the closed form.
ChromaticPolynomial chromatic_polynomial(const Graph& g);

/// Index vector of every coloring in the space, in the space's order.
std::vector<std::vector<int>> coloring_index_vectors(const Graph& g, const ColoringSpace& space);

/// E[i_f(x)] per vertex over the uniform space of colorings with the given
/// palette size. Throws EmptySpaceError when no coloring exists.
std::vector<Rational> index_expectation(const Graph& g, int colors);

/// E[V_k^-(x)]: expected number of k-dimensional simplices of the unit
/// sphere of x whose values all lie below f(x). Equals V_k(x)/(k+2).
Rational sublevel_count_expectation(const Graph& g, int colors, int x, int k);

/// Exact moments of the index random variable f -> i_f(x).
struct IndexMoments {
    int colors = 0;
    long long coloring_count = 0;
    std::vector<std::vector<Rational>> vertex_moments;  // [k-1][x] = a_k(x)
    std::vector<Rational> total_moments;                // [k-1]    = a_k
};

IndexMoments index_moments(const Graph& g, int colors, int max_k);

/// Var[i_f(x)] = a_2(x) - a_1(x)^2 per vertex, exact.
std::vector<Rational> index_variance(const Graph& g, int colors);

/// Standard deviation per vertex, as doubles for reporting.
std::vector<double> index_stddev(const Graph& g, int colors);

/// Chromatic richness C(c)/c! at c = chromatic number; 1 exactly for
/// chromatically poor graphs (unique coloring up to color permutation).
Rational richness(const Graph& g);

}  // namespace curvex
