#pragma once

#include <vector>

#include "curvex/graph.hpp"
#include "curvex/rational.hpp"

namespace curvex {

/// Curvature K(x) = sum_k (-1)^k V_{k-1}(x)/(k+1), with V_{-1}(x) = 1 and
/// V_k(x) the number of K_{k+1} subgraphs of the unit sphere of x. Exact.
/// An isolated vertex has curvature 1; a triangle-free vertex 1 - deg(x)/2.
Rational curvature(const Graph& g, int x);

/// Curvature at every vertex.
std::vector<Rational> curvature_vector(const Graph& g);

struct GaussBonnetResult {
    Rational sum;
    bool ok;  // sum equals the Euler characteristic exactly
};

/// Verifies sum_x K(x) = chi(G).
GaussBonnetResult gauss_bonnet_check(const Graph& g);

/// True when no edge carries equal f-values.
bool is_locally_injective(const Graph& g, const VertexFunction& f);

/// Index i_f(x) = 1 - chi(S_f^-(x)). Requires f to differ from f(x) on every
/// neighbor of x; a tie raises LocalInjectivityError. Local minima have
/// index 1.
int index(const Graph& g, const VertexFunction& f, int x);

/// Index at every vertex. Requires f locally injective everywhere.
std::vector<int> index_vector(const Graph& g, const VertexFunction& f);

struct PoincareHopfResult {
    long long sum;
    bool ok;  // sum equals the Euler characteristic
};

/// Verifies sum_x i_f(x) = chi(G) for a locally injective f.
PoincareHopfResult poincare_hopf_check(const Graph& g, const VertexFunction& f);

/// Symmetric index j_f(x) = (i_f(x) + i_{-f}(x))/2, where -f reverses the
/// value order (neighbors strictly above f(x) count). Summed over vertices
/// it also gives chi(G).
Rational symmetric_index(const Graph& g, const VertexFunction& f, int x);

}  // namespace curvex
