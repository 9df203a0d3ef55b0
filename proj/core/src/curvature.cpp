#include "curvex/curvature.hpp"

#include "curvex/errors.hpp"

namespace curvex {

Rational curvature(const Graph& g, int x) {
    const auto local = local_clique_vector(g, x);
    Rational k(1);  // V_{-1}(x)/1
    long sign = -1;
    for (std::size_t i = 0; i < local.size(); ++i) {
        k += Rational(sign * local[i], static_cast<long>(i) + 2);
        sign = -sign;
    }
    return k;
}

std::vector<Rational> curvature_vector(const Graph& g) {
    std::vector<Rational> ks;
    ks.reserve(g.vertex_count());
    for (int x = 0; x < g.vertex_count(); ++x) ks.push_back(curvature(g, x));
    return ks;
}

GaussBonnetResult gauss_bonnet_check(const Graph& g) {
    Rational sum(0);
    for (int x = 0; x < g.vertex_count(); ++x) sum += curvature(g, x);
    return {sum, sum == Rational(euler_characteristic(g))};
}

bool is_locally_injective(const Graph& g, const VertexFunction& f) {
    for (auto [u, v] : g.edges())
        if (f[u] == f[v]) return false;
    return true;
}

namespace {

void require_no_tie(const Graph& g, const VertexFunction& f, int x) {
    for (int y : g.neighbors(x))
        if (f[y] == f[x]) throw LocalInjectivityError(x);
}

int one_sided_index(const Graph& g, const VertexFunction& f, int x, Order order) {
    require_no_tie(g, f, x);
    return 1 - static_cast<int>(euler_characteristic(sub_sphere(g, f, x, order).graph));
}

}  // namespace

int index(const Graph& g, const VertexFunction& f, int x) {
    if (x < 0 || x >= g.vertex_count())
        throw InputError("vertex out of range: " + std::to_string(x));
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw InputError("vertex function has wrong length");
    return one_sided_index(g, f, x, Order::below);
}

std::vector<int> index_vector(const Graph& g, const VertexFunction& f) {
    std::vector<int> idx;
    idx.reserve(g.vertex_count());
    for (int x = 0; x < g.vertex_count(); ++x) idx.push_back(index(g, f, x));
    return idx;
}

PoincareHopfResult poincare_hopf_check(const Graph& g, const VertexFunction& f) {
    long long sum = 0;
    for (int v : index_vector(g, f)) sum += v;
    return {sum, sum == euler_characteristic(g)};
}

Rational symmetric_index(const Graph& g, const VertexFunction& f, int x) {
    const int below = index(g, f, x);
    const int above = one_sided_index(g, f, x, Order::above);
    return Rational(below + above, 2);
}

}  // namespace curvex
