#include "curvex/verify.hpp"

#include "curvex/coloring.hpp"
#include "curvex/curvature.hpp"
#include "curvex/errors.hpp"
#include "curvex/prng.hpp"

namespace curvex {

namespace {

CheckResult check_handshake(const Graph& g) {
    CheckResult r{"handshake"};
    if (!handshake_check(g)) {
        r.ok = false;
        r.detail = "generalized handshake identity violated";
    }
    return r;
}

CheckResult check_gauss_bonnet(const Graph& g, const VerifyOptions& options) {
    CheckResult r{"gauss-bonnet"};
    Rational sum(0);
    for (int x = 0; x < g.vertex_count(); ++x) {
        Rational k = curvature(g, x);
        if (options.corrupt_curvature_vertex && *options.corrupt_curvature_vertex == x)
            k += Rational(1);
        sum += k;
    }
    const Rational chi(euler_characteristic(g));
    if (sum != chi) {
        r.ok = false;
        r.detail = "total curvature " + sum.str() + " != euler characteristic " + chi.str();
    }
    return r;
}

CheckResult check_poincare_hopf_injective(const Graph& g, const VerifyOptions& options) {
    CheckResult r{"poincare-hopf"};
    const int n = g.vertex_count();
    if (n == 0) return r;
    SplitMix64 rng(options.seed);
    VertexFunction f(n);
    for (int v = 0; v < n; ++v) f[v] = v + 1;
    for (int s = 0; s < options.injective_samples; ++s) {
        deterministic_shuffle(f, rng);
        const auto ph = poincare_hopf_check(g, f);
        if (!ph.ok) {
            r.ok = false;
            r.detail = "index sum " + std::to_string(ph.sum) + " != euler characteristic (sample " +
                       std::to_string(s) + ")";
            return r;
        }
    }
    return r;
}

}  // namespace

VerifyReport run_verification(const Graph& g, const VerifyOptions& options) {
    VerifyReport report;
    report.checks.push_back(check_handshake(g));
    report.checks.push_back(check_gauss_bonnet(g, options));
    report.checks.push_back(check_poincare_hopf_injective(g, options));

    if (!options.colors) return report;

    const int colors = *options.colors;
    const ColoringSpace space = enumerate_colorings(g, colors);
    if (space.empty() && g.vertex_count() > 0)
        throw EmptySpaceError("empty probability space: no proper coloring with " +
                              std::to_string(colors) + " colors");
    report.colorings_checked = static_cast<long long>(space.size());

    const long long chi = euler_characteristic(g);
    const int n = g.vertex_count();
    const auto index_vectors = coloring_index_vectors(g, space);

    CheckResult ph{"poincare-hopf-coloring"};
    for (std::size_t i = 0; i < index_vectors.size() && ph.ok; ++i) {
        long long sum = 0;
        for (int v : index_vectors[i]) sum += v;
        if (sum != chi) {
            ph.ok = false;
            ph.detail = "coloring " + std::to_string(i) + " has index sum " + std::to_string(sum) +
                        " != " + std::to_string(chi);
        }
    }
    report.checks.push_back(ph);

    CheckResult expectation{"index-expectation"};
    if (!space.empty()) {
        std::vector<long long> sums(n, 0);
        for (const auto& idx : index_vectors)
            for (int x = 0; x < n; ++x) sums[x] += idx[x];
        for (int x = 0; x < n && expectation.ok; ++x) {
            const Rational mean(to_bigint(sums[x]), to_bigint(static_cast<long long>(space.size())));
            const Rational k = curvature(g, x);
            if (mean != k) {
                expectation.ok = false;
                expectation.detail = "vertex " + std::to_string(x) + ": E[i_f] = " + mean.str() +
                                     " != K = " + k.str();
            }
        }
    }
    report.checks.push_back(expectation);

    CheckResult sublevel{"sublevel-expectation"};
    for (int x = 0; x < n && sublevel.ok; ++x) {
        const auto local = local_clique_vector(g, x);
        for (std::size_t k = 0; k < local.size() && sublevel.ok; ++k) {
            const Rational expected(to_bigint(local[k]), BigInt(static_cast<long>(k) + 2));
            const Rational measured =
                sublevel_count_expectation(g, colors, x, static_cast<int>(k));
            if (measured != expected) {
                sublevel.ok = false;
                sublevel.detail = "vertex " + std::to_string(x) + ", dim " + std::to_string(k) +
                                  ": E[V_k^-] = " + measured.str() + " != " + expected.str();
            }
        }
    }
    report.checks.push_back(sublevel);

    CheckResult symmetric{"symmetric-index-sum"};
    for (std::size_t i = 0; i < space.size() && symmetric.ok; ++i) {
        Rational sum(0);
        for (int x = 0; x < n; ++x) sum += symmetric_index(g, space.colorings[i], x);
        if (sum != Rational(chi)) {
            symmetric.ok = false;
            symmetric.detail = "coloring " + std::to_string(i) + " has symmetric index sum " +
                               sum.str() + " != " + std::to_string(chi);
        }
    }
    report.checks.push_back(symmetric);

    return report;
}

}  // namespace curvex
