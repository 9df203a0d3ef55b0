#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvex/graph.hpp"

namespace curvex {

struct VerifyOptions {
    /// When set, also checks every identity over the full space of
    /// colorings with this palette size.
    std::optional<int> colors;

    /// Number of seeded random injective functions fed to Poincare-Hopf.
    int injective_samples = 100;
    std::uint64_t seed = 0x5eedULL;

    /// Test hook: bumps the curvature at this vertex by one before the
    /// Gauss-Bonnet comparison, to prove the checker can fail.
    std::optional<int> corrupt_curvature_vertex;
};

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;  // failure description, names the vertex when known
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    long long colorings_checked = 0;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }

    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.ok) return &c;
        return nullptr;
    }
};

/// Runs the identity batch: generalized handshake, Gauss-Bonnet,
/// Poincare-Hopf over random injective functions, and — when colors is set —
/// Poincare-Hopf per coloring, index expectation vs curvature, sublevel
/// simplex-count expectation, and the symmetric-index sum.
VerifyReport run_verification(const Graph& g, const VerifyOptions& options = {});

}  // namespace curvex
