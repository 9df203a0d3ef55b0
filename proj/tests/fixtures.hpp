#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvex/generators.hpp"
#include "curvex/graph.hpp"

namespace fixtures {

struct NamedGraph {
    std::string name;
    curvex::Graph graph;
};

// The named graphs every identity suite runs over.
inline std::vector<NamedGraph> standard_set() {
    using namespace curvex;
    return {
        {"diamond", diamond_graph()},   {"house", house_graph()},
        {"octahedron", octahedron_graph()}, {"wheel4", wheel_graph(4)},
        {"cycle5", cycle_graph(5)},     {"path5", path_graph(5)},
        {"fig6", fig6_graph()},         {"cytosine", cytosine_graph()},
    };
}

// Deterministic random-graph batches used by the property suites.
inline std::vector<curvex::Graph> seeded_graphs(int count, int n_min, int n_max,
                                                std::uint64_t seed0, int p_num = 0,
                                                int p_den = 4) {
    std::vector<curvex::Graph> out;
    out.reserve(count);
    const int span = n_max - n_min + 1;
    for (int i = 0; i < count; ++i) {
        const int n = n_min + i % span;
        const int num = p_num > 0 ? p_num : 1 + i % 3;  // cycle p over 1/4, 2/4, 3/4
        out.push_back(curvex::erdos_renyi_graph(n, num, p_den, seed0 + i));
    }
    return out;
}

// expected 4-colorings of the fig6 fixture (lexicographic) and the
// index vector of each one, same row order
inline const std::vector<std::vector<int>> kFig6Colorings = {
    {1, 2, 3, 4, 3, 3, 1, 2, 1, 4},
    {1, 2, 3, 4, 3, 3, 2, 1, 1, 4},
    {1, 2, 3, 4, 4, 1, 3, 2, 3, 1},
    {1, 2, 4, 3, 3, 1, 4, 2, 4, 1},
    {1, 2, 4, 3, 4, 4, 1, 2, 1, 3},
    {1, 2, 4, 3, 4, 4, 2, 1, 1, 3},
    {1, 3, 2, 4, 2, 2, 1, 3, 1, 4},
    {1, 3, 2, 4, 2, 2, 3, 1, 1, 4},
    {1, 3, 2, 4, 4, 1, 2, 3, 2, 1},
    {1, 3, 4, 2, 2, 1, 4, 3, 4, 1},
    {1, 3, 4, 2, 4, 4, 1, 3, 1, 2},
    {1, 3, 4, 2, 4, 4, 3, 1, 1, 2},
    {1, 4, 2, 3, 2, 2, 1, 4, 1, 3},
    {1, 4, 2, 3, 2, 2, 4, 1, 1, 3},
    {1, 4, 2, 3, 3, 1, 2, 4, 2, 1},
    {1, 4, 3, 2, 2, 1, 3, 4, 3, 1},
    {1, 4, 3, 2, 3, 3, 1, 4, 1, 2},
    {1, 4, 3, 2, 3, 3, 4, 1, 1, 2},
    {2, 1, 3, 4, 3, 3, 1, 2, 2, 4},
    {2, 1, 3, 4, 3, 3, 2, 1, 2, 4},
    {2, 1, 3, 4, 4, 2, 3, 1, 3, 2},
    {2, 1, 4, 3, 3, 2, 4, 1, 4, 2},
    {2, 1, 4, 3, 4, 4, 1, 2, 2, 3},
    {2, 1, 4, 3, 4, 4, 2, 1, 2, 3},
    {2, 3, 1, 4, 1, 1, 2, 3, 2, 4},
    {2, 3, 1, 4, 1, 1, 3, 2, 2, 4},
    {2, 3, 1, 4, 4, 2, 1, 3, 1, 2},
    {2, 3, 4, 1, 1, 2, 4, 3, 4, 2},
    {2, 3, 4, 1, 4, 4, 2, 3, 2, 1},
    {2, 3, 4, 1, 4, 4, 3, 2, 2, 1},
    {2, 4, 1, 3, 1, 1, 2, 4, 2, 3},
    {2, 4, 1, 3, 1, 1, 4, 2, 2, 3},
    {2, 4, 1, 3, 3, 2, 1, 4, 1, 2},
    {2, 4, 3, 1, 1, 2, 3, 4, 3, 2},
    {2, 4, 3, 1, 3, 3, 2, 4, 2, 1},
    {2, 4, 3, 1, 3, 3, 4, 2, 2, 1},
    {3, 1, 2, 4, 2, 2, 1, 3, 3, 4},
    {3, 1, 2, 4, 2, 2, 3, 1, 3, 4},
    {3, 1, 2, 4, 4, 3, 2, 1, 2, 3},
    {3, 1, 4, 2, 2, 3, 4, 1, 4, 3},
    {3, 1, 4, 2, 4, 4, 1, 3, 3, 2},
    {3, 1, 4, 2, 4, 4, 3, 1, 3, 2},
    {3, 2, 1, 4, 1, 1, 2, 3, 3, 4},
    {3, 2, 1, 4, 1, 1, 3, 2, 3, 4},
    {3, 2, 1, 4, 4, 3, 1, 2, 1, 3},
    {3, 2, 4, 1, 1, 3, 4, 2, 4, 3},
    {3, 2, 4, 1, 4, 4, 2, 3, 3, 1},
    {3, 2, 4, 1, 4, 4, 3, 2, 3, 1},
    {3, 4, 1, 2, 1, 1, 3, 4, 3, 2},
    {3, 4, 1, 2, 1, 1, 4, 3, 3, 2},
    {3, 4, 1, 2, 2, 3, 1, 4, 1, 3},
    {3, 4, 2, 1, 1, 3, 2, 4, 2, 3},
    {3, 4, 2, 1, 2, 2, 3, 4, 3, 1},
    {3, 4, 2, 1, 2, 2, 4, 3, 3, 1},
    {4, 1, 2, 3, 2, 2, 1, 4, 4, 3},
    {4, 1, 2, 3, 2, 2, 4, 1, 4, 3},
    {4, 1, 2, 3, 3, 4, 2, 1, 2, 4},
    {4, 1, 3, 2, 2, 4, 3, 1, 3, 4},
    {4, 1, 3, 2, 3, 3, 1, 4, 4, 2},
    {4, 1, 3, 2, 3, 3, 4, 1, 4, 2},
    {4, 2, 1, 3, 1, 1, 2, 4, 4, 3},
    {4, 2, 1, 3, 1, 1, 4, 2, 4, 3},
    {4, 2, 1, 3, 3, 4, 1, 2, 1, 4},
    {4, 2, 3, 1, 1, 4, 3, 2, 3, 4},
    {4, 2, 3, 1, 3, 3, 2, 4, 4, 1},
    {4, 2, 3, 1, 3, 3, 4, 2, 4, 1},
    {4, 3, 1, 2, 1, 1, 3, 4, 4, 2},
    {4, 3, 1, 2, 1, 1, 4, 3, 4, 2},
    {4, 3, 1, 2, 2, 4, 1, 3, 1, 4},
    {4, 3, 2, 1, 1, 4, 2, 3, 2, 4},
    {4, 3, 2, 1, 2, 2, 3, 4, 4, 1},
    {4, 3, 2, 1, 2, 2, 4, 3, 4, 1},
};

inline const std::vector<std::vector<int>> kFig6IndexVectors = {
    {1, -1, -1, 1, -2, -1, 1, 0, 1, 1},
    {1, -1, -1, 1, -2, -1, 0, 1, 1, 1},
    {1, -2, 0, 1, -1, 1, 0, -1, 0, 1},
    {1, -2, 1, 0, -1, 1, 0, -1, 0, 1},
    {1, -1, 1, -1, -1, 0, 1, 0, 1, -1},
    {1, -1, 1, -1, -1, 0, 0, 1, 1, -1},
    {1, -2, 0, 1, -2, 0, 1, -1, 1, 1},
    {1, -2, -1, 1, -2, 0, 0, 1, 1, 1},
    {1, -1, -1, 1, -1, 1, -1, 0, 0, 1},
    {1, -1, 1, -1, -1, 1, 0, -1, 0, 1},
    {1, -1, 1, -1, -1, 0, 1, 0, 1, -1},
    {1, -1, 1, -1, -1, 0, 0, 1, 1, -1},
    {1, 0, 0, -1, -2, 0, 1, 1, 1, -1},
    {1, 0, -1, 0, -2, 0, 0, 1, 1, 0},
    {1, 0, -1, -1, -1, 1, -1, 1, 0, 1},
    {1, 0, -1, -1, -1, 1, -1, 1, 0, 1},
    {1, 0, -1, -1, -1, 0, 1, 1, 1, -1},
    {1, 0, 0, -1, -1, 0, 0, 1, 1, -1},
    {0, 1, -1, 1, -2, -1, 1, 0, 0, 1},
    {0, 1, -1, 1, -2, -1, 0, 1, 0, 1},
    {0, 1, 0, 1, -1, -1, 0, 1, 0, -1},
    {0, 1, 1, 0, -1, -1, 0, 1, 0, -1},
    {0, 1, 1, -1, -1, 0, 1, 0, 0, -1},
    {0, 1, 1, -1, -1, 0, 0, 1, 0, -1},
    {-1, -2, 1, 1, 1, 1, -1, -1, 0, 1},
    {-1, -2, 1, 1, 1, 1, 0, -2, 0, 1},
    {0, -1, 1, 1, -1, 0, 1, 0, 1, -2},
    {-1, -1, 1, 1, 1, 0, 0, -1, 0, 0},
    {0, -1, 1, 1, -1, 0, -1, 0, 0, 1},
    {0, -1, 1, 1, -1, 0, 0, -1, 0, 1},
    {-1, 0, 1, -1, 1, 1, -1, 1, 0, -1},
    {-1, 0, 1, 0, 1, 1, 0, -2, 0, 0},
    {0, 0, 1, -1, -1, 0, 1, 1, 1, -2},
    {-1, 0, -1, 1, 1, 0, -1, 1, 0, 0},
    {0, 0, -1, 1, -1, 0, -1, 1, 0, 1},
    {0, 0, 0, 1, -1, 0, 0, -1, 0, 1},
    {-1, 1, 0, 1, 0, -1, 1, -1, -1, 1},
    {-1, 1, -1, 1, 0, -1, 0, 1, -1, 1},
    {0, 1, -1, 1, -1, -1, 0, 1, 0, 0},
    {-1, 1, 1, -1, 0, 0, 0, 1, 0, -1},
    {0, 1, 1, -1, -1, 0, 1, 0, 0, -1},
    {0, 1, 1, -1, -1, 0, 0, 1, 0, -1},
    {-1, -1, 1, 1, 1, 1, -1, -1, -1, 1},
    {-1, -1, 1, 1, 1, 1, 0, -2, -1, 1},
    {0, -1, 1, 1, -1, -1, 1, -1, 1, 0},
    {-1, 0, 1, 1, 1, 0, 0, -1, 0, -1},
    {0, -1, 1, 1, -1, 0, -1, 0, 0, 1},
    {0, -1, 1, 1, -1, 0, 0, -1, 0, 1},
    {-1, 0, 1, -1, 1, 1, -1, 1, 0, -1},
    {-1, 0, 1, -1, 1, 1, 0, 0, 0, -1},
    {-1, 0, 1, -1, -1, 0, 1, 1, 1, -1},
    {-1, 0, 0, 1, 1, 0, -1, 1, 0, -1},
    {-1, 0, -1, 1, 0, 0, -1, 1, 0, 1},
    {-1, 0, -1, 1, 0, 0, 0, 0, 0, 1},
    {-1, 1, 0, 0, 0, -1, 1, 1, 0, -1},
    {-1, 1, -1, 1, 0, -1, 0, 1, 0, 0},
    {-1, 1, -1, 0, -1, 0, 0, 1, 0, 1},
    {-1, 1, 0, -1, 0, 0, 0, 1, -1, 1},
    {-1, 1, 0, -1, 0, 0, 1, 1, 0, -1},
    {-1, 1, 1, -1, 0, 0, 0, 1, 0, -1},
    {-1, -1, 1, 0, 1, 1, -1, 1, 0, -1},
    {-1, -1, 1, 1, 1, 1, 0, -2, 0, 0},
    {-1, -1, 1, 0, -1, 0, 1, -1, 1, 1},
    {-1, 0, 0, 1, 1, 0, 0, -1, -1, 1},
    {-1, -1, 0, 1, 0, 0, -1, 1, 0, 1},
    {-1, -1, 1, 1, 0, 0, 0, -1, 0, 1},
    {-1, 0, 1, -1, 1, 1, -1, 1, 0, -1},
    {-1, 0, 1, -1, 1, 1, 0, 0, 0, -1},
    {-1, -1, 1, -1, -1, 0, 1, 0, 1, 1},
    {-1, -1, 0, 1, 1, 0, -1, 0, 0, 1},
    {-1, 0, -1, 1, 0, 0, -1, 1, 0, 1},
    {-1, 0, -1, 1, 0, 0, 0, 0, 0, 1},
};

// The worked example: one specific coloring of fig6 and its index vector.
inline const std::vector<int> kFig6ExampleColoring = {1, 2, 3, 4, 3, 3, 1, 2, 1, 4};
inline const std::vector<int> kFig6ExampleIndices = {1, -1, -1, 1, -2, -1, 1, 0, 1, 1};

}  // namespace fixtures
