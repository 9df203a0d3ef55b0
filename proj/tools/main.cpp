// curvex: discrete curvature, Poincare-Hopf indices, and coloring
// probability spaces on finite simple graphs, in exact arithmetic.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "curvex/coloring.hpp"
#include "curvex/curvature.hpp"
#include "curvex/errors.hpp"
#include "curvex/generators.hpp"
#include "curvex/graph.hpp"
#include "curvex/json_io.hpp"
#include "curvex/verify.hpp"
#include "json.hpp"

namespace {

using curvex::Graph;
using curvex::Rational;
using json = nlohmann::ordered_json;

struct VerifyFailure {};  // maps to exit code 1

// ---------------------------------------------------------------------------
// formatting helpers
// ---------------------------------------------------------------------------

// Three decimals, ties to even; the only decimals in any output.
std::string format3(double v) {
    const bool neg = v < 0;
    const double scaled = std::fabs(v) * 1000.0;
    auto mantissa = static_cast<long long>(std::nearbyint(scaled));
    std::ostringstream out;
    if (neg && mantissa != 0) out << '-';
    out << mantissa / 1000 << '.';
    const long long frac = mantissa % 1000;
    out << char('0' + frac / 100) << char('0' + frac / 10 % 10) << char('0' + frac % 10);
    return out.str();
}

double rounded3(double v) { return std::stod(format3(v)); }

template <class T, class Fmt>
std::string parenthesized(const std::vector<T>& values, Fmt&& fmt) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += fmt(values[i]);
    }
    return out + ")";
}

std::string rationals_str(const std::vector<Rational>& values) {
    return parenthesized(values, [](const Rational& r) { return r.str(); });
}

std::string counts_str(const std::vector<long long>& values) {
    return parenthesized(values, [](long long v) { return std::to_string(v); });
}

std::vector<std::string> rationals_json(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& r : values) out.push_back(r.str());
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw curvex::InputError("cannot write file: " + out_path);
    out << text;
}

std::string csv_header(int n, const char* prefix = "") {
    std::string line;
    for (int v = 0; v < n; ++v) {
        if (v) line += ',';
        line += prefix + std::to_string(v);
    }
    return line + "\n";
}

std::string csv_row(const std::vector<int>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line += ',';
        line += std::to_string(values[i]);
    }
    return line + "\n";
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenOptions {
    std::string name;
    std::vector<long long> params;
    std::string out_path;
};

void run_gen(const GenOptions& opt) {
    const Graph g = curvex::gen_named({opt.name, opt.params});
    emit(curvex::graph_to_json(g) + "\n", opt.out_path);
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeOptions {
    std::string file;
    std::optional<int> colors;
    int moments = 0;
    bool as_json = false;
};

void run_analyze(const AnalyzeOptions& opt) {
    const Graph g = curvex::load_graph(opt.file);
    const int n = g.vertex_count();

    const auto fvec = curvex::f_vector(g);
    const long long chi = curvex::euler_characteristic(g);
    const int chrom = curvex::chromatic_number(g);
    const Rational dim = curvex::inductive_dimension(g);
    const auto ks = curvex::curvature_vector(g);
    const bool gb_ok = curvex::gauss_bonnet_check(g).ok;
    const bool hs_ok = curvex::handshake_check(g);

    std::vector<std::vector<long long>> locals;
    for (int x = 0; x < n; ++x) locals.push_back(curvex::local_clique_vector(g, x));

    std::optional<long long> coloring_count;
    std::optional<Rational> rich;
    std::vector<Rational> expectation;
    std::vector<double> sigma;
    bool expectation_matches = false;
    std::optional<curvex::IndexMoments> moments;

    if (opt.colors) {
        const int c = *opt.colors;
        if (c < 1) throw curvex::InputError("--colors must be at least 1");
        coloring_count = curvex::count_colorings(g, c);
        if (*coloring_count == 0)
            throw curvex::EmptySpaceError("empty probability space: no proper coloring with " +
                                          std::to_string(c) + " colors");
        if (n >= 1) rich = curvex::richness(g);
        expectation = curvex::index_expectation(g, c);
        sigma = curvex::index_stddev(g, c);
        expectation_matches = expectation == ks;
        if (opt.moments > 0) moments = curvex::index_moments(g, c, opt.moments);
    }

    if (opt.as_json) {
        json doc;
        doc["n"] = n;
        doc["edge_count"] = g.edge_count();
        doc["f_vector"] = fvec.counts;
        doc["euler_characteristic"] = chi;
        doc["chromatic_number"] = chrom;
        doc["inductive_dimension"] = dim.str();
        doc["checks"] = {{"gauss_bonnet", gb_ok}, {"handshake", hs_ok}};
        auto& rows = doc["vertices"] = json::array();
        for (int x = 0; x < n; ++x) {
            json row;
            row["vertex"] = x;
            row["degree"] = g.degree(x);
            row["clique_vector"] = locals[x];
            row["curvature"] = ks[x].str();
            if (opt.colors) {
                row["index_expectation"] = expectation[x].str();
                row["sigma"] = rounded3(sigma[x]);
            }
            rows.push_back(std::move(row));
        }
        if (opt.colors) {
            json c;
            c["colors"] = *opt.colors;
            c["count"] = *coloring_count;
            if (rich) c["richness"] = rich->str();
            c["expectation_matches_curvature"] = expectation_matches;
            doc["coloring"] = std::move(c);
            if (moments) {
                json m;
                m["total"] = rationals_json(moments->total_moments);
                auto& per_vertex = m["per_vertex"] = json::array();
                for (const auto& row : moments->vertex_moments)
                    per_vertex.push_back(rationals_json(row));
                doc["moments"] = std::move(m);
            }
        }
        std::cout << doc.dump(2) << "\n";
        return;
    }

    std::cout << "graph: " << n << " vertices, " << g.edge_count() << " edges\n";
    std::cout << "f-vector: " << counts_str(fvec.counts) << "\n";
    std::cout << "euler characteristic: " << chi << "\n";
    std::cout << "chromatic number: " << chrom << "\n";
    std::cout << "inductive dimension: " << dim.str() << " (" << format3(dim.to_double())
              << ")\n";
    std::cout << "checks: gauss-bonnet " << (gb_ok ? "OK" : "FAIL") << ", handshake "
              << (hs_ok ? "OK" : "FAIL") << "\n\n";

    std::vector<std::vector<std::string>> table;
    table.push_back({"vertex", "degree", "V(x)", "K(x)"});
    if (opt.colors) {
        table[0].push_back("E[i_f]");
        table[0].push_back("sigma");
    }
    for (int x = 0; x < n; ++x) {
        std::vector<std::string> row = {std::to_string(x), std::to_string(g.degree(x)),
                                        counts_str(locals[x]), ks[x].str()};
        if (opt.colors) {
            row.push_back(expectation[x].str());
            row.push_back(format3(sigma[x]));
        }
        table.push_back(std::move(row));
    }
    std::vector<std::size_t> widths(table[0].size(), 0);
    for (const auto& row : table)
        for (std::size_t col = 0; col < row.size(); ++col)
            widths[col] = std::max(widths[col], row[col].size());
    for (const auto& row : table) {
        for (std::size_t col = 0; col < row.size(); ++col) {
            std::cout << row[col];
            if (col + 1 < row.size())
                std::cout << std::string(widths[col] - row[col].size() + 2, ' ');
        }
        std::cout << "\n";
    }

    if (opt.colors) {
        std::cout << "\ncolorings: " << *coloring_count << " (" << *opt.colors << " colors)\n";
        if (rich) std::cout << "richness: " << rich->str() << "\n";
        std::cout << "E[i_f]=K: " << (expectation_matches ? "OK" : "MISMATCH") << "\n";
        std::cout << "sigma: "
                  << parenthesized(sigma, [](double s) { return format3(s); }) << "\n";
        if (moments) {
            for (std::size_t k = 0; k < moments->total_moments.size(); ++k)
                std::cout << "a_" << k + 1 << " = " << moments->total_moments[k].str() << "\n";
            for (std::size_t k = 0; k < moments->vertex_moments.size(); ++k)
                std::cout << "a_" << k + 1 << "(x) = " << rationals_str(moments->vertex_moments[k])
                          << "\n";
        }
    }
}

// ---------------------------------------------------------------------------
// colorings
// ---------------------------------------------------------------------------

struct ColoringsOptions {
    std::string file;
    int colors = 0;
    std::string format = "csv";
    bool with_indices = false;
    std::string out_path;
};

void run_colorings(const ColoringsOptions& opt) {
    const Graph g = curvex::load_graph(opt.file);
    if (opt.colors < 1) throw curvex::InputError("-c/--colors must be at least 1");
    const auto space = curvex::enumerate_colorings(g, opt.colors);
    std::vector<std::vector<int>> indices;
    if (opt.with_indices) indices = curvex::coloring_index_vectors(g, space);

    std::string text;
    if (opt.format == "json") {
        json doc;
        doc["n"] = g.vertex_count();
        doc["colors"] = opt.colors;
        doc["count"] = space.size();
        doc["colorings"] = space.colorings;
        if (opt.with_indices) doc["indices"] = indices;
        text = doc.dump() + "\n";
    } else if (opt.format == "csv") {
        const int n = g.vertex_count();
        if (opt.with_indices) text += "# colorings\n";
        text += csv_header(n);
        for (const auto& f : space.colorings) text += csv_row(f);
        if (opt.with_indices) {
            text += "# indices\n";
            text += csv_header(n);
            for (const auto& idx : indices) text += csv_row(idx);
        }
    } else {
        throw curvex::InputError("unknown format '" + opt.format + "' (expected json or csv)");
    }
    emit(text, opt.out_path);
    std::cerr << "count: " << space.size() << "\n";
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyCmdOptions {
    std::string file;
    std::optional<int> colors;
    std::optional<int> corrupt_vertex;
};

void run_verify(const VerifyCmdOptions& opt) {
    const Graph g = curvex::load_graph(opt.file);
    curvex::VerifyOptions vo;
    vo.colors = opt.colors;
    vo.corrupt_curvature_vertex = opt.corrupt_vertex;
    const auto report = curvex::run_verification(g, vo);

    for (const auto& check : report.checks) {
        std::cout << check.name << ": " << (check.ok ? "OK" : "FAIL");
        if (!check.ok && !check.detail.empty()) std::cout << " (" << check.detail << ")";
        std::cout << "\n";
    }
    if (opt.colors) std::cout << report.colorings_checked << " colorings checked\n";

    if (const auto* failure = report.first_failure()) {
        std::cout << "FAIL " << failure->name << "\n";
        throw VerifyFailure{};
    }
    std::cout << "PASS\n";
}

// ---------------------------------------------------------------------------
// dot
// ---------------------------------------------------------------------------

struct DotOptions {
    std::string file;
    int colors = 0;
    std::optional<int> row;
    std::optional<int> row_alias;  // --index, same selector
};

void run_dot(const DotOptions& opt) {
    const Graph g = curvex::load_graph(opt.file);
    if (opt.colors < 1) throw curvex::InputError("-c/--colors must be at least 1");
    if (!opt.row && !opt.row_alias)
        throw curvex::InputError("choose a coloring with --coloring-row or --index");
    const int row = opt.row ? *opt.row : *opt.row_alias;

    const auto space = curvex::enumerate_colorings(g, opt.colors);
    if (row < 0 || row >= static_cast<int>(space.size()))
        throw curvex::InputError("coloring row " + std::to_string(row) + " out of range (" +
                                 std::to_string(space.size()) + " colorings)");
    const auto& f = space.colorings[row];
    const auto idx = curvex::index_vector(g, f);

    std::cout << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        std::cout << "  " << v << " [label=\"" << f[v] << "/" << idx[v] << "\"];\n";
    for (auto [u, v] : g.edges()) std::cout << "  " << u << " -- " << v << ";\n";
    std::cout << "}\n";
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

struct StatsOptions {
    int n = 0;
    long long p_num = 1, p_den = 2;
    int count = 0;
    long long seed = 1;
};

void run_stats(const StatsOptions& opt) {
    if (opt.n < 1) throw curvex::InputError("stats: n must be at least 1");
    if (opt.count < 1) throw curvex::InputError("stats: sample count must be at least 1");
    if (opt.p_num < 0 || opt.p_den < 1) throw curvex::InputError("stats: bad probability");

    std::map<Rational, int> histogram;
    for (int i = 0; i < opt.count; ++i) {
        const Graph g = curvex::erdos_renyi_graph(
            opt.n, static_cast<std::uint64_t>(opt.p_num), static_cast<std::uint64_t>(opt.p_den),
            static_cast<std::uint64_t>(opt.seed + i));
        ++histogram[curvex::richness(g)];
    }
    std::cout << "samples: " << opt.count << "  n: " << opt.n << "  p: " << opt.p_num << "/"
              << opt.p_den << "  seed: " << opt.seed << "\n";
    for (const auto& [value, freq] : histogram)
        std::cout << "richness " << value.str() << ": " << freq << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete curvature and coloring-index toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a named graph as JSON");
    gen_cmd->add_option("name", gen.name, "generator name")->required();
    gen_cmd->add_option("params", gen.params, "integer parameters");
    gen_cmd->add_option("--out", gen.out_path, "write to a file instead of stdout");
    gen_cmd->footer([] {
        std::string text = "generators:\n";
        for (const auto& u : curvex::generator_usage()) text += "  " + u + "\n";
        return text;
    });
    gen_cmd->callback([&] { run_gen(gen); });

    AnalyzeOptions analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "summarize a graph: f-vector, curvature, "
                                                      "chromatic data");
    analyze_cmd->add_option("file", analyze.file, "graph JSON file, or - for stdin")->required();
    int analyze_colors = 0;
    auto* colors_opt =
        analyze_cmd->add_option("--colors", analyze_colors, "palette size for coloring statistics");
    analyze_cmd->add_option("--moments", analyze.moments, "report index moments up to this order")
        ->needs(colors_opt);
    analyze_cmd->add_flag("--json", analyze.as_json, "emit a JSON report");
    analyze_cmd->callback([&] {
        if (colors_opt->count()) analyze.colors = analyze_colors;
        run_analyze(analyze);
    });

    ColoringsOptions colorings;
    auto* colorings_cmd = app.add_subcommand("colorings", "list every proper coloring");
    colorings_cmd->add_option("file", colorings.file, "graph JSON file, or - for stdin")
        ->required();
    colorings_cmd->add_option("-c,--colors", colorings.colors, "palette size")->required();
    colorings_cmd->add_option("--format", colorings.format, "json or csv (default csv)");
    colorings_cmd->add_flag("--with-indices", colorings.with_indices,
                            "also list the index vector of each coloring");
    colorings_cmd->add_option("--out", colorings.out_path, "write to a file instead of stdout");
    colorings_cmd->callback([&] { run_colorings(colorings); });

    VerifyCmdOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the identity checks");
    verify_cmd->add_option("file", verify.file, "graph JSON file, or - for stdin")->required();
    int verify_colors = 0;
    auto* verify_colors_opt =
        verify_cmd->add_option("--colors", verify_colors, "also check coloring-space identities");
    int corrupt_vertex = 0;
    auto* corrupt_opt = verify_cmd->add_option("--corrupt-curvature", corrupt_vertex,
                                               "test hook: perturb curvature at a vertex");
    corrupt_opt->group("");  // hidden
    verify_cmd->callback([&] {
        if (verify_colors_opt->count()) verify.colors = verify_colors;
        if (corrupt_opt->count()) verify.corrupt_vertex = corrupt_vertex;
        run_verify(verify);
    });

    DotOptions dot;
    auto* dot_cmd = app.add_subcommand("dot", "render one coloring as DOT with color/index labels");
    dot_cmd->add_option("file", dot.file, "graph JSON file, or - for stdin")->required();
    dot_cmd->add_option("-c,--colors", dot.colors, "palette size")->required();
    int dot_row = 0, dot_index = 0;
    auto* row_opt = dot_cmd->add_option("--coloring-row", dot_row, "coloring row to render");
    auto* index_opt =
        dot_cmd->add_option("--index", dot_index, "alias for --coloring-row")->excludes(row_opt);
    dot_cmd->callback([&] {
        if (row_opt->count()) dot.row = dot_row;
        if (index_opt->count()) dot.row_alias = dot_index;
        run_dot(dot);
    });

    StatsOptions stats;
    auto* stats_cmd =
        app.add_subcommand("stats", "richness histogram over a seeded random-graph ensemble");
    stats_cmd->add_option("n", stats.n, "vertex count")->required();
    stats_cmd->add_option("p_num", stats.p_num, "edge probability numerator")->required();
    stats_cmd->add_option("p_den", stats.p_den, "edge probability denominator")->required();
    stats_cmd->add_option("count", stats.count, "number of samples")->required();
    stats_cmd->add_option("seed", stats.seed, "base seed (sample i uses seed+i)");
    stats_cmd->callback([&] { run_stats(stats); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const VerifyFailure&) {
        return 1;
    } catch (const curvex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
