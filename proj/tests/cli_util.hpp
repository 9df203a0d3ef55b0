#pragma once

#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Helpers for driving the installed CLI binary from tests. The binary path
// comes in through the CURVEX_CLI_PATH compile definition.

namespace cli {

struct Result {
    int status = -1;
    std::string out;
};

/// Runs the CLI with the given argument string, capturing stdout. Append
/// "2>&1" to the arguments to fold stderr in.
inline Result run(const std::string& args) {
    const std::string cmd = std::string(CURVEX_CLI_PATH) + " " + args;
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

inline std::filesystem::path& scratch_path_storage() {
    static std::filesystem::path dir;
    return dir;
}

/// Scratch directory for fixture files, removed at process exit.
inline std::filesystem::path scratch_dir() {
    auto& dir = scratch_path_storage();
    if (dir.empty()) {
        dir = std::filesystem::temp_directory_path() /
              ("curvex-test-" + std::to_string(getpid()));
        std::filesystem::create_directories(dir);
        std::atexit([] {
            std::error_code ec;
            std::filesystem::remove_all(scratch_path_storage(), ec);
        });
    }
    return dir;
}

/// Writes a generated graph to a scratch file via the CLI and returns the path.
inline std::string gen_file(const std::string& gen_args, const std::string& filename) {
    const auto path = (scratch_dir() / filename).string();
    run("gen " + gen_args + " --out " + path);
    return path;
}

inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace cli
