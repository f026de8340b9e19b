#pragma once

#include "polysum/exact.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace polysum::cli {

using Json = nlohmann::ordered_json;

// "dim D" header, then one point per line; '#' starts a comment.
std::vector<Point> parse_vertex_file(std::istream& in);
std::vector<Point> read_vertex_file(const std::string& path);  // ParseError carries the line
void write_vertex_file(std::ostream& out, const std::vector<Point>& pts);

// Report plus the exit code the tool should return.
struct Outcome {
    int exit_code = 0;
    Json report;
};

enum class Via { direct, cayley, both };

Outcome cmd_hull(const std::string& file);
Outcome cmd_minkowski(const std::vector<std::string>& files, Via via);
Outcome cmd_bounds(int d, const std::vector<long>& n, const std::vector<std::string>& achieved);
Outcome cmd_construct(int d, const std::vector<long>& n, const std::optional<std::string>& tau,
                      const std::optional<std::string>& emit_dir, std::uint64_t seed);
Outcome cmd_verify(const std::vector<std::string>& files);
Outcome cmd_detasym(const std::string& lemma, const std::optional<std::string>& params, int random,
                    std::uint64_t seed);

// Exit code for a library exception: 2 parse, 3 domain, 4 inconsistency, 5 search exhausted.
int exit_code_for(const std::exception& e);

// Runs fn, converting exceptions into an error report with the matching code.
template <class F>
Outcome guarded(const std::string& command, F&& fn);

Outcome error_outcome(const std::string& command, const std::exception& e);

template <class F>
Outcome guarded(const std::string& command, F&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return error_outcome(command, e);
    }
}

}  // namespace polysum::cli
