#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "rosa/export.hpp"

namespace rosa::cli {

enum class Format { Text, Dot, Json };

struct CliArgs {
    std::string input = "-";
    Format format = Format::Text;
    std::optional<std::string> out;
    std::optional<std::string> root;
    std::size_t max_states = 100000;
    NodeLabels labels = NodeLabels::Both;
    bool check = false;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitSemantic = 3;

/// Runs parse -> build -> export. The artifact goes to `out` (or the --out
/// file); every diagnostic goes to `err`. `in` is read when input is `-`.
int run(const CliArgs& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv into `args`. Returns an exit code when the process should stop
/// (help, usage error), otherwise nullopt.
std::optional<int> parse_args(int argc, const char* const* argv, CliArgs& args, std::ostream& out,
                              std::ostream& err);

}  // namespace rosa::cli
