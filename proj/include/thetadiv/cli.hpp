#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "thetadiv/theta_classes.hpp"

namespace thetadiv::cli {

enum class OutputFormat { Pretty, Json, Csv };

struct RunConfig {
    std::string command;  ///< basis, curves, matrix, class, ledger, dr, verify
    std::string target;   ///< class kind (T, theta, mueller) or verify kind
    int g = 3;
    int n = 1;
    std::vector<std::int64_t> d;
    bool d_given = false;
    OutputFormat format = OutputFormat::Pretty;
    PlusConvention plus = PlusConvention::NonNegative;
    int trials = 50;
    std::uint64_t seed = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Executes a parsed configuration; returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3,-1" -> {3, -1}; throws std::invalid_argument.
std::vector<std::int64_t> parse_weights(const std::string& text);

}  // namespace thetadiv::cli
