#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pqovs/propagator.hpp"
#include "pqovs/states.hpp"

namespace pqovs::cli {

enum class Command { make, propagate, planes, scan, squeeze, lens, density, fidelity, noise };
enum class OutputFormat { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

struct RunConfig {
    Command command = Command::make;

    // State source: a pqovs-state-v1 file ("-" for stdin) or a family to build.
    std::optional<std::string> in_path;
    std::optional<std::string> target_path;
    std::optional<Family> family;
    int q = 0;
    double alpha = 1.0;
    GridScheme scheme = GridScheme::gauss_legendre;
    int grid_n = kDefaultGridNodes;
    double r_max = 0.0;  // resolved to alpha * sqrt2 + 10 when left at 0

    double k = 1.0;
    double z = 0.0;
    double gain = 1.0;
    KernelConvention convention = KernelConvention::unitary;
    bool analytic_limits = true;

    int m_max = 0;
    double z_from = 0.0;
    double z_to = 0.0;
    int steps = 0;

    std::optional<std::string> out_path;
    OutputFormat format = OutputFormat::csv;
};

/// Thrown by parse_args; `code` is the process exit status (0 for --help).
struct ParseExit {
    int code;
    std::string message;
};

/// argv without the program name.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a parsed command. Library errors propagate as exceptions.
void run(const RunConfig& config, std::istream& in, std::ostream& out);

/// parse_args + run with exit-code mapping and one-line diagnostics on `err`.
int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pqovs::cli
