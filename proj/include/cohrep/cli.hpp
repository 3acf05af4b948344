#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cohrep::cli {

/// Exit codes of `check`: the representation exists, does not exist, or the
/// invocation was invalid.
inline constexpr int kExitExists = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotExists = 2;

/// Parsed command line.
struct RunConfig {
    std::string command;
    std::string subcommand;
    std::string group;
    std::string j0;
    std::string irrep;
    std::string fiducial = "generic";
    bool show_pi = false;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::string state = "vacuum";
    std::string point;
    int fock = -1;
    std::optional<double> max_radius;
    std::string grid;
    int cutoff = 32;
    double c = 1.0;
    std::string op = "thermal:1";
    double threshold = 1e-6;
    double bound = 1e6;
    std::string out;
};

/// Runs the command line `args` (without the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0.5", "1/2", "3" -> twice the value. Throws std::invalid_argument.
int parse_twice(const std::string& text);

/// "1/3", "-2/3", "1" -> three times the value. Throws std::invalid_argument.
int parse_thrice(const std::string& text);

/// Complex literal "a", "bi", "a+bi", "a-bi". Throws std::invalid_argument.
std::complex<double> parse_complex(const std::string& text);

/// 17 significant digits, '.' separator, independent of the global locale.
std::string format_number(double x);

}  // namespace cohrep::cli
