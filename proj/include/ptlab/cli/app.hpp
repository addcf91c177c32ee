#ifndef PTLAB_CLI_APP_HPP
#define PTLAB_CLI_APP_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptlab/cli/output.hpp"
#include "ptlab/params.hpp"

namespace ptlab::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailure = 1,
    kInvalidInput = 2,
    kNumericalFailure = 3,
};

/// Everything a subcommand may read. Parameter values are kept as written and
/// parsed by `params()`.
struct RunConfig
{
    std::string a1 = "2";
    std::string a2 = "1";
    std::string a3 = "sqrt(5)";
    bool hermitian_control = false;  // ignore a3 and use the decoupled Hermitian oscillator
    std::uint64_t seed = 20240501;
    std::string out_dir;  // empty: $PTLAB_OUT_DIR, then ./ptlab-out

    // spectrum
    std::vector<int> n_list{10, 20, 30};
    int k = 4;
    double drift_tolerance = 1e-4;
    double imag_tolerance = 1e-4;
    double match_tolerance = 1e-3;
    int dimension_cap = 4096;

    // dynamics
    double t0 = 0.0;
    double t1 = 10.0;
    int points = 1001;
    std::vector<double> z0{1.0, 0.0, 0.0, 0.0};

    // verify
    int n_max = 10;
    std::string metric;  // empty: every metric
    std::optional<double> perturb;
    int random_states = 1000;
    int propagated_states = 4;

    ModelParams params() const;
    std::filesystem::path output_directory() const;
    Json to_json() const;
};

/// The subcommands. Each prints a summary to `out`, writes its files under the
/// output directory, adds its results to `report` and returns an exit code.
int cmd_classify(const RunConfig& cfg, RunReport& report, std::ostream& out);
int cmd_spectrum(const RunConfig& cfg, RunReport& report, std::ostream& out);
int cmd_dynamics(const RunConfig& cfg, RunReport& report, std::ostream& out);
int cmd_verify(const RunConfig& cfg, RunReport& report, std::ostream& out);

/// Full command line, including the program name. Errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ptlab::cli

#endif
