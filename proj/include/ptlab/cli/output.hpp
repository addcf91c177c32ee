#ifndef PTLAB_CLI_OUTPUT_HPP
#define PTLAB_CLI_OUTPUT_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptlab/dynamics.hpp"
#include "ptlab/pseudoherm.hpp"
#include "ptlab/spectra.hpp"

namespace ptlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// 15 significant digits, the precision of every number this tool emits.
std::string format_number(double v);

/// A JSON number rounded to 15 significant digits; null for NaN or infinity.
Json json_number(double v);
Json json_complex(cplx z);  // [re, im]

Json to_json(const CheckResult& c);

/// Columns n_max,index,re,im,matched_n1,matched_n2,mismatch,lattice.
void write_spectrum_csv(const std::filesystem::path& path, const SpectrumReport& report);

/// Columns t, then re/im of x1, x2, p1, p2 and of the energy.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

/// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const Json& value);

/// One per invocation: {version, config, seed, started, elapsed_s, results[], files[]}.
class RunReport
{
public:
    RunReport(std::string command, Json config, std::uint64_t seed);

    /// A reported value, with the tolerance it was tested against when there is one.
    void add(std::string name, Json value, std::optional<double> tolerance = {}, std::optional<bool> pass = {});
    void add_check(const CheckResult& c);
    void add_file(const std::filesystem::path& relative);

    Json to_json() const;

private:
    std::string m_command;
    Json m_config;
    std::uint64_t m_seed;
    std::string m_started;
    std::chrono::steady_clock::time_point m_clock;
    Json m_results = Json::array();
    Json m_files = Json::array();
};

} // namespace ptlab::cli

#endif
