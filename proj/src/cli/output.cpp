#include "ptlab/cli/output.hpp"

#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>

#include <fmt/format.h>

#include "ptlab/errors.hpp"
#include "ptlab/quadform.hpp"

namespace ptlab::cli {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
    return out;
}

std::string utc_now()
{
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::string format_number(double v)
{
    return fmt::format("{:.15g}", v);
}

Json json_number(double v)
{
    if (!std::isfinite(v)) return nullptr;
    const std::string text = format_number(v);
    double rounded = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), rounded);
    return rounded;
}

Json json_complex(cplx z)
{
    return Json::array({json_number(z.real()), json_number(z.imag())});
}

Json to_json(const CheckResult& c)
{
    Json j;
    j["check"] = c.check;
    j["metric"] = c.metric;
    j["params"] = Json::array({json_number(c.params[0]), json_number(c.params[1]), json_number(c.params[2])});
    j["n_max"] = c.n_max;
    j["residual"] = json_number(c.residual);
    j["tolerance"] = json_number(c.tolerance);
    j["pass"] = c.pass;
    j["asserted"] = c.asserted;
    j["bound"] = c.lower_bound ? "lower" : "upper";
    return j;
}

void write_spectrum_csv(const std::filesystem::path& path, const SpectrumReport& report)
{
    std::ofstream out = open_for_write(path);
    out << "n_max,index,re,im,matched_n1,matched_n2,mismatch,lattice\n";
    for (const TrackedLevel& r : report.rows)
        out << fmt::format("{},{},{},{},{},{},{},{}\n", r.n_max, r.index, format_number(r.value.real()),
                           format_number(r.value.imag()), r.matched_n1, r.matched_n2, format_number(r.mismatch),
                           to_string(r.lattice));
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj)
{
    std::ofstream out = open_for_write(path);
    out << "t,re_x1,im_x1,re_x2,im_x2,re_p1,im_p1,re_p2,im_p2,re_H,im_H\n";
    const QuadForm h = hamiltonian_form(traj.params);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const Vec4& z = traj.states[i];
        out << format_number(traj.times[i]);
        for (Eigen::Index k = 0; k < 4; ++k)
            out << ',' << format_number(z(k).real()) << ',' << format_number(z(k).imag());
        const cplx e = h.evaluate(z);
        out << ',' << format_number(e.real()) << ',' << format_number(e.imag()) << '\n';
    }
}

void write_json(const std::filesystem::path& path, const Json& value)
{
    std::ofstream out = open_for_write(path);
    out << value.dump(2) << '\n';
}

RunReport::RunReport(std::string command, Json config, std::uint64_t seed)
    : m_command(std::move(command)), m_config(std::move(config)), m_seed(seed), m_started(utc_now()),
      m_clock(std::chrono::steady_clock::now())
{
}

void RunReport::add(std::string name, Json value, std::optional<double> tolerance, std::optional<bool> pass)
{
    Json j;
    j["name"] = std::move(name);
    j["value"] = std::move(value);
    j["tolerance"] = tolerance ? json_number(*tolerance) : Json(nullptr);
    j["pass"] = pass ? Json(*pass) : Json(nullptr);
    m_results.push_back(std::move(j));
}

void RunReport::add_check(const CheckResult& c)
{
    m_results.push_back(cli::to_json(c));
}

void RunReport::add_file(const std::filesystem::path& relative)
{
    m_files.push_back(relative.generic_string());
}

Json RunReport::to_json() const
{
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - m_clock).count();
    Json j;
    j["version"] = kVersion;
    j["command"] = m_command;
    j["config"] = m_config;
    j["seed"] = m_seed;
    j["started"] = m_started;
    j["elapsed_s"] = json_number(elapsed);
    j["results"] = m_results;
    j["files"] = m_files;
    return j;
}

} // namespace ptlab::cli
