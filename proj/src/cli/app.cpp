#include "ptlab/cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ptlab/cli/expression.hpp"
#include "ptlab/cli/verify_suite.hpp"
#include "ptlab/dynamics.hpp"
#include "ptlab/errors.hpp"
#include "ptlab/spectra.hpp"

namespace ptlab::cli {

namespace {

std::string complex_text(cplx z)
{
    return fmt::format("{:.15g}{:+.15g}i", z.real(), z.imag());
}

void line(std::ostream& out, std::string_view name, std::string_view value)
{
    out << fmt::format("{:<22}{}\n", name, value);
}

void require_truncation(int n_max)
{
    if (n_max < 2) throw Error(ErrorKind::InvalidInput, fmt::format("n_max must be >= 2, got {}", n_max));
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::EigenSolverFailure:
    case ErrorKind::SingularMap:
    case ErrorKind::SingularMetric:
        return kNumericalFailure;
    default:
        return kInvalidInput;
    }
}

void write_report(const RunConfig& cfg, const RunReport& report, const std::string& name)
{
    write_json(cfg.output_directory() / name, report.to_json());
}

} // namespace

ModelParams RunConfig::params() const
{
    const double v1 = parse_expression(a1);
    const double v2 = parse_expression(a2);
    if (hermitian_control) return ModelParams::hermitian_control(v1, v2);
    return ModelParams::make(v1, v2, parse_expression(a3));
}

std::filesystem::path RunConfig::output_directory() const
{
    if (!out_dir.empty()) return out_dir;
    if (const char* env = std::getenv("PTLAB_OUT_DIR"); env && *env) return env;
    return "ptlab-out";
}

Json RunConfig::to_json() const
{
    Json j;
    j["a1"] = a1;
    j["a2"] = a2;
    j["a3"] = a3;
    j["hermitian_control"] = hermitian_control;
    j["seed"] = seed;
    j["spectrum"] = {{"n_list", n_list},
                     {"k", k},
                     {"drift_tolerance", json_number(drift_tolerance)},
                     {"imag_tolerance", json_number(imag_tolerance)},
                     {"match_tolerance", json_number(match_tolerance)},
                     {"dimension_cap", dimension_cap}};
    Json start = Json::array();
    for (double v : z0) start.push_back(json_number(v));
    j["dynamics"] = {{"t0", json_number(t0)}, {"t1", json_number(t1)}, {"points", points}, {"z0", start}};
    j["verify"] = {{"n_max", n_max},
                   {"metric", metric.empty() ? Json(nullptr) : Json(metric)},
                   {"perturb", perturb ? json_number(*perturb) : Json(nullptr)},
                   {"random_states", random_states},
                   {"propagated_states", propagated_states}};
    return j;
}

int cmd_classify(const RunConfig& cfg, RunReport& report, std::ostream& out)
{
    const ModelParams p = cfg.params();
    if (p.is_hermitian_control()) {
        line(out, "regime", "hermitian-control");
        line(out, "omega1", fmt::format("{:.15g}", std::abs(p.a1())));
        line(out, "omega2", fmt::format("{:.15g}", std::abs(p.a2())));
        report.add("regime", "hermitian-control");
        return kOk;
    }

    const Regime regime = classify(p);
    const FrequencyRoots roots = solve_frequencies(p);
    line(out, "regime", to_string(regime));
    line(out, "omega1^2", complex_text(roots.omega1_sq));
    line(out, "omega2^2", complex_text(roots.omega2_sq));
    report.add("regime", std::string(to_string(regime)));
    report.add("omega1_sq", json_complex(roots.omega1_sq));
    report.add("omega2_sq", json_complex(roots.omega2_sq));

    const PuFormCheck pu = pu_form_residual(p);
    report.add("frequency_relations", json_number(pu.residual), 1e-12, pu.residual <= 1e-12);
    if (regime != Regime::CaseI) return kOk;

    const DerivedParams d = derive_all(p);
    const ModeFrequencies f = frequency_identification(d);
    line(out, "alpha1", complex_text(d.alpha1));
    line(out, "alpha2", complex_text(d.alpha2));
    line(out, "U", format_number(d.U));
    line(out, "omega", format_number(d.omega));
    line(out, "m", format_number(d.m));
    line(out, "branch", to_string(d.branch));
    line(out, "omega1", format_number(f.omega1));
    line(out, "omega2", format_number(f.omega2));
    report.add("alpha1", json_complex(d.alpha1));
    report.add("alpha2", json_complex(d.alpha2));
    report.add("U", json_number(d.U));
    report.add("omega", json_number(d.omega));
    report.add("m", json_number(d.m));
    report.add("branch", std::string(to_string(d.branch)));
    report.add("omega1", json_number(f.omega1));
    report.add("omega2", json_number(f.omega2));
    report.add("constraint", json_number(d.constraint_residual), 1e-12, d.constraint_residual <= 1e-12);
    return kOk;
}

int cmd_spectrum(const RunConfig& cfg, RunReport& report, std::ostream& out)
{
    const ModelParams p = cfg.params();
    for (int n : cfg.n_list) require_truncation(n);
    SpectrumOptions opt;
    opt.k = cfg.k;
    opt.drift_tolerance = cfg.drift_tolerance;
    opt.imag_tolerance = cfg.imag_tolerance;
    opt.match_tolerance = cfg.match_tolerance;
    opt.dimension_cap = cfg.dimension_cap;

    const SpectrumReport r = convergence_study(p, cfg.n_list, opt);
    if (r.exploratory) out << fmt::format("exploratory: {} parameters, no lattice matching asserted\n", to_string(r.regime));

    out << fmt::format("{:>6} {:>5} {:>22} {:>12} {:>10} {:>6} {:>12}\n", "n_max", "index", "re", "im", "drift",
                       "lattice", "mismatch");
    for (const TrackedLevel& row : r.rows)
        out << fmt::format("{:>6} {:>5} {:>22.15g} {:>12.3e} {:>10.3e} {:>6} {:>12.3e}\n", row.n_max, row.index,
                           row.value.real(), row.value.imag(), row.drift, to_string(row.lattice), row.mismatch);

    const std::filesystem::path csv = "spectrum.csv";
    write_spectrum_csv(cfg.output_directory() / csv, r);
    report.add_file(csv);

    for (const TruncationSpectrum& t : r.spectra)
        report.add(fmt::format("pairing_residual:n_max={}", t.n_max), json_number(t.pairing_residual));
    for (const TrackedLevel& row : r.rows) {
        if (row.n_max != r.spectra.back().n_max) continue;
        report.add(fmt::format("level:{}", row.index), json_complex(row.value));
    }
    report.add("all_converged", r.all_converged);
    report.add("max_imag", json_number(r.max_imag), cfg.imag_tolerance, r.max_imag < cfg.imag_tolerance);
    if (!r.exploratory) {
        report.add("max_relative_mismatch:eq34", json_number(r.max_mismatch), cfg.match_tolerance,
                   r.max_mismatch <= cfg.match_tolerance);
        report.add("max_relative_distance:eq29", json_number(r.max_signed_distance), cfg.match_tolerance,
                   r.max_signed_distance <= cfg.match_tolerance);
        report.add("finding", std::string(to_string(r.finding)));
        line(out, "finding", to_string(r.finding));
        line(out, "max mismatch eq34", fmt::format("{:.3e}", r.max_mismatch));
        if (r.naive) line(out, "max distance eq29", fmt::format("{:.3e}", r.max_signed_distance));
    }
    return kOk;
}

int cmd_dynamics(const RunConfig& cfg, RunReport& report, std::ostream& out)
{
    const ModelParams p = cfg.params();
    if (cfg.z0.size() != 4) throw Error(ErrorKind::InvalidInput, "z0 needs four values");
    const Vec4 z0(cfg.z0[0], cfg.z0[1], cfg.z0[2], cfg.z0[3]);
    const Trajectory traj = evolve(p, z0, uniform_grid(cfg.t0, cfg.t1, cfg.points));
    const Regime regime = p.is_hermitian_control() ? Regime::CaseI : classify(p);

    const std::filesystem::path csv = "trajectory.csv";
    write_trajectory_csv(cfg.output_directory() / csv, traj);
    report.add_file(csv);

    const PolynomialCheck ch = fourth_order_residual(p);
    const PuFormCheck pu = pu_form_residual(p);
    const double second = second_order_check(p, traj);
    const double drift = energy_drift(traj);
    const bool drift_asserted = regime != Regime::CaseIII;

    line(out, "regime", p.is_hermitian_control() ? "hermitian-control" : to_string(regime));
    line(out, "cayley-hamilton", fmt::format("{:.3e} (scale {:.3e})", ch.residual, ch.scale));
    line(out, "pu coefficients", fmt::format("{:.15g} {:.15g} vs {} {}", pu.sum, pu.product,
                                             complex_text(pu.frequency_sum), complex_text(pu.frequency_product)));
    line(out, "pu residual", fmt::format("{:.3e}", pu.residual));
    line(out, "second order", fmt::format("{:.3e}", second));
    line(out, "energy drift", fmt::format("{:.3e}", drift));
    line(out, "max |z|", format_number(max_amplitude(traj)));
    line(out, "max |Im z|", format_number(max_imaginary_part(traj)));
    if (regime == Regime::CaseII) out << "note: degenerate frequencies, amplitudes may grow polynomially\n";
    if (regime == Regime::CaseIII) out << "note: complex frequencies, amplitudes may grow exponentially\n";

    const double ch_rel = ch.scale > 0.0 ? ch.residual / ch.scale : ch.residual;
    report.add("cayley_hamilton", json_number(ch_rel), 1e-12, ch.holds());
    report.add("pu_coefficients", json_number(pu.residual), 1e-12, pu.residual <= 1e-12);
    report.add("second_order", json_number(second), 1e-12, second <= 1e-12);
    report.add("energy_drift", json_number(drift), 1e-10,
               drift_asserted ? std::optional<bool>(drift <= 1e-10) : std::nullopt);
    report.add("max_amplitude", json_number(max_amplitude(traj)));
    report.add("max_imaginary_part", json_number(max_imaginary_part(traj)));

    const bool ok = ch.holds() && pu.residual <= 1e-12 && second <= 1e-12 && (!drift_asserted || drift <= 1e-10);
    return ok ? kOk : kVerificationFailure;
}

int cmd_verify(const RunConfig& cfg, RunReport& report, std::ostream& out)
{
    const ModelParams p = cfg.params();
    require_truncation(cfg.n_max);
    VerifyOptions opt;
    opt.appendix.n_max = cfg.n_max;
    opt.appendix.seed = cfg.seed;
    opt.appendix.random_states = cfg.random_states;
    opt.appendix.propagated_states = cfg.propagated_states;
    opt.appendix.perturbation = cfg.perturb;
    if (!cfg.metric.empty()) opt.metric = metric_from_string(cfg.metric);

    const std::vector<CheckResult> checks = verification_suite(p, opt);
    Json rows = Json::array();
    for (const CheckResult& c : checks) {
        rows.push_back(to_json(c));
        report.add_check(c);
        const char* status = c.pass ? "PASS" : (c.asserted ? "FAIL" : "info");
        out << fmt::format("{:<5}{:<42}{:<4}{:>12.3e} {} {:.0e}\n", status, c.check, c.metric, c.residual,
                           c.lower_bound ? ">" : "<=", c.tolerance);
    }
    const std::filesystem::path json = "verify.json";
    write_json(cfg.output_directory() / json, rows);
    report.add_file(json);

    const bool ok = asserted_checks_pass(checks);
    out << (ok ? "all asserted checks pass\n" : "asserted checks failed\n");
    return ok ? kOk : kVerificationFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Verification lab for the two-mode oscillator with i p1 p2 coupling", "ptlab"};
    app.set_config("--config", "", "TOML or INI file; flags given on the command line win");
    app.set_version_flag("--version", kVersion);
    app.fallthrough();
    app.require_subcommand(1);

    app.add_option("--a1", cfg.a1, "a1, e.g. 2 or sqrt(5) or 7/2")->capture_default_str();
    app.add_option("--a2", cfg.a2, "a2")->capture_default_str();
    app.add_option("--a3", cfg.a3, "a3")->capture_default_str();
    app.add_flag("--hermitian-control", cfg.hermitian_control, "Use a3 = 0 (decoupled Hermitian reference)");
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--out", cfg.out_dir, "Output directory (default $PTLAB_OUT_DIR, then ./ptlab-out)");

    CLI::App* classify_cmd = app.add_subcommand("classify", "Regime, frequencies and derived parameters");
    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Truncated spectrum and lattice matching");
    CLI::App* dynamics_cmd = app.add_subcommand("dynamics", "Classical trajectory and fourth-order checks");
    CLI::App* verify_cmd = app.add_subcommand("verify", "Symmetry, diagonalization and metric checks");
    CLI::App* report_cmd = app.add_subcommand("report", "classify, spectrum, dynamics and verify in one run");

    for (CLI::App* sub : {spectrum_cmd, report_cmd}) {
        sub->add_option("--n-list", cfg.n_list, "Truncations, comma separated")->delimiter(',')->capture_default_str();
        sub->add_option("--k", cfg.k, "Number of tracked levels")->capture_default_str();
        sub->add_option("--drift-tol", cfg.drift_tolerance, "Convergence drift tolerance")->capture_default_str();
        sub->add_option("--imag-tol", cfg.imag_tolerance, "Imaginary-part tolerance")->capture_default_str();
        sub->add_option("--match-tol", cfg.match_tolerance, "Relative lattice match tolerance")->capture_default_str();
        sub->add_option("--cap", cfg.dimension_cap, "Largest Fock dimension")->capture_default_str();
    }
    for (CLI::App* sub : {dynamics_cmd, report_cmd}) {
        sub->add_option("--t0", cfg.t0, "First time")->capture_default_str();
        sub->add_option("--t1", cfg.t1, "Last time")->capture_default_str();
        sub->add_option("--points", cfg.points, "Number of grid points")->capture_default_str();
        sub->add_option("--z0", cfg.z0, "Initial x1,x2,p1,p2")->delimiter(',')->expected(4)->capture_default_str();
    }
    for (CLI::App* sub : {verify_cmd, report_cmd}) {
        sub->add_option("--n-max", cfg.n_max, "Per-mode truncation")->capture_default_str();
        sub->add_option("--metric", cfg.metric, "Only checks on this metric (P, P1, P2, T, PT)");
        sub->add_option("--perturb", cfg.perturb, "Add i*eps*x1 to H (negative control)");
        sub->add_option("--states", cfg.random_states, "Random states for A1 and A4")->capture_default_str();
        sub->add_option("--propagated-states", cfg.propagated_states, "Random states for A2")->capture_default_str();
    }

    try {
        // CLI11 consumes a reversed argument list without the program name.
        std::vector<std::string> rest;
        if (!args.empty()) rest.assign(args.rbegin(), args.rend() - 1);
        app.parse(rest);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        const auto run_one = [&](const std::string& name, auto&& fn) {
            RunReport report(name, cfg.to_json(), cfg.seed);
            const int code = fn(cfg, report, out);
            write_report(cfg, report, name + "-report.json");
            return code;
        };
        if (classify_cmd->parsed()) return run_one("classify", cmd_classify);
        if (spectrum_cmd->parsed()) return run_one("spectrum", cmd_spectrum);
        if (dynamics_cmd->parsed()) return run_one("dynamics", cmd_dynamics);
        if (verify_cmd->parsed()) return run_one("verify", cmd_verify);

        RunReport report("report", cfg.to_json(), cfg.seed);
        int worst = kOk;
        for (auto* fn : {&cmd_classify, &cmd_spectrum, &cmd_dynamics, &cmd_verify}) {
            worst = std::max(worst, (*fn)(cfg, report, out));
            if (worst >= kInvalidInput) break;
        }
        write_report(cfg, report, "report.json");
        return worst;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

} // namespace ptlab::cli
