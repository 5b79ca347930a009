#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pf/boxmode.hpp"
#include "pf/error.hpp"
#include "pf/hydrogen.hpp"
#include "pf/nonlinear.hpp"
#include "pf/oscillator.hpp"
#include "pf/timedep.hpp"
#include "pf/trajectory_oracle.hpp"
#include "pf/verify.hpp"
#include "table.hpp"

#ifndef PF_VERSION
#define PF_VERSION "0.0.0"
#endif

namespace pf::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Options every subcommand accepts.
struct CommonOptions {
    std::string config;
    std::string out;
    std::string format = "csv";
};

struct BoxOptions {
    double a = 2e-9;
    double mass = kConstants.electron_mass;
    std::vector<int> levels{1, 2, 3};
    std::vector<double> ratios{1.5, 1.45, 1.40};
    std::string variant = "first-order";
    int grid = 1001;
};

struct OscOptions {
    double alpha = 1e20;
    double mu = osc::kHydrogenMoleculeMu;
    int n = 1;
    double amplitude = 0.0;  // 0 selects the calibrated estimate
    int n_max = 50;
    double cap_l = 0.0;  // 0 selects the threshold at n_max
    std::string order = "three";
    int grid = 201;
};

struct HydrogenOptions {
    int z = 1;
    double amplitude = 0.1;
    double radius = 0.0;  // 0 selects a0
    int grid = 361;
};

struct SpectrumOptions {
    double a = 2e-9;
    double mass = kConstants.electron_mass;
    double ratio = 1.5;
    double eps = 0.0;
    int n_max = 10;
};

struct FluxOptions {
    double a = 2e-9;
    double mass = kConstants.electron_mass;
    std::vector<int> levels{1, 2};
    double t_frac = 0.3;
    double step_frac = 1e-4;
    int grid = 201;
};

struct VerifyCliOptions {
    std::vector<std::string> perturb;
    int grid = 10000;
};

// Relative paths resolve against OUTPUT_DIR when it is set.
fs::path resolve_output(const std::string& requested, const std::string& fallback) {
    fs::path p = requested.empty() ? fs::path(fallback) : fs::path(requested);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("OUTPUT_DIR"); dir && *dir) p = fs::path(dir) / p;
    }
    return p;
}

void ensure_parent(const fs::path& p) {
    std::error_code ec;
    if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + p.parent_path().string() + ": " + ec.message());
}

void write_file(const fs::path& p, const std::function<void(std::ostream&)>& body) {
    ensure_parent(p);
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + p.string() + " for writing");
    body(f);
    f.flush();
    if (!f) throw IoError("write failed for " + p.string());
}

void emit_table(const Table& t, Format fmt, const CommonOptions& common, const std::string& fallback,
                std::ostream& out) {
    if (common.out == "-") {
        write_table(t, fmt, out);
        return;
    }
    write_file(resolve_output(common.out, fallback + extension(fmt)),
               [&](std::ostream& s) { write_table(t, fmt, s); });
}

// Echo of every option of `sub` except plumbing, with defaults filled in.
json config_echo(const CLI::App& sub) {
    json echo = json::object();
    for (const CLI::Option* opt : sub.get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name == "config" || name == "out") continue;
        std::string value;
        if (opt->count() > 0) {
            const auto& r = opt->results();
            for (std::size_t i = 0; i < r.size(); ++i) value += (i ? "," : "") + r[i];
        } else {
            value = opt->get_default_str();
        }
        echo[name] = value;
    }
    return echo;
}

json base_meta(const CLI::App& sub) {
    json meta;
    meta["command"] = sub.get_name();
    meta["version"] = PF_VERSION;
    meta["config"] = config_echo(sub);
    return meta;
}

// Values from the --config file fill only options not given on the command line.
void apply_config_file(CLI::App& sub, const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path);
    for (const auto& item : CLI::ConfigTOML().from_config(in)) {
        CLI::Option* opt = sub.get_option_no_throw("--" + item.name);
        if (!item.parents.empty() || opt == nullptr || item.name == "config" || item.name == "help") {
            throw CLI::ConfigError::Extras(item.fullname() + " (unknown key in " + path + ")");
        }
        if (opt->count() == 0) {
            opt->add_result(item.inputs);
            opt->run_callback();
        }
    }
}

box::TrajectoryVariant parse_variant(const std::string& s) {
    return s == "series" ? box::TrajectoryVariant::Series : box::TrajectoryVariant::FirstOrder;
}

// q'(0), the limit of q/x at the left wall.
double initial_slope(const box::BoxMode& mode, box::TrajectoryVariant v) {
    if (v == box::TrajectoryVariant::FirstOrder) return 1.0 + 2.0 * box::sine_coefficient(mode, v);
    const auto c = box::series_coeffs(mode.b_n_sq);
    return 1.0 + 2.0 * c.b2 / c.b1 - 4.0 * c.b3 / c.b1;
}

// Midpoints of grid cells where the PF acceleration changes sign.
std::vector<double> acceleration_sign_changes(const box::BoxMode& mode, int grid) {
    std::vector<double> out;
    const double a = mode.system.a;
    const double v = mode.v_particle();
    // Offset grid so that no sample falls on an exact zero.
    const int cells = 4 * grid + 1;
    double prev = box::pf_acceleration(mode, 0.5 * a / cells, v);
    for (int i = 1; i < cells; ++i) {
        const double x = (i + 0.5) * a / cells;
        const double cur = box::pf_acceleration(mode, x, v);
        if ((prev < 0.0) != (cur < 0.0)) out.push_back(x - 0.5 * a / cells);
        prev = cur;
    }
    return out;
}

Table box_table(const box::BoxMode& mode, box::TrajectoryVariant variant, const BoxOptions& o,
                const CLI::App& sub) {
    Table t;
    t.meta = base_meta(sub);
    t.meta["a_m"] = o.a;
    t.meta["n"] = mode.n;
    t.meta["p_n_sq_over_p_particle_sq"] = (mode.p_n * mode.p_n) /
                                          (mode.system.p_particle * mode.system.p_particle);
    t.meta["amplitude_m"] = mode.a_n;
    t.meta["b_sq"] = mode.b_n_sq;
    t.meta["g_npf"] = mode.g_npf;
    t.meta["inflection_points_m"] = box::inflection_points(mode);
    t.meta["acceleration_sign_changes_m"] = acceleration_sign_changes(mode, o.grid);

    auto& x = t.add("x", "m");
    auto& q = t.add("q", "m");
    auto& ratio = t.add("q_over_x", "1");
    auto& line = t.add("straight_line", "m");
    auto& chi = t.add("chi", "m");
    auto& dens = t.add("psi_density", "1/m");
    for (const auto& s : box::sample_trajectory(mode, variant, static_cast<std::size_t>(o.grid))) {
        x.values.push_back(s.x);
        q.values.push_back(s.q);
        ratio.values.push_back(s.x == 0.0 ? initial_slope(mode, variant) : s.q / s.x);
        line.values.push_back(s.x);
        chi.values.push_back(box::chi(mode, s.x));
        const double p = box::psi(mode, s.x);
        dens.values.push_back(p * p);
    }
    return t;
}

int cmd_box_figure(const CLI::App& sub, const CommonOptions& common, const BoxOptions& o,
                   std::ostream& out) {
    if (o.levels.size() != o.ratios.size()) {
        throw CLI::ValidationError("--levels and --ratios must have the same length");
    }
    if (common.out == "-") throw CLI::ValidationError("box-figure writes one file per mode; --out must be a directory");
    const Format fmt = parse_format(common.format);
    const auto variant = parse_variant(o.variant);
    const fs::path dir = resolve_output(common.out, "box_figure");
    for (std::size_t i = 0; i < o.levels.size(); ++i) {
        const int n = o.levels[i];
        const auto mode = box::make_mode(box::system_for_ratio(o.mass, o.a, n, o.ratios[i]), n);
        const Table t = box_table(mode, variant, o, sub);
        const fs::path file = dir / ("box_n" + std::to_string(n) + extension(fmt));
        write_file(file, [&](std::ostream& s) { write_table(t, fmt, s); });
        out << file.string() << '\n';
    }
    return kSuccess;
}

int cmd_osc_trajectory(const CLI::App& sub, const CommonOptions& common, const OscOptions& o,
                       std::ostream& out) {
    const Format fmt = parse_format(common.format);
    const auto probe = osc::OscSystem::from_alpha(o.mu, o.alpha, 1.0);
    const double cap_l = o.cap_l > 0.0 ? o.cap_l : osc::classical_threshold(probe, o.n_max);
    const auto sys = osc::OscSystem::from_alpha(o.mu, o.alpha, cap_l);
    const double amp = o.amplitude > 0.0 ? o.amplitude : osc::amplitude_estimate(sys, o.n);
    const auto mode = osc::make_mode(sys, o.n, amp);
    const auto order = o.order == "two" ? osc::SeriesOrder::TwoTerm : osc::SeriesOrder::ThreeTerm;

    Table t;
    t.meta = base_meta(sub);
    t.meta["cap_l_m"] = cap_l;
    t.meta["amplitude_m"] = amp;
    t.meta["boundary_suppression"] = osc::boundary_suppression(sys);
    t.meta["relative_excess_at_l"] = osc::trajectory_relative_excess(mode, sys, cap_l, order);
    const double r1 = 1.0 / std::sqrt(sys.alpha);
    if (r1 <= cap_l) t.meta["q_at_inverse_sqrt_alpha_times_sqrt_alpha"] = osc::trajectory(mode, sys, r1, order) / r1;

    auto& r = t.add("r", "m");
    auto& q = t.add("q", "m");
    auto& q_quad = t.add("q_quadrature", "m");
    auto& ratio = t.add("q_over_r", "1");
    auto& vel = t.add("velocity_ratio", "1");
    auto& chi = t.add("chi", "m");
    for (int i = 0; i < o.grid; ++i) {
        const double x = (i + 1 == o.grid) ? cap_l : cap_l * i / (o.grid - 1);
        r.values.push_back(x);
        q.values.push_back(osc::trajectory(mode, sys, x, order));
        q_quad.values.push_back(oracle::exact_osc_trajectory(mode, sys, x));
        const double v = osc::velocity(mode, sys, x, 1.0);
        vel.values.push_back(v);
        ratio.values.push_back(x == 0.0 ? v : 1.0 + osc::trajectory_relative_excess(mode, sys, x, order));
        chi.values.push_back(osc::radial_field(mode, sys, x));
    }
    emit_table(t, fmt, common, "osc_trajectory", out);
    return kSuccess;
}

int cmd_hydrogen_figure(const CLI::App& sub, const CommonOptions& common, const HydrogenOptions& o,
                        std::ostream& out) {
    const Format fmt = parse_format(common.format);
    const auto sys = hydrogen::HydrogenSystem::make(o.z);
    const double r = o.radius > 0.0 ? o.radius : sys.a0;
    const auto d0 = hydrogen::orbit_2p_diameters(sys, o.amplitude, r, hydrogen::PState::P0);
    const auto d1 = hydrogen::orbit_2p_diameters(sys, o.amplitude, r, hydrogen::PState::PPlusMinus1);

    Table t;
    t.meta = base_meta(sub);
    t.meta["radius_m"] = r;
    t.meta["diameters_2p0"] = {{"major", d0.major}, {"minor", d0.minor}};
    t.meta["diameters_2pm1"] = {{"major", d1.major}, {"minor", d1.minor}};

    auto& theta = t.add("theta", "rad");
    auto& p0 = t.add("q_over_r_2p0", "1");
    auto& p1 = t.add("q_over_r_2pm1", "1");
    for (int i = 0; i < o.grid; ++i) {
        const double th = 2.0 * kPi * i / (o.grid - 1);
        theta.values.push_back(th);
        p0.values.push_back(hydrogen::orbit_2p(sys, o.amplitude, r, th, hydrogen::PState::P0) / r);
        p1.values.push_back(hydrogen::orbit_2p(sys, o.amplitude, r, th, hydrogen::PState::PPlusMinus1) / r);
    }
    emit_table(t, fmt, common, "hydrogen_figure", out);
    return kSuccess;
}

int cmd_spectrum(const CLI::App& sub, const CommonOptions& common, const SpectrumOptions& o,
                 std::ostream& out) {
    const Format fmt = parse_format(common.format);
    const auto sys = box::system_for_ratio(o.mass, o.a, 1, o.ratio);
    Table t;
    t.meta = base_meta(sub);
    t.meta["p_particle_kg_m_per_s"] = sys.p_particle;
    auto& n = t.add("n", "1");
    auto& e_lin = t.add("e_linear", "J");
    auto& e_nl = t.add("e_nonlinear", "J");
    auto& shift = t.add("shift", "J");
    auto& k_lin = t.add("k_linear", "1/m");
    auto& k_nl = t.add("k_nonlinear", "1/m");
    auto& strength = t.add("strength", "1");
    for (int i = 1; i <= o.n_max; ++i) {
        const auto lvl = nonlinear::energy_level(o.eps, sys, i);
        n.values.push_back(i);
        e_lin.values.push_back(lvl.e_linear);
        e_nl.values.push_back(lvl.e_n);
        shift.values.push_back(lvl.e_n - lvl.e_linear);
        k_lin.values.push_back(lvl.k_linear);
        k_nl.values.push_back(lvl.k_n);
        strength.values.push_back(o.eps * lvl.amplitude * lvl.amplitude / (lvl.k_linear * lvl.k_linear));
    }
    emit_table(t, fmt, common, "spectrum", out);
    return kSuccess;
}

int cmd_flux_check(const CLI::App& sub, const CommonOptions& common, const FluxOptions& o,
                   std::ostream& out) {
    const Format fmt = parse_format(common.format);
    box::BoxSystem sys{o.mass, o.a, 0.0};
    if (!(o.mass > 0.0) || !(o.a > 0.0)) throw DomainError("flux-check: mass and a must be positive");
    const auto s = timedep::Superposition::equal_weights(sys, o.levels);
    double period = timedep::beat_period(s);
    if (period == 0.0) period = 2.0 * kPi * kHbar / s.components().front().energy;
    const double t_eval = o.t_frac * period;
    const double h_x = o.step_frac * o.a;
    const double h_t = o.step_frac * period;

    Table t;
    auto& x = t.add("x", "m");
    auto& rho = t.add("density", "1/m");
    auto& j = t.add("flux", "1/s");
    auto& drho = t.add("d_rho_dt", "1/(m s)");
    auto& res = t.add("continuity_residual", "1/(m s)");
    double max_res = 0.0;
    double max_drho = 0.0;
    double max_rho = 0.0;
    for (int i = 0; i < o.grid; ++i) {
        const double xi = o.a * (i + 1) / (o.grid + 1);
        const auto terms = timedep::continuity_terms(s, xi, t_eval, h_x, h_t);
        x.values.push_back(xi);
        const double r = timedep::density(s, xi, t_eval);
        rho.values.push_back(r);
        j.values.push_back(timedep::flux(s, xi, t_eval));
        drho.values.push_back(terms.d_rho_dt);
        res.values.push_back(terms.residual);
        max_res = std::max(max_res, std::abs(terms.residual));
        max_drho = std::max(max_drho, std::abs(terms.d_rho_dt));
        max_rho = std::max(max_rho, r);
    }
    const auto p = timedep::expectation_p(s, t_eval);
    const auto p2 = timedep::expectation_p2(s, t_eval);
    const double flux_integral = timedep::integrated_flux(s, t_eval);
    const double norm = timedep::total_probability(s, t_eval);
    // Natural rate scale: the larger of the observed d rho/dt and rho_max / period.
    const double rate_scale = max_drho + max_rho / period;
    const double relative_residual = max_res / rate_scale;
    const double p_scale = kHbar * box::wavenumber(sys, *std::max_element(o.levels.begin(), o.levels.end()));
    const bool ok = relative_residual < 1e-6 && std::abs(norm - 1.0) < 1e-10 &&
                    std::abs(flux_integral - p.real() / o.mass) <= 1e-10 * p_scale / o.mass &&
                    std::abs(p.imag()) <= 1e-12 * p_scale;

    t.meta = base_meta(sub);
    t.meta["time_s"] = t_eval;
    t.meta["period_s"] = period;
    t.meta["expectation_p_kg_m_per_s"] = {{"re", p.real()}, {"im", p.imag()}};
    t.meta["expectation_p2_kg2_m2_per_s2"] = {{"re", p2.real()}, {"im", p2.imag()}};
    t.meta["integrated_flux_per_s"] = flux_integral;
    t.meta["p_over_m_m_per_s"] = p.real() / o.mass;
    t.meta["total_probability"] = norm;
    t.meta["max_relative_residual"] = relative_residual;
    t.meta["pass"] = ok;
    emit_table(t, fmt, common, "flux_check", out);
    return ok ? kSuccess : kVerifyFailure;
}

std::map<std::string, double> parse_perturbations(const std::vector<std::string>& specs) {
    std::map<std::string, double> out;
    for (const auto& s : specs) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--perturb expects ID=DELTA, got " + s);
        const std::string id = s.substr(0, eq);
        const std::string value = s.substr(eq + 1);
        double delta = 0.0;
        try {
            std::size_t used = 0;
            delta = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--perturb: bad delta in " + s);
        }
        const auto& ids = verify::criterion_ids();
        if (id != "all" && std::find(ids.begin(), ids.end(), id) == ids.end()) {
            throw CLI::ValidationError("--perturb: unknown criterion " + id);
        }
        out[id] = delta;
    }
    return out;
}

json report_json(const oracle::ComparisonReport& r) {
    const auto finite_or_null = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
    return {{"label", r.label},
            {"computed", finite_or_null(r.series_value)},
            {"reference", finite_or_null(r.oracle_value)},
            {"abs_dev", finite_or_null(r.abs_dev)},
            {"rel_dev", finite_or_null(r.rel_dev)},
            {"tolerance", r.tolerance},
            {"policy", oracle::to_string(r.policy)},
            {"pass", r.pass}};
}

int cmd_verify(const CLI::App& sub, const CommonOptions& common, const VerifyCliOptions& o,
               std::ostream& out) {
    if (common.format != "json") throw CLI::ValidationError("verify writes a JSON report; --format must be json");
    verify::VerifyOptions opts;
    opts.perturbation = parse_perturbations(o.perturb);
    opts.sweep_points = o.grid;
    const auto results = verify::run_verification(opts);

    json doc;
    doc["meta"] = base_meta(sub);
    doc["criteria"] = json::array();
    int failed = 0;
    for (const auto& c : results) {
        const bool ok = c.pass();
        failed += ok ? 0 : 1;
        json entry = {{"id", c.id}, {"title", c.title}, {"pass", ok}};
        if (!c.error.empty()) entry["error"] = c.error;
        entry["reports"] = json::array();
        for (const auto& r : c.reports) entry["reports"].push_back(report_json(r));
        doc["criteria"].push_back(entry);
        out << (ok ? "PASS " : "FAIL ") << c.id << ' ' << c.title;
        if (!c.error.empty()) out << " (" << c.error << ')';
        out << '\n';
    }
    doc["summary"] = {{"criteria", results.size()}, {"failed", failed}};
    const std::string text = doc.dump(2) + "\n";
    if (common.out == "-") {
        out << text;
    } else {
        const fs::path path = resolve_output(common.out, "verify_report.json");
        write_file(path, [&](std::ostream& s) { s << text; });
        out << "report: " << path.string() << '\n';
    }
    return failed == 0 ? kSuccess : kVerifyFailure;
}

void add_common(CLI::App& sub, CommonOptions& c) {
    sub.add_option("--config", c.config, "Flat key = value file; command-line flags take precedence");
    sub.add_option("--out", c.out, "Output path ('-' for stdout); relative paths resolve under OUTPUT_DIR");
    sub.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

CLI::Option* add_grid(CLI::App& sub, int& grid, const char* what) {
    return sub.add_option("--grid", grid, what)->check(CLI::Range(2, 10000000));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Particle-field trajectories, energy budgets and spectra", "pftraj"};
    app.option_defaults()->always_capture_default();
    app.set_version_flag("--version", PF_VERSION);
    app.require_subcommand(1);

    CommonOptions box_c, osc_c, hyd_c, spec_c, flux_c, ver_c;
    ver_c.format = "json";
    BoxOptions box_o;
    OscOptions osc_o;
    HydrogenOptions h_o;
    SpectrumOptions sp_o;
    FluxOptions fx_o;
    VerifyCliOptions v_o;

    auto* box = app.add_subcommand("box-figure", "Trajectory data for particles in a box, one file per mode");
    add_common(*box, box_c);
    add_grid(*box, box_o.grid, "Samples on [0, a]");
    box->add_option("--a", box_o.a, "Box width [m]");
    box->add_option("--mass", box_o.mass, "Particle mass [kg]");
    box->add_option("--levels", box_o.levels, "Quantum numbers")->delimiter(',');
    box->add_option("--ratios", box_o.ratios, "p_n^2 / p_P^2 for each level, in [1, 2)")->delimiter(',');
    box->add_option("--variant", box_o.variant, "Trajectory series")
        ->check(CLI::IsMember({"first-order", "series"}));

    auto* oscc = app.add_subcommand("osc-trajectory", "Oscillator trajectory series against quadrature");
    add_common(*oscc, osc_c);
    add_grid(*oscc, osc_o.grid, "Samples on [0, L]");
    oscc->add_option("--alpha", osc_o.alpha, "mu omega0 / hbar [1/m^2]");
    oscc->add_option("--mu", osc_o.mu, "Reduced mass [kg]");
    oscc->add_option("--n", osc_o.n, "Quantum number")->check(CLI::Range(0, 1));
    oscc->add_option("--amplitude", osc_o.amplitude, "Field amplitude [m]; 0 uses the calibrated estimate");
    oscc->add_option("--n-max", osc_o.n_max, "Level fixing L = ((2n+1)/alpha)^(1/2)")->check(CLI::NonNegativeNumber);
    oscc->add_option("--cap-l", osc_o.cap_l, "Classical amplitude L [m]; 0 derives it from --n-max");
    oscc->add_option("--order", osc_o.order, "Series order")->check(CLI::IsMember({"two", "three"}));

    auto* hyd = app.add_subcommand("hydrogen-figure", "Polar 2p orbit data for hydrogen-like atoms");
    add_common(*hyd, hyd_c);
    add_grid(*hyd, h_o.grid, "Samples of theta on [0, 2 pi]");
    hyd->add_option("--z", h_o.z, "Nuclear charge")->check(CLI::PositiveNumber);
    hyd->add_option("--amplitude", h_o.amplitude, "Radial field amplitude [m]");
    hyd->add_option("--radius", h_o.radius, "Orbit radius [m]; 0 uses the Bohr radius");

    auto* spec = app.add_subcommand("spectrum", "Linear and cubic-corrected box energy levels");
    add_common(*spec, spec_c);
    spec->add_option("--a", sp_o.a, "Box width [m]");
    spec->add_option("--mass", sp_o.mass, "Particle mass [kg]");
    spec->add_option("--ratio", sp_o.ratio, "p_1^2 / p_P^2, fixes the particle momentum");
    spec->add_option("--eps", sp_o.eps, "Cubic coupling eps [1/m^4]");
    spec->add_option("--n-max", sp_o.n_max, "Highest level")->check(CLI::PositiveNumber);

    auto* flux = app.add_subcommand("flux-check", "Flux and continuity residual of a box superposition");
    add_common(*flux, flux_c);
    add_grid(*flux, fx_o.grid, "Interior sample points");
    flux->add_option("--a", fx_o.a, "Box width [m]");
    flux->add_option("--mass", fx_o.mass, "Particle mass [kg]");
    flux->add_option("--levels", fx_o.levels, "Equal-weight levels")->delimiter(',');
    flux->add_option("--t-frac", fx_o.t_frac, "Evaluation time as a fraction of the beat period");
    flux->add_option("--step-frac", fx_o.step_frac, "Finite-difference steps as fractions of a and the period")
        ->check(CLI::Range(1e-9, 0.1));

    auto* ver = app.add_subcommand("verify", "Run the acceptance suite and write a JSON report");
    add_common(*ver, ver_c);
    add_grid(*ver, v_o.grid, "Points in the trajectory sweep");
    ver->add_option("--perturb", v_o.perturb, "Negative control: ID=DELTA shifts computed values of a criterion");

    try {
        app.parse(argc, argv);
        CLI::App* sub = app.get_subcommands().front();
        if (sub == box) {
            apply_config_file(*sub, box_c.config);
            return cmd_box_figure(*sub, box_c, box_o, out);
        }
        if (sub == oscc) {
            apply_config_file(*sub, osc_c.config);
            return cmd_osc_trajectory(*sub, osc_c, osc_o, out);
        }
        if (sub == hyd) {
            apply_config_file(*sub, hyd_c.config);
            return cmd_hydrogen_figure(*sub, hyd_c, h_o, out);
        }
        if (sub == spec) {
            apply_config_file(*sub, spec_c.config);
            return cmd_spectrum(*sub, spec_c, sp_o, out);
        }
        if (sub == flux) {
            apply_config_file(*sub, flux_c.config);
            return cmd_flux_check(*sub, flux_c, fx_o, out);
        }
        apply_config_file(*sub, ver_c.config);
        return cmd_verify(*sub, ver_c, v_o, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << PF_VERSION << '\n';
        return kSuccess;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "numeric error: " << e.what() << '\n';
        return kNumericError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumericError;
    }
}

}  // namespace pf::cli
