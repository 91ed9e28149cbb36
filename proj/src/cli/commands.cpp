#include "sqz/cli/commands.hpp"

#include "sqz/constants.hpp"
#include "sqz/entanglement.hpp"
#include "sqz/errors.hpp"
#include "sqz/homodyne.hpp"
#include "sqz/noise_budget.hpp"
#include "sqz/phase_space.hpp"
#include "sqz/photon_stats.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace sqz::cli
{
namespace
{
using json = nlohmann::ordered_json;
constexpr double kDeg = constants::pi / 180.0;

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8e", v);
    return buf;
}

// Tabular result rendered either as CSV or as JSON with a metadata block.
struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string render_csv(const Table &t)
{
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out += (i ? "," : "") + t.columns[i];
    out += '\n';
    for (const auto &row : t.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            out += (i ? "," : "") + sci(row[i]);
        out += '\n';
    }
    return out;
}

json metadata(const std::string &command, const Config &cfg, const std::vector<std::string> &warnings)
{
    json m;
    m["command"] = command;
    m["version"] = kVersion;
    m["constants"] = {{"hbar", constants::hbar}, {"c", constants::c}};
    m["config"] = cfg.echo();
    m["warnings"] = warnings;
    return m;
}

std::string render(const std::string &command,
                   const Config &cfg,
                   const RunOptions &opts,
                   const Table &table,
                   const std::vector<std::string> &warnings,
                   json extra = json::object())
{
    if (opts.format == Format::csv)
        return render_csv(table);
    json doc;
    doc["metadata"] = metadata(command, cfg, warnings);
    for (auto &[k, v] : extra.items())
        doc["metadata"][k] = v;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    return doc.dump(2) + "\n";
}

std::vector<double> read_grid(Config &cfg, double f_min, double f_max, long long points)
{
    const double lo = cfg.get_double("grid", "f_min_hz", f_min);
    const double hi = cfg.get_double("grid", "f_max_hz", f_max);
    const long long n = cfg.get_int("grid", "points", points);
    const bool log_spacing = cfg.get_bool("grid", "log_spacing", true);
    detail::require(n >= 1, "config: [grid] points must be at least 1");
    detail::require(lo > 0.0 && hi >= lo, "config: [grid] needs 0 < f_min_hz <= f_max_hz");
    return frequency_grid(lo, hi, static_cast<std::size_t>(n), log_spacing);
}

std::uint64_t read_seed(Config &cfg, const RunOptions &opts)
{
    if (opts.seed)
        cfg.set("run", "seed", std::to_string(*opts.seed));
    return cfg.get_u64("run", "seed", 1);
}

std::size_t read_count(Config &cfg, const std::string &section, const std::string &key, long long fallback)
{
    const long long v = cfg.get_int(section, key, fallback);
    detail::require(v >= 1, "config: [" + section + "] " + key + " must be positive");
    return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------- noise-budget

CommandOutput cmd_noise_budget(Config &cfg, const RunOptions &opts)
{
    const double power = cfg.get_double("interferometer", "power_w", 4000.0);
    const double lambda = cfg.get_double("interferometer", "wavelength_m", 1550e-9);
    const double length = cfg.get_double("interferometer", "arm_length_m", 600.0);
    const double mass = cfg.get_double("interferometer", "mirror_mass_kg", 0.1);
    const double t_fp = cfg.get_double("interferometer", "arm_cavity_t_fp", 0.0);
    const double f_m = cfg.get_double("interferometer", "pendulum_f_hz", 0.0);
    const double q = cfg.get_double("interferometer", "pendulum_q", 1e7);

    const std::string mode = cfg.get_string("injection", "mode", "none");
    Injection injection = NoInjection{};
    if (mode == "fixed")
    {
        const double db = cfg.get_double("injection", "squeeze_db", 10.0);
        const double angle = cfg.get_double("injection", "angle_deg", 45.0);
        const double eta = cfg.get_double("injection", "eta", 1.0);
        injection = FixedSqueeze{SqueezeSpec::from_db(db, angle * kDeg, eta)};
    }
    else if (mode == "optimal")
    {
        injection = OptimalFrequencyDependent{squeeze_parameter_from_db(cfg.get_double("injection", "squeeze_db", 10.0))};
    }
    else if (mode != "none")
    {
        throw InvalidArgument("config: [injection] mode must be none, fixed or optimal");
    }

    const std::string norm_name = cfg.get_string("output", "normalization", "displacement");
    Normalization norm = Normalization::displacement;
    if (norm_name == "strain")
        norm = Normalization::strain;
    else if (norm_name != "displacement")
        throw InvalidArgument("config: [output] normalization must be displacement or strain");

    const std::vector<double> grid = read_grid(cfg, 1.0, 1e4, 200);
    cfg.reject_unknown();

    detail::require(t_fp >= 0.0 && f_m >= 0.0, "config: arm_cavity_t_fp and pendulum_f_hz must be non-negative");
    std::optional<ArmCavity> cavity;
    if (t_fp > 0.0)
        cavity = ArmCavity{t_fp};
    std::optional<Pendulum> pendulum;
    if (f_m > 0.0)
        pendulum = Pendulum{constants::two_pi * f_m, q};
    const InterferometerConfig ifo(power, lambda, length, mass, cavity, pendulum);

    Table t;
    t.columns = {"f_hz", "shot", "rpn", "sql", "total", "total_injected"};
    for (const auto &r : noise_budget_table(ifo, grid, injection, norm))
        t.rows.push_back({r.f_hz, r.shot, r.rpn, r.sql, r.total, r.total_injected});

    json extra;
    extra["units"] = std::string(units_name(units_for(norm)));
    extra["omega_sql_rad_s"] = omega_sql(ifo);
    return {render("noise-budget", cfg, opts, t, {}, extra), {}};
}

// ---------------------------------------------------------------- photon-stats

CommandOutput cmd_photon_stats(Config &cfg, const RunOptions &opts)
{
    const auto alpha = cfg.get_list("photon", "alpha", {0.0, 0.0, 0.0, 4.0, 4.0, 4.0});
    const auto r = cfg.get_list("photon", "r", {0.5, 1.0, 2.0, 1.0, 1.0, 0.0});
    const auto theta = cfg.get_list("photon", "theta", {0.0, 0.0, 0.0, 0.0, 0.5 * constants::pi, 0.0});
    const long long n_max_raw = cfg.get_int("photon", "n_max", 400);
    cfg.reject_unknown();
    detail::require(n_max_raw >= 0, "config: [photon] n_max must be non-negative");
    const auto n_max = static_cast<std::size_t>(n_max_raw);
    detail::require(alpha.size() == r.size() && r.size() == theta.size(),
                    "config: [photon] alpha, r and theta lists must have equal length");

    Table t;
    t.columns = {"panel", "alpha", "r", "theta", "n", "probability"};
    std::vector<std::string> warnings;
    json panels = json::array();
    for (std::size_t p = 0; p < alpha.size(); ++p)
    {
        const PhotonDistribution d = pmf_table({alpha[p], 0.0}, r[p], theta[p], n_max);
        for (std::size_t n = 0; n <= n_max; ++n)
            t.rows.push_back({static_cast<double>(p), alpha[p], r[p], theta[p], static_cast<double>(n), d.probs[n]});
        if (!d.well_truncated())
            warnings.push_back("panel " + std::to_string(p) + ": n_max truncates probability mass (mass " +
                               format_double(d.mass) + ")");
        panels.push_back({{"alpha", alpha[p]},
                          {"r", r[p]},
                          {"theta", theta[p]},
                          {"mean", d.mean()},
                          {"mean_analytic", d.mean_analytic},
                          {"mass", d.mass}});
    }
    return {render("photon-stats", cfg, opts, t, warnings, {{"panels", panels}}), warnings};
}

// ---------------------------------------------------------------------- wigner

GaussianState read_single_mode(Config &cfg, double default_db)
{
    const double db = cfg.get_double("state", "squeeze_db", default_db);
    const double angle = cfg.get_double("state", "angle_deg", 0.0);
    const double eta = cfg.get_double("state", "eta", 1.0);
    const double ax = cfg.get_double("state", "alpha_x", 0.0);
    const double ay = cfg.get_double("state", "alpha_y", 0.0);
    return displace(lossy_squeezed_vacuum(SqueezeSpec::from_db(db, angle * kDeg, eta)), 0, ax, ay);
}

CommandOutput cmd_wigner(Config &cfg, const RunOptions &opts)
{
    const GaussianState state = read_single_mode(cfg, 10.0);
    const std::size_t points = read_count(cfg, "grid", "points", static_cast<long long>(kDefaultWignerPoints));
    const double span = cfg.get_double("grid", "span_sigmas", kDefaultWignerSpan);
    cfg.reject_unknown();

    const WignerGrid g = wigner_grid(state, 0, points, span);

    Table t;
    t.columns = {"x", "y", "w"};
    for (std::size_t i = 0; i < g.x_axis.size(); ++i)
        for (std::size_t j = 0; j < g.y_axis.size(); ++j)
            t.rows.push_back({g.x_axis[i], g.y_axis[j], g.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))});
    return {render("wigner", cfg, opts, t, {}, {{"integral", g.integral()}}), {}};
}

// -------------------------------------------------------------------- homodyne

Table trace_table(const HomodyneTrace &tr)
{
    Table t;
    t.columns = {"t_s", "sample"};
    for (std::size_t i = 0; i < tr.samples.size(); ++i)
        t.rows.push_back({static_cast<double>(i) / tr.sample_rate_hz, tr.samples[i]});
    return t;
}

CommandOutput cmd_homodyne(Config &cfg, const RunOptions &opts)
{
    const std::uint64_t seed = read_seed(cfg, opts);
    const std::string kind = cfg.get_string("homodyne", "kind", "michelson");

    if (kind == "quadrature")
    {
        const GaussianState state = read_single_mode(cfg, 10.0);
        const double lo = cfg.get_double("homodyne", "lo_angle_deg", 0.0);
        const std::size_t n = read_count(cfg, "homodyne", "n_samples", 4096);
        const double fs = cfg.get_double("homodyne", "sample_rate_hz", 1e6);
        cfg.reject_unknown();
        const HomodyneTrace tr = sample_quadratures(state, 0, lo * kDeg, n, seed, fs);
        return {render("homodyne", cfg, opts, trace_table(tr), {},
                       {{"analytic_variance", quadrature_variance(state, 0, lo * kDeg)}, {"sample_variance", tr.variance()}}),
                {}};
    }
    if (kind == "scan")
    {
        const double db = cfg.get_double("state", "squeeze_db", 5.0);
        const double start = cfg.get_double("homodyne", "ramp_start_deg", 0.0);
        const double end = cfg.get_double("homodyne", "ramp_end_deg", 360.0);
        const std::size_t n = read_count(cfg, "homodyne", "n_samples", 1000000);
        const std::size_t window = read_count(cfg, "homodyne", "window", 10000);
        cfg.reject_unknown();
        const ScanTrace s = scanned_phase_trace(squeezed_vacuum(SqueezeSpec::from_db(db, 0.0)), 0,
                                                {start * kDeg, end * kDeg}, n, window, seed);
        Table t;
        t.columns = {"phase_rad", "level_db", "analytic_db"};
        for (std::size_t i = 0; i < s.phase_rad.size(); ++i)
            t.rows.push_back({s.phase_rad[i], s.level_db[i], s.analytic_db[i]});
        return {render("homodyne", cfg, opts, t, {}), {}};
    }
    if (kind == "michelson")
    {
        const double amp = cfg.get_double("homodyne", "signal_amp", 0.5);
        const double f = cfg.get_double("homodyne", "signal_freq_hz", 1000.0);
        const double db = cfg.get_double("homodyne", "squeeze_db", 10.0);
        const double duration = cfg.get_double("homodyne", "duration_s", 0.01);
        const double fs = cfg.get_double("homodyne", "sample_rate_hz", 1e5);
        cfg.reject_unknown();
        const HomodyneTrace tr = simulate_michelson_output(amp, f, db, duration, fs, seed);
        const double mf = matched_filter_statistic(tr, f, variance_from_db(db));
        return {render("homodyne", cfg, opts, trace_table(tr), {}, {{"matched_filter_sigma", mf}}), {}};
    }
    if (kind == "opo")
    {
        const double x = cfg.get_double("homodyne", "pump_ratio", 0.5);
        const double linewidth = cfg.get_double("homodyne", "linewidth_hz", 20e3);
        const double eta = cfg.get_double("homodyne", "eta", 0.9);
        const std::size_t n = read_count(cfg, "homodyne", "n_samples", 1 << 20);
        const double fs = cfg.get_double("homodyne", "sample_rate_hz", 1e6);
        const double rbw = cfg.get_double("homodyne", "rbw_hz", 1000.0);
        cfg.reject_unknown();
        const double gamma = constants::two_pi * linewidth;
        const HomodyneTrace tr = simulate_opo_trace(x, gamma, eta, n, fs, seed);
        const AnalyzerSpectrum sp = spectrum_analyzer(tr, rbw);
        const auto level = to_db(sp.series.values);
        Table t;
        t.columns = {"f_hz", "level_db", "model_db"};
        for (std::size_t k = 0; k < level.size(); ++k)
        {
            const double model = opo_squeezing_spectrum(x, gamma, eta, constants::two_pi * sp.series.f_hz[k]).squeezed;
            t.rows.push_back({sp.series.f_hz[k], level[k], 10.0 * std::log10(model)});
        }
        return {render("homodyne", cfg, opts, t, {}, {{"averages", sp.averages}}), {}};
    }
    throw InvalidArgument("config: [homodyne] kind must be quadrature, scan, michelson or opo");
}

// ------------------------------------------------------------------------- qdm

CommandOutput cmd_qdm(Config &cfg, const RunOptions &opts)
{
    const std::uint64_t seed = read_seed(cfg, opts);
    QdmScenario sc;
    sc.signal.amplitude = cfg.get_double("qdm", "signal_amp", 0.5);
    sc.signal.freq_hz = cfg.get_double("qdm", "signal_freq_hz", 50e3);
    sc.disturbance.amplitude = cfg.get_double("qdm", "disturbance_amp", 1.0);
    sc.disturbance.freq_hz = cfg.get_double("qdm", "disturbance_freq_hz", 120e3);
    sc.disturbance.angle = cfg.get_double("qdm", "disturbance_angle_deg", 30.0) * kDeg;
    sc.squeeze_db_a = cfg.get_double("qdm", "squeeze_db_a", 10.0);
    sc.squeeze_db_b = cfg.get_double("qdm", "squeeze_db_b", 10.0);
    sc.efficiency = cfg.get_double("qdm", "efficiency", 0.85);
    sc.n_samples = read_count(cfg, "qdm", "n_samples", 1 << 18);
    sc.sample_rate_hz = cfg.get_double("qdm", "sample_rate_hz", 1e6);
    const double rbw = cfg.get_double("qdm", "rbw_hz", 1000.0);
    const double threshold = cfg.get_double("qdm", "threshold_sigma", 5.0);
    cfg.reject_unknown();

    QdmReadout ro = qdm_dual_readout(sc, seed);
    const VetoMask mask = qdm_veto(ro, threshold, rbw);
    ro.veto_mask = mask.flagged;
    const AnalyzerSpectrum sa = spectrum_analyzer(ro.trace_a, rbw);
    const AnalyzerSpectrum sb = spectrum_analyzer(ro.trace_b, rbw);

    Table t;
    t.columns = {"f_hz", "spectrum_a", "spectrum_b", "veto"};
    for (std::size_t k = 0; k < sa.series.values.size(); ++k)
        t.rows.push_back({sa.series.f_hz[k], sa.series.values[k], sb.series.values[k], ro.veto_mask[k] ? 1.0 : 0.0});

    json extra;
    extra["floor_a_db"] = 10.0 * std::log10(ro.floor_a);
    extra["floor_b_db"] = 10.0 * std::log10(ro.floor_b);
    extra["vetoed_bins"] = mask.count();
    return {render("qdm", cfg, opts, t, {}, extra), {}};
}

// ---------------------------------------------------------------- entanglement

CommandOutput cmd_entanglement(Config &cfg, const RunOptions &opts)
{
    const std::string preset = cfg.get_string("entanglement", "preset", "s_class");
    std::function<BipartiteCovariance()> build;
    if (preset == "s_class" || preset == "v_class" || preset == "vacua")
    {
        cfg.reject_unknown();
        build = [preset] {
            const GaussianState sq0 = squeezed_vacuum(SqueezeSpec::from_db(10.0, 0.0));
            const GaussianState sq90 = squeezed_vacuum(SqueezeSpec::from_db(10.0, 0.5 * constants::pi));
            if (preset == "s_class")
                return assemble_bipartite(sq0, sq90);
            if (preset == "v_class")
                return assemble_bipartite(sq0, vacuum_state(1));
            return assemble_bipartite(vacuum_state(1), vacuum_state(1));
        };
    }
    else if (preset == "sources")
    {
        const double db_a = cfg.get_double("entanglement", "squeeze_db_a", 10.0);
        const double db_b = cfg.get_double("entanglement", "squeeze_db_b", 10.0);
        const double offset = cfg.get_double("entanglement", "offset_deg", 90.0);
        const double eta = cfg.get_double("entanglement", "efficiency", 1.0);
        cfg.reject_unknown();
        build = [=] {
            BipartiteCovariance bp = assemble_bipartite(squeezed_vacuum(SqueezeSpec::from_db(db_a, 0.0)),
                                                        squeezed_vacuum(SqueezeSpec::from_db(db_b, offset * kDeg)));
            return BipartiteCovariance(apply_loss(apply_loss(bp.state(), 0, eta), 1, eta));
        };
    }
    else if (preset == "matrix")
    {
        const auto entries = cfg.get_list("entanglement", "cov", {});
        cfg.reject_unknown();
        detail::require(entries.size() == 16, "config: [entanglement] cov needs 16 row-major entries");
        build = [entries] {
            Matrix4 m;
            for (int i = 0; i < 16; ++i)
                m(i / 4, i % 4) = entries[static_cast<std::size_t>(i)];
            return BipartiteCovariance(m);
        };
    }
    else
    {
        throw InvalidArgument("config: [entanglement] preset must be s_class, v_class, vacua, sources or matrix");
    }

    const BipartiteCovariance bp = build();
    const double duan = duan_value(bp);
    const double reid = reid_epr(bp);

    if (opts.format == Format::csv)
    {
        std::string out = "metric,value,threshold,verdict\n";
        out += "duan," + sci(duan) + "," + sci(2.0) + "," + (duan < 2.0 ? "PASS" : "FAIL") + "\n";
        out += "reid_epr," + sci(reid) + "," + sci(1.0) + "," + (reid < 1.0 ? "PASS" : "FAIL") + "\n";
        return {out, {}};
    }
    json doc;
    doc["metadata"] = metadata("entanglement", cfg, {});
    json cov = json::array();
    for (int i = 0; i < 4; ++i)
        cov.push_back({bp.cov()(i, 0), bp.cov()(i, 1), bp.cov()(i, 2), bp.cov()(i, 3)});
    doc["covariance"] = cov;
    doc["duan"] = {{"value", duan}, {"threshold", 2.0}, {"inseparable", duan < 2.0}};
    doc["reid_epr"] = {{"value", reid}, {"threshold", 1.0}, {"epr_steering", reid < 1.0}};
    return {doc.dump(2) + "\n", {}};
}

// --------------------------------------------------------------- filter-cavity

CommandOutput cmd_filter_cavity(Config &cfg, const RunOptions &opts)
{
    const auto detuning = cfg.get_list("filter", "detuning_hz", {15.15e6});
    const auto half_bw = cfg.get_list("filter", "half_bandwidth_hz", {0.735e6});
    const std::vector<double> grid = read_grid(cfg, 1e6, 30e6, 300);
    cfg.reject_unknown();
    detail::require(detuning.size() == half_bw.size(),
                    "config: [filter] detuning_hz and half_bandwidth_hz need one entry per cavity");

    FilterCavitySpec spec;
    for (std::size_t i = 0; i < detuning.size(); ++i)
        spec.cavities.push_back({detuning[i], half_bw[i]});

    Table t;
    t.columns = {"f_hz", "rotation_deg"};
    for (double f : grid)
        t.rows.push_back({f, filter_cavity_rotation(spec, constants::two_pi * f) / kDeg});
    return {render("filter-cavity", cfg, opts, t, {}), {}};
}

using Handler = CommandOutput (*)(Config &, const RunOptions &);

const std::map<std::string, Handler> &handlers()
{
    static const std::map<std::string, Handler> table = {
        {"noise-budget", cmd_noise_budget},
        {"photon-stats", cmd_photon_stats},
        {"wigner", cmd_wigner},
        {"homodyne", cmd_homodyne},
        {"qdm", cmd_qdm},
        {"entanglement", cmd_entanglement},
        {"filter-cavity", cmd_filter_cavity},
    };
    return table;
}

std::string one_line(std::string s)
{
    for (char &c : s)
    {
        if (c == '\n' || c == '\r')
            c = ' ';
        else if (c == '"')
            c = '\'';
    }
    return s;
}

int report(std::ostream &err, int code, const std::string &kind, const std::string &message)
{
    err << "sqz: error: exit=" << code << " kind=" << kind << " message=\"" << one_line(message) << "\"\n";
    return code;
}

} // namespace

const std::vector<std::string> &command_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto &[name, h] : handlers())
            n.push_back(name);
        return n;
    }();
    return names;
}

CommandOutput run_command(const std::string &name, Config &config, const RunOptions &options)
{
    const auto it = handlers().find(name);
    if (it == handlers().end())
        throw InvalidArgument("unknown command '" + name + "'");
    return it->second(config, options);
}

int main_entry(int argc, char **argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Squeezed-light quantum noise toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    struct Flags
    {
        std::string config;
        std::string out;
        std::string format = "csv";
        std::uint64_t seed = 0;
    } flags;

    std::map<CLI::App *, std::string> subs;
    std::vector<CLI::Option *> seed_opts;
    for (const auto &name : command_names())
    {
        CLI::App *sub = app.add_subcommand(name);
        sub->add_option("--config", flags.config, "Config file (INI-style or JSON)");
        sub->add_option("--out", flags.out, "Output path (default: stdout)");
        sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        seed_opts.push_back(sub->add_option("--seed", flags.seed, "PRNG seed (u64)"));
        subs[sub] = name;
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &)
    {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForVersion &)
    {
        out << kVersion << "\n";
        return 0;
    }
    catch (const CLI::ParseError &e)
    {
        return report(err, 2, "usage", e.what());
    }

    std::string command;
    for (const auto &[sub, name] : subs)
        if (sub->parsed())
            command = name;

    RunOptions opts;
    opts.format = flags.format == "json" ? Format::json : Format::csv;
    for (const CLI::Option *o : seed_opts)
        if (o->count() > 0)
            opts.seed = flags.seed;

    CommandOutput result;
    try
    {
        Config cfg = flags.config.empty() ? Config{} : Config::load(flags.config);
        result = run_command(command, cfg, opts);
    }
    catch (const InvalidArgument &e)
    {
        return report(err, 2, "invalid_argument", e.what());
    }
    catch (const DomainError &e)
    {
        return report(err, 3, "domain_error", e.what());
    }
    catch (const NumericRangeError &e)
    {
        return report(err, 3, "numeric_range", e.what());
    }
    catch (const std::exception &e)
    {
        return report(err, 1, "internal", e.what());
    }

    for (const auto &w : result.warnings)
        err << "sqz: warning: " << one_line(w) << "\n";

    if (flags.out.empty())
    {
        out << result.text;
        return 0;
    }
    std::ofstream f(flags.out, std::ios::binary);
    if (!f || !(f << result.text) || !f.flush())
        return report(err, 2, "io", "cannot write '" + flags.out + "'");
    return 0;
}

} // namespace sqz::cli
