// cli.cpp

#include "cli.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gbomb/sampling.hpp"
#include "gbomb/serialization.hpp"

namespace gbomb {

namespace {

struct Options {
    std::string config;
    std::string out;
    std::string trajectory;
    std::optional<int> order;
    std::uint64_t seed = 0;
};

void emit(const Options& opt, const std::string& content, std::ostream& out)
{
    if (opt.out.empty()) {
        out << content;
    } else {
        write_file_atomic(opt.out, content);
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

long long integer_field(const Json& cfg, const char* key, long long fallback)
{
    if (!cfg.contains(key)) {
        return fallback;
    }
    if (!cfg[key].is_number_integer()) {
        throw ConfigError(std::string("config.") + key + ": expected an integer");
    }
    return cfg[key].get<long long>();
}

std::string string_field(const Json& cfg, const char* key, const std::string& fallback)
{
    if (!cfg.contains(key)) {
        return fallback;
    }
    if (!cfg[key].is_string()) {
        throw ConfigError(std::string("config.") + key + ": expected a string");
    }
    return cfg[key].get<std::string>();
}

double double_field(const Json& cfg, const char* key, double fallback)
{
    if (!cfg.contains(key)) {
        return fallback;
    }
    if (!cfg[key].is_number()) {
        throw ConfigError(std::string("config.") + key + ": expected a number");
    }
    return cfg[key].get<double>();
}

std::vector<double> double_list(const Json& cfg, const char* key, std::vector<double> fallback)
{
    if (!cfg.contains(key)) {
        return fallback;
    }
    const Json& v = cfg[key];
    if (v.is_number()) {
        return {v.get<double>()};
    }
    const Vector values = vector_from_json(v, std::string("config.") + key);
    if (values.size() == 0) {
        throw ConfigError(std::string("config.") + key + ": empty list");
    }
    return {values.data(), values.data() + values.size()};
}

const Json& section(const Json& cfg, const char* key)
{
    if (!cfg.is_object() || !cfg.contains(key)) {
        throw ConfigError(std::string("config: missing section '") + key + "'");
    }
    return cfg[key];
}

int order_option(const Options& opt, int fallback, int max_order)
{
    const int k = opt.order.value_or(fallback);
    if (k < 0 || k > max_order) {
        std::ostringstream os;
        os << "--order must be in [0, " << max_order << "]";
        throw ConfigError(os.str());
    }
    return k;
}

// ---------------------------------------------------------------- evolve

std::vector<std::string> state_columns(const std::string& prefix, Eigen::Index n)
{
    std::vector<std::string> cols;
    for (Eigen::Index i = 0; i < n; ++i) {
        cols.push_back(prefix + "x" + std::to_string(i));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = i; k < n; ++k) {
            cols.push_back(prefix + "cov_" + std::to_string(i) + "_" + std::to_string(k));
        }
    }
    return cols;
}

void append_state(std::vector<std::string>& row, const GaussianState& s)
{
    for (Eigen::Index i = 0; i < s.dim(); ++i) {
        row.push_back(format_double(s.mean(i)));
    }
    for (Eigen::Index i = 0; i < s.dim(); ++i) {
        for (Eigen::Index k = i; k < s.dim(); ++k) {
            row.push_back(format_double(s.cov(i, k)));
        }
    }
}

double state_distance(const GaussianState& a, const GaussianState& b)
{
    return std::max(max_abs(a.mean - b.mean), max_abs(a.cov - b.cov));
}

int cmd_evolve(const Options& opt, std::ostream& out)
{
    const Json cfg = read_json_file(opt.config);
    const JointSetup setup = joint_setup_from_json(section(cfg, "setup"));
    validate_setup(setup);
    const Eigen::Index n = setup.F_S.rows();
    const GaussianState initial =
        cfg.contains("initial_state") ? state_from_json(cfg["initial_state"], "initial_state") : vacuum_state(setup.system_modes());
    if (initial.dim() != n) {
        throw ConfigError("initial_state: dimension differs from the system");
    }
    require_valid_state(initial, "initial_state");
    const std::string mode = string_field(cfg, "mode", "both");
    if (mode != "discrete" && mode != "interpolated" && mode != "both") {
        throw ConfigError("config.mode: expected discrete, interpolated or both");
    }
    const long long steps = integer_field(cfg, "steps", 10);
    const long long samples = integer_field(cfg, "samples_per_step", 4);
    if (steps < 1 || samples < 1) {
        throw ConfigError("config.steps and config.samples_per_step must be >= 1");
    }

    const GaussianChannel step = reduce_from_joint(setup);
    const bool want_interp = mode != "discrete";
    std::optional<Generators> gen;
    if (want_interp) {
        gen = generators_from_channel(step, setup.dt);
    }

    std::vector<std::string> header{"t"};
    if (mode == "both") {
        for (auto& c : state_columns("interp_", n)) header.push_back(c);
        for (auto& c : state_columns("disc_", n)) header.push_back(c);
        header.push_back("max_abs_diff");
    } else {
        for (auto& c : state_columns("", n)) header.push_back(c);
    }

    std::ostringstream csv;
    csv << csv_line(header) << "\n";
    GaussianState discrete = initial;
    const long long substeps = want_interp ? samples : 1;
    for (long long s = 0; s <= steps * substeps; ++s) {
        const bool stroboscopic = s % substeps == 0;
        const long long step_index = s / substeps;
        if (stroboscopic && step_index > 0) {
            discrete = apply(step, discrete);
            const StateCheck check = validate_state(discrete);
            if (!check.valid) {
                std::ostringstream os;
                os << "discrete state at step " << step_index << " is not a valid Gaussian state: " << check.reason;
                throw InvariantViolation(os.str());
            }
        }
        const double t = setup.dt * static_cast<double>(s) / static_cast<double>(substeps);
        std::vector<std::string> row{format_double(t)};
        if (mode == "discrete") {
            append_state(row, discrete);
        } else {
            const GaussianState interp = apply(propagate(*gen, t), initial);
            append_state(row, interp);
            if (mode == "both") {
                if (stroboscopic) {
                    append_state(row, discrete);
                    const double diff = state_distance(interp, discrete);
                    const double scale = std::max(1.0, std::max(max_abs(discrete.cov), max_abs(discrete.mean)));
                    if (diff > 1e-8 * scale) {
                        std::ostringstream os;
                        os << "interpolated and discrete states differ by " << diff << " at t = " << t;
                        throw InvariantViolation(os.str());
                    }
                    row.push_back(format_double(diff));
                } else {
                    row.resize(row.size() + static_cast<std::size_t>(n + n * (n + 1) / 2) + 1);
                }
            }
        }
        csv << csv_line(row) << "\n";
    }
    emit(opt, csv.str(), out);
    return 0;
}

// ---------------------------------------------------------------- thermalize

int cmd_thermalize(const Options& opt, std::ostream& out)
{
    const Json cfg = read_json_file(opt.config);
    const OscillatorBathSetup bath = bath_setup_from_json(section(cfg, "bath"));
    const ThermalReport report = analyze(bath);

    GaussianState initial = vacuum_state(1);
    if (cfg.contains("initial_state")) {
        initial = state_from_json(cfg["initial_state"], "initial_state");
    } else if (cfg.contains("initial_nu")) {
        initial = thermal_state(double_field(cfg, "initial_nu", 1.0), 1);
    }

    SimulationOptions sim;
    const std::string mode = string_field(cfg, "mode", "exact");
    if (mode == "exact") {
        sim.mode = SimulationMode::exact;
    } else if (mode == "first_order") {
        sim.mode = SimulationMode::first_order;
    } else {
        throw ConfigError("config.mode: expected exact or first_order");
    }
    long long default_steps = 10000;
    if (report.has_fixed_point) {
        // ten relaxation times, 1/(dt det G) each
        default_steps = static_cast<long long>(std::ceil(10.0 / (report.rate * bath.dt)));
    }
    sim.steps = integer_field(cfg, "steps", default_steps);
    sim.sample_stride = integer_field(cfg, "sample_stride", std::max(1LL, sim.steps / 1000));
    sim.stop_at_fixed_point = cfg.value("stop_at_fixed_point", false);
    if (sim.steps < 1 || sim.sample_stride < 1) {
        throw ConfigError("config.steps and config.sample_stride must be >= 1");
    }
    const Trajectory traj = simulate(bath, initial, sim);

    if (report.has_fixed_point && *report.nu_infinity < bath.nu_A * (1.0 - 1e-12)) {
        throw InvariantViolation("fixed point below the bath parameter");
    }
    const StateCheck final_check = validate_state(traj.final_state);
    if (!final_check.valid) {
        throw InvariantViolation("final state is not a valid Gaussian state: " + final_check.reason);
    }

    const TrajectoryPoint& last = traj.points.back();
    Json doc;
    doc["bath"] = to_json(bath);
    doc["report"] = to_json(report);
    doc["simulation"] = {{"mode", mode},
                         {"steps", sim.steps},
                         {"t_final", last.t},
                         {"nu_S", last.coefficients.nu_S},
                         {"s_cross", last.coefficients.s_cross},
                         {"s_plus", last.coefficients.s_plus},
                         {"purity", last.purity},
                         {"reached_fixed_point", traj.reached_fixed_point},
                         {"fixed_point_time", traj.fixed_point_time ? Json(*traj.fixed_point_time) : Json(nullptr)}};

    if (!opt.trajectory.empty()) {
        std::ostringstream csv;
        csv << "t,nu_S,s_cross,s_plus,purity\n";
        for (const TrajectoryPoint& p : traj.points) {
            csv << csv_line({format_double(p.t), format_double(p.coefficients.nu_S),
                             format_double(p.coefficients.s_cross), format_double(p.coefficients.s_plus),
                             format_double(p.purity)})
                << "\n";
        }
        write_file_atomic(opt.trajectory, csv.str());
    }
    emit(opt, dump(doc), out);
    return 0;
}

// ---------------------------------------------------------------- check-cp

struct SweepEntry {
    JointSetup setup;
    Json label;
};

std::vector<SweepEntry> sweep_entries(const Json& cfg, std::uint64_t seed)
{
    std::vector<SweepEntry> entries;
    if (cfg.contains("setup")) {
        entries.push_back({joint_setup_from_json(cfg["setup"]), {{"source", "setup"}}});
        return entries;
    }
    const Json& sweep = section(cfg, "sweep");
    const std::string kind = string_field(sweep, "kind", "random");
    if (kind == "random") {
        RandomSetupOptions o;
        o.system_modes = static_cast<int>(integer_field(sweep, "system_modes", 1));
        o.ancilla_modes = static_cast<int>(integer_field(sweep, "ancilla_modes", 1));
        o.nu_min = double_field(sweep, "nu_min", o.nu_min);
        o.nu_max = double_field(sweep, "nu_max", o.nu_max);
        o.squeeze = double_field(sweep, "squeeze", o.squeeze);
        if (o.system_modes < 1 || o.ancilla_modes < 1 || !(o.nu_min >= 1.0) || !(o.nu_max >= o.nu_min)) {
            throw ConfigError("sweep: need modes >= 1 and 1 <= nu_min <= nu_max");
        }
        const long long count = integer_field(sweep, "count", 10);
        const std::vector<double> dts = double_list(sweep, "dt", {0.01});
        Rng rng(seed);
        for (long long i = 0; i < count; ++i) {
            o.dt = dts[static_cast<std::size_t>(i) % dts.size()];
            entries.push_back({random_setup(rng, o), {{"source", "random"}, {"index", i}}});
        }
    } else if (kind == "qq_ground") {
        for (double ws : double_list(sweep, "omega_s", {1.0})) {
            for (double wa : double_list(sweep, "omega_a", {1.0})) {
                for (double g : double_list(sweep, "g", {0.3})) {
                    for (double dt : double_list(sweep, "dt", {0.1})) {
                        entries.push_back({qq_ground_setup(ws, wa, g, dt),
                                           {{"source", "qq_ground"}, {"omega_s", ws}, {"omega_a", wa}, {"g", g}}});
                    }
                }
            }
        }
    } else {
        throw ConfigError("sweep.kind: expected random or qq_ground");
    }
    return entries;
}

int cmd_check_cp(const Options& opt, std::ostream& out)
{
    const Json cfg = read_json_file(opt.config);
    const int order = order_option(opt, 2, kMaxGeneratorSeriesOrder);
    const double tol = double_field(cfg, "tolerance", 1e-9);
    const std::vector<SweepEntry> entries = sweep_entries(cfg, opt.seed);

    std::vector<long long> failed(static_cast<std::size_t>(order) + 1, 0);
    std::vector<double> min_margin(static_cast<std::size_t>(order) + 1, INFINITY);
    Json rows = Json::array();
    Json first_violation = nullptr;
    for (const SweepEntry& e : entries) {
        validate_setup(e.setup);
        const CpReport exact = is_cptp(reduce_from_joint(e.setup), tol);
        if (!exact.ok) {
            std::ostringstream os;
            os << "exact bombardment channel fails the CP test (margin " << exact.margin << ")";
            throw InvariantViolation(os.str());
        }
        const GeneratorSeries series = series_from_channel_series(channel_taylor(e.setup, order + 1), order);
        Json row = e.label;
        row["dt"] = e.setup.dt;
        row["exact_channel"] = to_json(exact);
        Json per_order = Json::array();
        for (int k = 0; k <= order; ++k) {
            const CpReport r = truncated_cp_check(series, k, e.setup.dt, tol);
            if (k == 0 && !r.ok) {
                throw InvariantViolation("zeroth-order generators are not unitary");
            }
            const auto ku = static_cast<std::size_t>(k);
            min_margin[ku] = std::min(min_margin[ku], r.margin);
            if (!r.ok) {
                ++failed[ku];
                if (first_violation.is_null()) {
                    first_violation = e.label;
                    first_violation["k"] = k;
                    first_violation["margin"] = r.margin;
                    first_violation["setup"] = to_json(e.setup);
                }
            }
            per_order.push_back({{"k", k}, {"ok", r.ok}, {"margin", r.margin}});
        }
        row["orders"] = std::move(per_order);
        rows.push_back(std::move(row));
    }
    Json summary = Json::array();
    for (int k = 0; k <= order; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        summary.push_back({{"k", k},
                           {"passed", static_cast<long long>(entries.size()) - failed[ku]},
                           {"failed", failed[ku]},
                           {"min_margin", min_margin[ku]}});
    }
    Json doc;
    doc["order"] = order;
    doc["tolerance"] = tol;
    doc["seed"] = opt.seed;
    doc["summary"] = std::move(summary);
    doc["first_violation"] = std::move(first_violation);
    doc["entries"] = std::move(rows);
    emit(opt, dump(doc), out);
    return 0;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const Options& opt, std::ostream& out)
{
    const Json cfg = read_json_file(opt.config);
    const double eps = double_field(cfg, "eps", 1e-10);
    Json doc;
    if (cfg.contains("generators")) {
        doc["dynamics"] = to_json(classify(generators_from_json(cfg["generators"]), eps));
        emit(opt, dump(doc), out);
        return 0;
    }
    const JointSetup setup = joint_setup_from_json(section(cfg, "setup"));
    const int order = order_option(opt, 2, kMaxGeneratorSeriesOrder);
    const GeneratorSeries series = series_from_channel_series(channel_taylor(setup, order + 1), order);
    Json orders = Json::array();
    bool conforms = true;
    for (int k = 0; k <= order; ++k) {
        const DynamicsReport r = table_availability(series, k, eps);
        const bool subset = r.subset_of(available_dynamics(k));
        conforms = conforms && subset;
        orders.push_back({{"k", k}, {"dynamics", to_json(r)}, {"within_table", subset}});
    }
    doc["orders"] = std::move(orders);
    doc["within_table"] = conforms;
    emit(opt, dump(doc), out);
    if (!conforms) {
        throw InvariantViolation("classified dynamics outside the table of available dynamics");
    }
    return 0;
}

// ---------------------------------------------------------------- series

int cmd_series(const Options& opt, std::ostream& out)
{
    const Json cfg = read_json_file(opt.config);
    const JointSetup setup = joint_setup_from_json(section(cfg, "setup"));
    const int order = order_option(opt, 2, kMaxGeneratorSeriesOrder);
    const GeneratorSeries series = series_from_channel_series(channel_taylor(setup, order + 1), order);
    const GeneratorSeries closed = closed_form_series(setup, std::min(order, kMaxClosedFormOrder));
    double diff = 0.0;
    for (std::size_t k = 0; k < closed.terms.size(); ++k) {
        diff = std::max({diff, max_abs(series.terms[k].A - closed.terms[k].A),
                         max_abs(series.terms[k].b - closed.terms[k].b),
                         max_abs(series.terms[k].C - closed.terms[k].C)});
    }
    Json doc;
    doc["order"] = order;
    doc["series"] = to_json(series);
    doc["closed_form_max_diff"] = diff;
    emit(opt, dump(doc), out);
    if (diff > 1e-8) {
        throw InvariantViolation("closed-form and channel-route series disagree");
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gaussian ancillary bombardment toolkit", "gbomb"};
    app.require_subcommand(1);
    Options opt;

    struct Command {
        const char* name;
        const char* help;
        std::function<int(const Options&, std::ostream&)> run;
        bool takes_order;
        bool takes_trajectory;
    };
    const std::vector<Command> commands = {
        {"evolve", "discrete and/or interpolated evolution, CSV trajectory", cmd_evolve, false, false},
        {"thermalize", "oscillator bath analysis and simulation", cmd_thermalize, false, true},
        {"check-cp", "complete-positivity margins of truncated generator series", cmd_check_cp, true, false},
        {"classify", "dynamics types present at each order", cmd_classify, true, false},
        {"series", "generator series coefficients", cmd_series, true, false},
    };
    std::vector<CLI::App*> subs;
    for (const Command& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("--config", opt.config, "JSON config file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", opt.out, "output path (default: stdout)");
        sub->add_option("--seed", opt.seed, "seed for randomized sweeps");
        if (c.takes_order) {
            sub->add_option("--order", opt.order, "series order");
        }
        if (c.takes_trajectory) {
            sub->add_option("--trajectory", opt.trajectory, "trajectory CSV path");
        }
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        for (std::size_t i = 0; i < commands.size(); ++i) {
            if (subs[i]->parsed()) {
                return commands[i].run(opt, out);
            }
        }
        return 1;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const BranchCutEigenvalue& e) {
        err << "numerical precondition failed: " << e.what()
            << "\nhint: the step channel has an eigenvalue on the negative real axis; halve dt and retry\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "numerical precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace gbomb
