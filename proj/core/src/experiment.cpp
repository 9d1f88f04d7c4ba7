#include "radheat/experiment.hpp"

#include "radheat/expr.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

namespace radheat {

namespace {

constexpr double kPiHalf = 1.5707963267948966;

bool parse_scaled_cos(const std::string& id, double& scale) {
    if (id == "cos") {
        scale = 1.0;
        return true;
    }
    if (id.size() > 3 && id.substr(id.size() - 3) == "cos") {
        const std::string prefix = id.substr(0, id.size() - 3);
        char* end = nullptr;
        const double v = std::strtod(prefix.c_str(), &end);
        if (end == prefix.c_str() + prefix.size()) {
            scale = v;
            return true;
        }
    }
    return false;
}

struct EnergyEvaluator {
    // J_h needs the power alpha; without one only the gradient part is
    // meaningful, so that is what gets logged.
    const TriDiag* stiffness;
    int dimension;
    double alpha; // <= 0 means no power term

    double operator()(const NodalField& u) const {
        if (alpha > 0.0) return discrete_energy(u, alpha, dimension, *stiffness);
        return 0.5 * tridiag_quadratic_form(*stiffness, u.values_copy());
    }
};

double control_alpha(const ExperimentConfig& config) {
    switch (config.f.kind()) {
    case Nonlinearity::Kind::power:
    case Nonlinearity::Kind::clipped_power:
        return config.f.alpha();
    default:
        throw std::invalid_argument(
            "experiment: the Nakagawa controller requires a power-type nonlinearity");
    }
}

double energy_alpha(const ExperimentConfig& config) {
    switch (config.f.kind()) {
    case Nonlinearity::Kind::power:
    case Nonlinearity::Kind::clipped_power:
        return config.f.alpha();
    default:
        return -1.0;
    }
}

void apply_env_overrides(ExperimentConfig& config) {
    if (const char* env = std::getenv("RADHEAT_QUAD_PTS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1 || v > 128)
            throw std::runtime_error("RADHEAT_QUAD_PTS: expected an integer in [1, 128]");
        config.load_quad_pts = static_cast<int>(v);
    }
}

struct Drive {
    RunTrace trace;
    std::vector<std::pair<double, NodalField>> captures;
};

// Steps until t reaches T or the blow-up monitor trips, capturing the
// field at each requested time (the last state not beyond it).
Drive drive_run(Stepper& stepper, TimeController& controller, double T, double eps,
                std::vector<double> capture_times, const EnergyEvaluator& energy) {
    std::sort(capture_times.begin(), capture_times.end());
    const double t_tol = 1e-9 * std::max(T, 1e-300);
    const int dim = stepper.config().dimension;

    Drive out;
    std::size_t next_capture = 0;
    for (;;) {
        const NodalField& u = stepper.current();
        TraceRow row;
        row.n = stepper.step_index();
        row.t = stepper.time();
        row.l2h = discrete_l2h_norm(u, dim);
        row.tau = controller.next(row.l2h);
        row.linf = linf_norm(u, 0.0);
        row.energy = energy(u);
        row.min_nodal = u.min_value();
        out.trace.rows.push_back(row);

        const StopReason reason = blowup_monitor(out.trace, eps, T);
        const bool stopping =
            reason != StopReason::none || row.t + row.tau > T + t_tol;

        while (next_capture < capture_times.size()) {
            const double s = capture_times[next_capture];
            const bool arrived = row.t >= s - t_tol;
            const bool last_chance = stopping || row.t + row.tau > s + t_tol;
            if (!arrived && !last_chance) break;
            out.captures.emplace_back(row.t, u);
            ++next_capture;
        }

        if (reason != StopReason::none) {
            out.trace.stop = reason;
            break;
        }
        if (row.t + row.tau > T + t_tol) {
            out.trace.stop = StopReason::reached_T;
            break;
        }
        try {
            stepper.step(row.tau);
        } catch (const SingularSystemError&) {
            out.trace.stop = StopReason::step_failure;
            break;
        }
    }
    out.trace.tau_min = controller.tau_min();
    out.trace.tau_max = controller.tau_max();
    out.trace.gamma = controller.gamma();
    out.trace.delta = controller.delta();
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << text;
}

std::string format_row(double a, double b) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", a, b);
    return buf;
}

void validate_common(const ExperimentConfig& config) {
    if (config.dimension < 2)
        throw std::invalid_argument("experiment: dimension must be >= 2");
    if (!(config.T > 0.0)) throw std::invalid_argument("experiment: T must be > 0");
    if (!(config.eps > 0.0)) throw std::invalid_argument("experiment: eps must be > 0");
    if (!(config.lambda > 0.0))
        throw std::invalid_argument("experiment: lambda must be > 0");
    if (!(config.sigma >= 0.0 && config.sigma < 1.0))
        throw std::invalid_argument("experiment: sigma must lie in [0, 1)");
    if (config.load_quad_pts < 1)
        throw std::invalid_argument("experiment: load_quad_pts must be >= 1");
}

} // namespace

ScalarFunction make_initial_condition(const std::string& id) {
    double scale = 0.0;
    if (parse_scaled_cos(id, scale)) {
        ScalarFunction f;
        f.value = [scale](double x) { return scale * std::cos(kPiHalf * x); };
        f.derivative = [scale](double x) {
            return -scale * kPiHalf * std::sin(kPiHalf * x);
        };
        return f;
    }
    ScalarFunction f;
    f.value = parse_expression(id);
    return f; // derivative falls back to finite differences
}

std::vector<std::string> preset_names() {
    return {"fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b", "fig4", "fig6a", "fig6b"};
}

ExperimentConfig load_preset(const std::string& name) {
    ExperimentConfig c;
    c.preset = name;
    if (name == "fig1a" || name == "fig1b" || name == "fig2a" || name == "fig2b") {
        c.variant = (name == "fig1b" || name == "fig2b") ? Variant::nonsym : Variant::sym;
        c.dimension = 5;
        c.f = Nonlinearity::power(4.0 / 3.0);
        c.initial = (name == "fig2a" || name == "fig2b") ? "13cos" : "cos";
        c.m = 50;
        c.lambda = 0.5;
        c.controller = ControllerKind::nakagawa;
        c.T = 0.2;
        c.eps = 1e-8;
        c.init = c.variant == Variant::sym ? InitStrategy::interpolate : InitStrategy::ritz_b;
        return c;
    }
    if (name == "fig3a" || name == "fig3b") {
        c.variant = name == "fig3a" ? Variant::sym : Variant::nonsym;
        c.dimension = 3;
        c.f = Nonlinearity::power(4.0 / 3.0);
        c.initial = "cos";
        c.m_list = {30, 60, 120, 240};
        c.reference_m = 480;
        c.lambda = 0.5;
        c.controller = ControllerKind::uniform;
        c.T = 0.005;
        c.init = c.variant == Variant::sym ? InitStrategy::interpolate : InitStrategy::ritz_b;
        return c;
    }
    if (name == "fig4") {
        c.variant = Variant::sym;
        c.dimension = 4;
        c.f = Nonlinearity::power(4.0);
        c.initial = "3cos";
        c.m_list = {30, 60, 120, 240};
        c.reference_m = 480;
        c.lambda = 0.11;
        c.controller = ControllerKind::uniform;
        c.T = 0.0033;
        c.study_times = {0.0011, 0.0022, 0.0033};
        c.init = InitStrategy::interpolate;
        return c;
    }
    if (name == "fig6a" || name == "fig6b") {
        c.variant = Variant::sym;
        c.dimension = 3;
        c.f = Nonlinearity::power(4.0 / 3.0);
        c.initial = name == "fig6a" ? "cos" : "13cos";
        c.m = 50;
        c.lambda = 0.5;
        c.controller = ControllerKind::nakagawa;
        c.T = 0.2;
        c.eps = 1e-8;
        c.init = InitStrategy::interpolate;
        return c;
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

namespace {

using nlohmann::json;

std::string variant_name(Variant v) { return v == Variant::sym ? "sym" : "nonsym"; }
std::string controller_name(ControllerKind k) {
    return k == ControllerKind::uniform ? "uniform" : "nakagawa";
}
std::string init_name(InitStrategy s) {
    switch (s) {
    case InitStrategy::interpolate: return "interpolate";
    case InitStrategy::ritz_a: return "ritzA";
    case InitStrategy::ritz_b: return "ritzB";
    case InitStrategy::weighted_l2: return "weightedL2";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    if (s == "sym") return Variant::sym;
    if (s == "nonsym") return Variant::nonsym;
    throw std::invalid_argument("config: scheme must be 'sym' or 'nonsym'");
}
ControllerKind parse_controller(const std::string& s) {
    if (s == "uniform") return ControllerKind::uniform;
    if (s == "nakagawa") return ControllerKind::nakagawa;
    throw std::invalid_argument("config: controller must be 'uniform' or 'nakagawa'");
}
InitStrategy parse_init(const std::string& s) {
    if (s == "interpolate") return InitStrategy::interpolate;
    if (s == "ritzA") return InitStrategy::ritz_a;
    if (s == "ritzB") return InitStrategy::ritz_b;
    if (s == "weightedL2") return InitStrategy::weighted_l2;
    throw std::invalid_argument("config: unknown init strategy '" + s + "'");
}

json nonlinearity_to_json(const Nonlinearity& f) {
    json j;
    switch (f.kind()) {
    case Nonlinearity::Kind::zero:
        j["kind"] = "zero";
        break;
    case Nonlinearity::Kind::affine:
        j["kind"] = "affine";
        j["lambda"] = f.lambda();
        j["c"] = f.constant();
        break;
    case Nonlinearity::Kind::power:
        j["kind"] = "power";
        j["alpha"] = f.alpha();
        break;
    case Nonlinearity::Kind::clipped_power:
        j["kind"] = "clipped_power";
        j["alpha"] = f.alpha();
        j["mu"] = f.mu();
        break;
    }
    return j;
}

Nonlinearity nonlinearity_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zero") return Nonlinearity::zero();
    if (kind == "affine")
        return Nonlinearity::affine(j.at("lambda").get<double>(), j.at("c").get<double>());
    if (kind == "power") return Nonlinearity::power(j.at("alpha").get<double>());
    if (kind == "clipped_power")
        return Nonlinearity::clipped_power(j.at("alpha").get<double>(),
                                           j.at("mu").get<double>());
    throw std::invalid_argument("config: unknown nonlinearity kind '" + kind + "'");
}

} // namespace

std::string experiment_config_to_json(const ExperimentConfig& c) {
    json j;
    j["preset"] = c.preset;
    j["scheme"] = variant_name(c.variant);
    j["dimension"] = c.dimension;
    j["nonlinearity"] = nonlinearity_to_json(c.f);
    j["initial"] = c.initial;
    j["m"] = c.m;
    j["m_list"] = c.m_list;
    j["reference_m"] = c.reference_m;
    j["lambda"] = c.lambda;
    j["controller"] = controller_name(c.controller);
    j["T"] = c.T;
    j["study_times"] = c.study_times;
    j["eps"] = c.eps;
    j["sigma"] = c.sigma;
    j["init"] = init_name(c.init);
    j["load_quad_pts"] = c.load_quad_pts;
    j["snapshot_times"] = c.snapshot_times;
    j["out"] = c.out_dir;
    return j.dump(2) + "\n";
}

ExperimentConfig experiment_config_from_json(const std::string& text,
                                             ExperimentConfig base) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");

    static const std::set<std::string> known = {
        "preset", "scheme", "dimension", "nonlinearity", "initial", "m",
        "m_list", "reference_m", "lambda", "controller", "T", "study_times",
        "eps", "sigma", "init", "load_quad_pts", "snapshot_times", "out"};
    for (const auto& item : j.items())
        if (!known.count(item.key()))
            throw std::invalid_argument("config: unknown key '" + item.key() + "'");

    ExperimentConfig c = std::move(base);
    if (j.contains("preset") && !j["preset"].get<std::string>().empty())
        c = load_preset(j["preset"].get<std::string>());
    if (j.contains("scheme")) c.variant = parse_variant(j["scheme"].get<std::string>());
    if (j.contains("dimension")) c.dimension = j["dimension"].get<int>();
    if (j.contains("nonlinearity")) c.f = nonlinearity_from_json(j["nonlinearity"]);
    if (j.contains("initial")) c.initial = j["initial"].get<std::string>();
    if (j.contains("m")) c.m = j["m"].get<std::size_t>();
    if (j.contains("m_list")) c.m_list = j["m_list"].get<std::vector<std::size_t>>();
    if (j.contains("reference_m")) c.reference_m = j["reference_m"].get<std::size_t>();
    if (j.contains("lambda")) c.lambda = j["lambda"].get<double>();
    if (j.contains("controller"))
        c.controller = parse_controller(j["controller"].get<std::string>());
    if (j.contains("T")) c.T = j["T"].get<double>();
    if (j.contains("study_times"))
        c.study_times = j["study_times"].get<std::vector<double>>();
    if (j.contains("eps")) c.eps = j["eps"].get<double>();
    if (j.contains("sigma")) c.sigma = j["sigma"].get<double>();
    if (j.contains("init")) c.init = parse_init(j["init"].get<std::string>());
    if (j.contains("load_quad_pts")) c.load_quad_pts = j["load_quad_pts"].get<int>();
    if (j.contains("snapshot_times"))
        c.snapshot_times = j["snapshot_times"].get<std::vector<double>>();
    if (j.contains("out")) c.out_dir = j["out"].get<std::string>();
    return c;
}

RunResult run_experiment(const ExperimentConfig& raw) {
    ExperimentConfig config = raw;
    apply_env_overrides(config);
    validate_common(config);
    if (config.is_study())
        throw std::invalid_argument(
            "run_experiment: config describes a study (m_list set); use convergence_study");
    if (config.m < 2) throw std::invalid_argument("run_experiment: m must be >= 2");

    MeshPtr mesh = make_uniform_mesh(config.m);
    const double h = mesh->h();
    const double tau_base = config.lambda * h * h;

    SchemeConfig sc;
    sc.dimension = config.dimension;
    sc.variant = config.variant;
    sc.f = config.f;
    sc.load_quad_pts = config.load_quad_pts;
    sc.init = config.init;

    const NodalField u0 = initialize(mesh, sc, make_initial_condition(config.initial));
    Stepper stepper(u0, sc);
    TimeController controller =
        config.controller == ControllerKind::uniform
            ? TimeController::uniform(tau_base)
            : TimeController::nakagawa(tau_base, control_alpha(config));

    const TriDiag stiffness_sym = config.variant == Variant::sym
                                      ? stepper.spatial_operator()
                                      : assemble_stiffness_sym(*mesh, config.dimension);
    const EnergyEvaluator energy{&stiffness_sym, config.dimension, energy_alpha(config)};

    Drive drive = drive_run(stepper, controller, config.T, config.eps,
                            config.snapshot_times, energy);

    RunResult result{config, mesh, std::move(drive.trace), {}};
    // snapshots: initial state, any requested times, final state
    result.snapshots.emplace_back(0.0, u0);
    for (auto& cap : drive.captures)
        if (cap.first > 0.0) result.snapshots.push_back(std::move(cap));
    const double t_final = result.trace.rows.back().t;
    if (result.snapshots.back().first < t_final)
        result.snapshots.emplace_back(t_final, stepper.current());

    if (!config.out_dir.empty()) {
        const std::filesystem::path dir(config.out_dir);
        std::filesystem::create_directories(dir);
        write_text_file(dir / "config.json", experiment_config_to_json(config));
        {
            std::ofstream os(dir / "trace.csv", std::ios::binary);
            write_trace_csv(result.trace, os);
        }
        {
            std::ofstream os(dir / "mesh.txt", std::ios::binary);
            mesh->write_nodes(os);
        }
        emit_plot_data(result, dir);
    }
    return result;
}

namespace {

struct StudyRun {
    std::size_t m = 0;
    std::vector<std::pair<double, NodalField>> captures; // aligned with times
};

StudyRun run_for_study(const ExperimentConfig& config, std::size_t m,
                       const std::vector<double>& times) {
    MeshPtr mesh = make_uniform_mesh(m);
    const double h = mesh->h();
    const double tau = config.lambda * h * h;

    SchemeConfig sc;
    sc.dimension = config.dimension;
    sc.variant = config.variant;
    sc.f = config.f;
    sc.load_quad_pts = config.load_quad_pts;
    sc.init = config.init;

    Stepper stepper(initialize(mesh, sc, make_initial_condition(config.initial)), sc);
    TimeController controller = TimeController::uniform(tau);

    const TriDiag stiffness_sym = config.variant == Variant::sym
                                      ? stepper.spatial_operator()
                                      : assemble_stiffness_sym(*mesh, config.dimension);
    const EnergyEvaluator energy{&stiffness_sym, config.dimension, energy_alpha(config)};

    Drive drive =
        drive_run(stepper, controller, times.back(), config.eps, times, energy);
    if (drive.trace.stop != StopReason::reached_T)
        throw std::runtime_error("convergence_study: run m=" + std::to_string(m) +
                                 " stopped early (" + to_string(drive.trace.stop) + ")");
    if (drive.captures.size() != times.size())
        throw std::runtime_error("convergence_study: missed a comparison time");
    return StudyRun{m, std::move(drive.captures)};
}

} // namespace

std::vector<StudyResult> convergence_study(const ExperimentConfig& raw) {
    ExperimentConfig config = raw;
    apply_env_overrides(config);
    validate_common(config);
    if (!config.is_study())
        throw std::invalid_argument("convergence_study: config has no m_list");
    if (config.controller != ControllerKind::uniform)
        throw std::invalid_argument(
            "convergence_study: studies use the uniform controller (tau = lambda h^2)");
    for (std::size_t k = 0; k + 1 < config.m_list.size(); ++k)
        if (config.m_list[k] >= config.m_list[k + 1])
            throw std::invalid_argument("convergence_study: m_list must be strictly increasing");
    for (std::size_t m : config.m_list) {
        if (m < 2) throw std::invalid_argument("convergence_study: every m must be >= 2");
        if (config.reference_m % m != 0)
            throw std::invalid_argument(
                "convergence_study: every m must divide the reference m (nesting)");
    }
    if (config.reference_m <= config.m_list.back())
        throw std::invalid_argument("convergence_study: reference m must exceed every m");

    std::vector<double> times = config.study_times;
    if (times.empty()) times = {config.T};
    std::sort(times.begin(), times.end());
    if (!(times.front() > 0.0))
        throw std::invalid_argument("convergence_study: comparison times must be > 0");

    std::vector<StudyRun> runs;
    runs.reserve(config.m_list.size());
    for (std::size_t m : config.m_list) runs.push_back(run_for_study(config, m, times));
    const StudyRun reference = run_for_study(config, config.reference_m, times);

    std::vector<StudyResult> results;
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
        StudyResult res;
        res.T = times[ti];
        res.reference_m = config.reference_m;
        res.dimension_at_most_3 = config.dimension <= 3;

        std::vector<std::pair<int, double>> e_l1, e_l2, e_linf;
        for (const StudyRun& run : runs) {
            const auto& [t_coarse, field] = run.captures[ti];
            const auto& [t_ref, ref_field] = reference.captures[ti];
            StudyRow row;
            row.m = run.m;
            row.error = error_vs_reference(field, ref_field, config.dimension, config.sigma);
            row.t_final = t_coarse;
            row.time_mismatch = std::abs(t_coarse - t_ref);
            const double h = 1.0 / static_cast<double>(run.m);
            const double tau = config.lambda * h * h;
            row.tau_mesh_condition =
                tau * std::pow(h, -0.5 * config.dimension) <= std::pow(h, 0.1);
            res.rows.push_back(row);
            e_l1.emplace_back(static_cast<int>(run.m), row.error.l1);
            e_l2.emplace_back(static_cast<int>(run.m), row.error.weighted_l2);
            e_linf.emplace_back(static_cast<int>(run.m), row.error.linf_full);
        }
        res.orders_l1 = observed_orders(e_l1);
        res.orders_l2 = observed_orders(e_l2);
        res.orders_linf = observed_orders(e_linf);
        results.push_back(std::move(res));
    }

    if (!config.out_dir.empty()) {
        const std::filesystem::path dir(config.out_dir);
        std::filesystem::create_directories(dir);
        write_text_file(dir / "config.json", experiment_config_to_json(config));
        for (std::size_t ti = 0; ti < results.size(); ++ti) {
            char suffix[48] = "";
            if (results.size() > 1)
                std::snprintf(suffix, sizeof suffix, "_T%g", results[ti].T);
            {
                std::ofstream os(dir / ("errors" + std::string(suffix) + ".csv"),
                                 std::ios::binary);
                write_study_csv(results[ti], os);
            }
            emit_plot_data(results[ti], dir, suffix);
        }
    }
    return results;
}

void emit_plot_data(const RunResult& run, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
        const auto& [t, field] = run.snapshots[k];
        char name[48], header[48];
        std::snprintf(name, sizeof name, "snapshot_%03zu.dat", k);
        std::snprintf(header, sizeof header, "# t = %.17g\n", t);
        std::string text = header;
        text += "# x u\n";
        const Mesh& mesh = field.mesh();
        for (std::size_t j = 0; j <= mesh.element_count(); ++j)
            text += format_row(mesh.node(j), field.node_value(j));
        write_text_file(dir / name, text);
    }
    std::string energy = "# t_n J_h\n";
    for (const TraceRow& row : run.trace.rows) energy += format_row(row.t, row.energy);
    write_text_file(dir / "energy.dat", energy);
}

void emit_plot_data(const StudyResult& study, const std::filesystem::path& dir,
                    const std::string& suffix) {
    std::filesystem::create_directories(dir);
    auto emit = [&](const std::string& norm, auto getter) {
        std::string text = "# log10_h log10_err\n";
        for (const StudyRow& row : study.rows) {
            const double err = getter(row);
            if (err > 0.0)
                text += format_row(std::log10(row.error.h), std::log10(err));
        }
        write_text_file(dir / ("loglog_" + norm + suffix + ".dat"), text);
    };
    emit("l1", [](const StudyRow& r) { return r.error.l1; });
    emit("l2", [](const StudyRow& r) { return r.error.weighted_l2; });
    emit("linf", [](const StudyRow& r) { return r.error.linf_full; });
}

void write_study_csv(const StudyResult& study, std::ostream& os) {
    os << "m,L1err,L2err,LinfErr\n";
    char buf[160];
    for (const StudyRow& row : study.rows) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", row.m, row.error.l1,
                      row.error.weighted_l2, row.error.linf_full);
        os << buf;
    }
    auto orders_line = [&](const char* name, const std::vector<double>& orders) {
        os << "# orders_" << name << ":";
        for (double o : orders) {
            std::snprintf(buf, sizeof buf, " %.17g", o);
            os << buf;
        }
        os << "\n";
    };
    orders_line("L1", study.orders_l1);
    orders_line("L2", study.orders_l2);
    orders_line("Linf", study.orders_linf);
    std::snprintf(buf, sizeof buf, "# reference_m: %zu\n", study.reference_m);
    os << buf;
    std::snprintf(buf, sizeof buf, "# T: %.17g\n", study.T);
    os << buf;
    double mismatch = 0.0;
    for (const StudyRow& row : study.rows)
        mismatch = std::max(mismatch, row.time_mismatch);
    std::snprintf(buf, sizeof buf, "# final_time_mismatch_max: %.17g\n", mismatch);
    os << buf;
    os << "# mesh_condition tau*h^(-N/2)<=h^0.1:";
    for (const StudyRow& row : study.rows) {
        std::snprintf(buf, sizeof buf, " m=%zu %s", row.m,
                      row.tau_mesh_condition ? "ok" : "violated");
        os << buf;
    }
    os << "\n";
    os << "# theory_N_le_3: " << (study.dimension_at_most_3 ? "ok" : "violated")
       << "\n";
}

} // namespace radheat
