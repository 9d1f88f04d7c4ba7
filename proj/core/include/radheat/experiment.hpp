#pragma once

#include "radheat/diagnostics.hpp"
#include "radheat/field.hpp"
#include "radheat/scheme.hpp"
#include "radheat/time_control.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace radheat {

enum class ControllerKind { uniform, nakagawa };

/// Full description of a single simulation or a convergence study.
/// Presets resolve to the parameter sets of the reference experiments.
struct ExperimentConfig {
    std::string preset;              // name this config was derived from, if any
    Variant variant = Variant::sym;
    int dimension = 2;
    Nonlinearity f = Nonlinearity::power(1.0);
    std::string initial = "cos";     // cos | 13cos | 3cos | expression in x
    std::size_t m = 50;              // single-run mesh
    std::vector<std::size_t> m_list; // study meshes (empty for single runs)
    std::size_t reference_m = 480;   // study reference mesh
    double lambda = 0.5;             // tau_base = lambda * h^2
    ControllerKind controller = ControllerKind::nakagawa;
    double T = 0.2;
    std::vector<double> study_times; // study comparison times (defaults to {T})
    double eps = 1e-8;               // blow-up threshold on 1/||u||_2
    double sigma = 0.1;              // interior L-infinity left endpoint
    InitStrategy init = InitStrategy::interpolate;
    int load_quad_pts = 5;
    std::vector<double> snapshot_times;
    std::string out_dir;             // empty: no files written

    bool is_study() const { return !m_list.empty(); }
};

/// Initial-condition catalogue: "cos", "13cos", "3cos" (scaled
/// cos(pi x / 2) with exact derivatives) or an arithmetic expression in x.
ScalarFunction make_initial_condition(const std::string& id);

std::vector<std::string> preset_names();
ExperimentConfig load_preset(const std::string& name);

/// Deterministic JSON round trip for configs; from_json overlays the
/// recognised keys onto base and rejects unknown keys.
std::string experiment_config_to_json(const ExperimentConfig& config);
ExperimentConfig experiment_config_from_json(const std::string& text,
                                             ExperimentConfig base);

struct RunResult {
    ExperimentConfig config;
    MeshPtr mesh;
    RunTrace trace;
    std::vector<std::pair<double, NodalField>> snapshots; // always t=0 and final
};

/// Executes a single simulation: initialize, step until t = T or the
/// blow-up threshold triggers, trace every step. Writes trace.csv,
/// config.json, mesh.txt and plot data when out_dir is set.
RunResult run_experiment(const ExperimentConfig& config);

struct StudyRow {
    std::size_t m = 0;
    ErrorReport error;
    double t_final = 0.0;        // actual comparison time of this run
    double time_mismatch = 0.0;  // |t_final - reference t_final|
    bool tau_mesh_condition = false; // tau * h^{-N/2} <= h^{0.1}
};

struct StudyResult {
    double T = 0.0;
    std::size_t reference_m = 0;
    std::vector<StudyRow> rows;
    std::vector<double> orders_l1, orders_l2, orders_linf;
    bool dimension_at_most_3 = false;
};

/// Runs every m in m_list plus the reference mesh with uniform
/// tau = lambda h^2 (each mesh using its own h) and measures errors
/// against the reference at each study time. Writes errors CSV and
/// log-log plot data when out_dir is set.
std::vector<StudyResult> convergence_study(const ExperimentConfig& config);

/// gnuplot-ready whitespace-delimited files.
void emit_plot_data(const RunResult& run, const std::filesystem::path& dir);
void emit_plot_data(const StudyResult& study, const std::filesystem::path& dir,
                    const std::string& suffix = "");

void write_study_csv(const StudyResult& study, std::ostream& os);

} // namespace radheat
