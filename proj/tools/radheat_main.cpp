#include "radheat/experiment.hpp"
#include "radheat/props.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct CommonFlags {
    std::string config_path;
    std::string preset;
    std::size_t m = 0;
    double lambda = -1.0;
    std::string scheme;
    std::string out;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file");
    cmd->add_option("--preset", flags.preset,
                    "named experiment (fig1a fig1b fig2a fig2b fig3a fig3b fig4 fig6a fig6b)");
    cmd->add_option("--m", flags.m, "mesh elements (single runs)");
    cmd->add_option("--lambda", flags.lambda, "time step factor, tau_base = lambda*h^2");
    cmd->add_option("--scheme", flags.scheme, "sym | nonsym");
    cmd->add_option("--out", flags.out, "output directory");
}

radheat::ExperimentConfig resolve_config(const CommonFlags& flags) {
    radheat::ExperimentConfig config;
    if (!flags.preset.empty()) config = radheat::load_preset(flags.preset);
    if (!flags.config_path.empty()) {
        std::ifstream is(flags.config_path);
        if (!is) throw std::runtime_error("cannot read config file " + flags.config_path);
        std::ostringstream text;
        text << is.rdbuf();
        config = radheat::experiment_config_from_json(text.str(), std::move(config));
    }
    if (flags.m != 0) config.m = flags.m;
    if (flags.lambda > 0.0) config.lambda = flags.lambda;
    if (!flags.scheme.empty()) {
        if (flags.scheme == "sym")
            config.variant = radheat::Variant::sym;
        else if (flags.scheme == "nonsym")
            config.variant = radheat::Variant::nonsym;
        else
            throw std::runtime_error("--scheme must be 'sym' or 'nonsym'");
    }
    if (!flags.out.empty()) config.out_dir = flags.out;
    return config;
}

int do_run(const CommonFlags& flags) {
    const radheat::RunResult result = radheat::run_experiment(resolve_config(flags));
    const radheat::TraceRow& last = result.trace.rows.back();
    std::printf("steps: %ld  final t: %.10g  stop: %s\n", last.n, last.t,
                radheat::to_string(result.trace.stop).c_str());
    std::printf("final ||u||_2: %.10g  ||u||_inf: %.10g  min nodal: %.10g\n", last.l2h,
                last.linf, last.min_nodal);
    if (!result.config.out_dir.empty())
        std::printf("wrote %s\n", result.config.out_dir.c_str());
    return 0;
}

int do_study(const CommonFlags& flags) {
    const auto results = radheat::convergence_study(resolve_config(flags));
    for (const radheat::StudyResult& study : results) {
        std::printf("T = %g (reference m = %zu)\n", study.T, study.reference_m);
        std::printf("  %6s  %12s  %12s  %12s\n", "m", "L1err", "L2err", "LinfErr");
        for (const radheat::StudyRow& row : study.rows)
            std::printf("  %6zu  %12.5e  %12.5e  %12.5e\n", row.m, row.error.l1,
                        row.error.weighted_l2, row.error.linf_full);
        auto print_orders = [](const char* name, const std::vector<double>& orders) {
            std::printf("  orders %-5s:", name);
            for (double o : orders) std::printf(" %.3f", o);
            std::printf("\n");
        };
        print_orders("L1", study.orders_l1);
        print_orders("L2", study.orders_l2);
        print_orders("Linf", study.orders_linf);
    }
    return 0;
}

int do_props() {
    const auto results = radheat::run_property_suite();
    bool all = true;
    for (const radheat::PropResult& r : results) {
        std::printf("%s: %s (%s)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite element solver for radially symmetric semilinear heat equations"};
    app.require_subcommand(1);

    CommonFlags run_flags, study_flags;
    CLI::App* run_cmd = app.add_subcommand("run", "single simulation");
    add_common_flags(run_cmd, run_flags);
    CLI::App* study_cmd = app.add_subcommand("study", "convergence study against a reference mesh");
    add_common_flags(study_cmd, study_flags);
    CLI::App* props_cmd = app.add_subcommand("props", "run the property suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return do_run(run_flags);
        if (study_cmd->parsed()) return do_study(study_flags);
        if (props_cmd->parsed()) return do_props();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
