#include "radheat/experiment.hpp"

#include "radheat/expr.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace radheat;

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    REQUIRE(is);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

fs::path temp_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("radheat_test_" + tag);
    fs::remove_all(dir);
    return dir;
}

ExperimentConfig tiny_run_config() {
    ExperimentConfig c;
    c.variant = Variant::sym;
    c.dimension = 3;
    c.f = Nonlinearity::power(4.0 / 3.0);
    c.initial = "cos";
    c.m = 8;
    c.lambda = 0.5;
    c.controller = ControllerKind::nakagawa;
    c.T = 0.05; // tau_base = 1/128, so a handful of steps
    return c;
}

} // namespace

TEST_CASE("expression parser") {
    auto f = parse_expression("2 + 3 * 4 ^ 0.5 - 1");
    CHECK(f(0.0) == doctest::Approx(7.0));
    auto g = parse_expression("cos(pi/2 * x)");
    CHECK(g(1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g(0.0) == doctest::Approx(1.0));
    auto h = parse_expression("-x^2 + 1");
    CHECK(h(0.5) == doctest::Approx(0.75));
    CHECK_THROWS_AS((parse_expression("2 +")), std::invalid_argument);
    CHECK_THROWS_AS((parse_expression("foo(x)")), std::invalid_argument);
    CHECK_THROWS_AS((parse_expression("1 2")), std::invalid_argument);
}

TEST_CASE("initial condition catalogue") {
    const ScalarFunction c = make_initial_condition("cos");
    CHECK(c.value(0.0) == doctest::Approx(1.0));
    CHECK(c.value(1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.derivative(0.5) ==
          doctest::Approx(-0.5 * M_PI * std::sin(0.25 * M_PI)).epsilon(1e-14));

    const ScalarFunction c13 = make_initial_condition("13cos");
    CHECK(c13.value(0.0) == doctest::Approx(13.0));
    const ScalarFunction c3 = make_initial_condition("3cos");
    CHECK(c3.value(0.0) == doctest::Approx(3.0));

    const ScalarFunction expr = make_initial_condition("1 - x^2");
    CHECK(expr.value(0.5) == doctest::Approx(0.75));
    CHECK(expr.dvalue(0.5) == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("presets resolve to the reference parameters") {
    for (const std::string& name : preset_names()) CHECK_NOTHROW(load_preset(name));
    CHECK_THROWS_AS((load_preset("fig99")), std::invalid_argument);

    const ExperimentConfig f1 = load_preset("fig1a");
    CHECK(f1.variant == Variant::sym);
    CHECK(f1.dimension == 5);
    CHECK(f1.f.alpha() == doctest::Approx(4.0 / 3.0));
    CHECK(f1.initial == "cos");
    CHECK(f1.m == 50);
    CHECK(f1.lambda == 0.5);
    CHECK(f1.controller == ControllerKind::nakagawa);
    CHECK(f1.T == 0.2);
    CHECK(f1.eps == 1e-8);

    const ExperimentConfig f4 = load_preset("fig4");
    CHECK(f4.dimension == 4);
    CHECK(f4.f.alpha() == 4.0);
    CHECK(f4.initial == "3cos");
    CHECK(f4.lambda == 0.11);
    CHECK(f4.m_list == std::vector<std::size_t>{30, 60, 120, 240});
    CHECK(f4.reference_m == 480);
    CHECK(f4.study_times == std::vector<double>{0.0011, 0.0022, 0.0033});

    const ExperimentConfig f3b = load_preset("fig3b");
    CHECK(f3b.variant == Variant::nonsym);
    CHECK(f3b.init == InitStrategy::ritz_b);
    CHECK(f3b.T == 0.005);
}

TEST_CASE("config JSON round trip") {
    ExperimentConfig c = load_preset("fig4");
    c.out_dir = "somewhere";
    c.snapshot_times = {0.001, 0.002};
    const std::string text = experiment_config_to_json(c);
    const ExperimentConfig back = experiment_config_from_json(text, ExperimentConfig{});
    CHECK(back.variant == c.variant);
    CHECK(back.dimension == c.dimension);
    CHECK(back.f.kind() == c.f.kind());
    CHECK(back.f.alpha() == c.f.alpha());
    CHECK(back.initial == c.initial);
    CHECK(back.m_list == c.m_list);
    CHECK(back.reference_m == c.reference_m);
    CHECK(back.lambda == c.lambda);
    CHECK(back.controller == c.controller);
    CHECK(back.T == c.T);
    CHECK(back.study_times == c.study_times);
    CHECK(back.init == c.init);
    CHECK(back.snapshot_times == c.snapshot_times);
    CHECK(back.out_dir == c.out_dir);

    CHECK_THROWS_AS((experiment_config_from_json("{\"bogus\": 1}", ExperimentConfig{})), std::invalid_argument);
    CHECK_THROWS_AS((experiment_config_from_json("not json", ExperimentConfig{})), std::invalid_argument);
}

TEST_CASE("zero initial data stays zero") {
    ExperimentConfig c = tiny_run_config();
    c.initial = "0";
    c.T = 20.0 * c.lambda / (c.m * c.m);
    const RunResult result = run_experiment(c);
    CHECK(result.trace.stop == StopReason::reached_T);
    for (const TraceRow& row : result.trace.rows) {
        CHECK(row.l2h == 0.0);
        CHECK(row.linf == 0.0);
        CHECK(row.min_nodal == 0.0);
    }
}

TEST_CASE("trace times accumulate exactly") {
    const RunResult result = run_experiment(tiny_run_config());
    REQUIRE(result.trace.rows.size() > 3);
    double t = 0.0;
    for (const TraceRow& row : result.trace.rows) {
        CHECK(row.t == t); // bitwise: t_{n+1} = t_n + tau_n as summed
        t += row.tau;
    }
}

TEST_CASE("snapshots bracket the run") {
    ExperimentConfig c = tiny_run_config();
    const double tau = c.lambda / (c.m * c.m);
    c.snapshot_times = {3 * tau};
    const RunResult result = run_experiment(c);
    REQUIRE(result.snapshots.size() == 3);
    CHECK(result.snapshots.front().first == 0.0);
    CHECK(result.snapshots[1].first == doctest::Approx(3 * tau).epsilon(1e-12));
    CHECK(result.snapshots.back().first == result.trace.rows.back().t);

    // t = 0 snapshot is the initial interpolant
    const NodalField& u0 = result.snapshots.front().second;
    for (std::size_t j = 0; j < u0.size(); ++j)
        CHECK(u0[j] ==
              doctest::Approx(std::cos(0.5 * M_PI * result.mesh->node(j))).epsilon(1e-14));
}

TEST_CASE("nakagawa runs report tau quasi-uniformity diagnostics") {
    ExperimentConfig c = tiny_run_config();
    c.initial = "13cos"; // norms above 1, so increments shrink
    c.T = 0.004;
    const RunResult result = run_experiment(c);
    CHECK(result.trace.gamma > 1.0);
    CHECK(result.trace.delta > 0.0);
    CHECK(result.trace.tau_min <= result.trace.tau_max);
    double tmax = 0.0, tmin = 1e300;
    for (const TraceRow& row : result.trace.rows) {
        tmax = std::max(tmax, row.tau);
        tmin = std::min(tmin, row.tau);
    }
    CHECK(result.trace.tau_min == tmin);
    CHECK(result.trace.tau_max == tmax);
}

TEST_CASE("run writes its output bundle") {
    const fs::path dir = temp_dir("bundle");
    ExperimentConfig c = tiny_run_config();
    c.out_dir = dir.string();
    run_experiment(c);
    CHECK(fs::exists(dir / "config.json"));
    CHECK(fs::exists(dir / "trace.csv"));
    CHECK(fs::exists(dir / "mesh.txt"));
    CHECK(fs::exists(dir / "energy.dat"));
    CHECK(fs::exists(dir / "snapshot_000.dat"));

    const std::string trace = slurp(dir / "trace.csv");
    CHECK(trace.rfind("n,t_n,tau_n,l2h_norm,linf_norm,energy,min_nodal\n", 0) == 0);
    CHECK(trace.find("# time_control: tau_min=") != std::string::npos);
    CHECK(trace.find("# stop_reason: reached_T\n") != std::string::npos);

    const std::string energy = slurp(dir / "energy.dat");
    CHECK(energy.rfind("# t_n J_h\n", 0) == 0);
    fs::remove_all(dir);
}

TEST_CASE("empty trace yields a header-only energy file") {
    const fs::path dir = temp_dir("empty");
    RunResult result;
    result.mesh = make_uniform_mesh(4);
    result.snapshots.emplace_back(0.0, NodalField::zeros(result.mesh));
    emit_plot_data(result, dir);
    CHECK(slurp(dir / "energy.dat") == "# t_n J_h\n");
    fs::remove_all(dir);
}

TEST_CASE("quadrature override from the environment") {
    setenv("RADHEAT_QUAD_PTS", "7", 1);
    const RunResult result = run_experiment(tiny_run_config());
    CHECK(result.config.load_quad_pts == 7);
    setenv("RADHEAT_QUAD_PTS", "junk", 1);
    CHECK_THROWS_AS((run_experiment(tiny_run_config())), std::runtime_error);
    unsetenv("RADHEAT_QUAD_PTS");
    CHECK(run_experiment(tiny_run_config()).config.load_quad_pts == 5);
}

TEST_CASE("a small study is deterministic byte for byte") {
    ExperimentConfig c;
    c.variant = Variant::sym;
    c.dimension = 3;
    c.f = Nonlinearity::power(4.0 / 3.0);
    c.initial = "cos";
    c.m_list = {4, 8};
    c.reference_m = 16;
    c.lambda = 0.5;
    c.controller = ControllerKind::uniform;
    c.T = 0.01;

    const fs::path d1 = temp_dir("det1");
    const fs::path d2 = temp_dir("det2");
    c.out_dir = d1.string();
    const auto r1 = convergence_study(c);
    c.out_dir = d2.string();
    const auto r2 = convergence_study(c);
    REQUIRE(r1.size() == 1);
    CHECK(slurp(d1 / "errors.csv") == slurp(d2 / "errors.csv"));
    CHECK(slurp(d1 / "loglog_l2.dat") == slurp(d2 / "loglog_l2.dat"));
    CHECK(fs::exists(d1 / "config.json"));

    // errors shrink with m
    CHECK(r1[0].rows[0].error.weighted_l2 > r1[0].rows[1].error.weighted_l2);
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST_CASE("study reports the tau-mesh condition flag") {
    ExperimentConfig c;
    c.variant = Variant::sym;
    c.dimension = 3;
    c.f = Nonlinearity::power(2.0);
    c.initial = "cos";
    c.m_list = {4, 8};
    c.reference_m = 16;
    c.controller = ControllerKind::uniform;
    c.T = 0.02;

    c.lambda = 0.5; // tau h^{-3/2} = 0.5 sqrt(h) <= h^0.1 holds
    for (const StudyRow& row : convergence_study(c).at(0).rows)
        CHECK(row.tau_mesh_condition);

    c.lambda = 8.0; // tau h^{-3/2} = 8 sqrt(h) > h^0.1 at these h
    c.T = 0.5; // keep a few steps despite the large tau
    const auto loose = convergence_study(c).at(0);
    CHECK(loose.dimension_at_most_3);
    for (const StudyRow& row : loose.rows) CHECK_FALSE(row.tau_mesh_condition);

    const fs::path dir = temp_dir("meshcond");
    c.out_dir = dir.string();
    convergence_study(c);
    const std::string csv = slurp(dir / "errors.csv");
    CHECK(csv.find("# mesh_condition tau*h^(-N/2)<=h^0.1: m=4 violated m=8 violated") !=
          std::string::npos);
    CHECK(csv.find("# theory_N_le_3: ok") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("study validation") {
    ExperimentConfig c = tiny_run_config();
    CHECK_THROWS_AS((convergence_study(c)), std::invalid_argument); // no m_list

    c.m_list = {5, 10};
    c.reference_m = 16; // 5 does not divide 16
    c.controller = ControllerKind::uniform;
    CHECK_THROWS_AS((convergence_study(c)), std::invalid_argument);

    c.m_list = {4, 8};
    c.controller = ControllerKind::nakagawa;
    CHECK_THROWS_AS((convergence_study(c)), std::invalid_argument);

    ExperimentConfig run_as_study = c;
    run_as_study.controller = ControllerKind::uniform;
    CHECK_THROWS_AS((run_experiment(run_as_study)), std::invalid_argument); // m_list set
}
