#include "radheat/time_control.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <random>

using namespace radheat;

TEST_CASE("discrete l2h norm") {
    const MeshPtr mesh = make_uniform_mesh(2);

    CHECK(discrete_l2h_norm(NodalField::zeros(mesh), 3) == 0.0);

    // j=1 term only: h * x_2^{N-1} * u_1^2 = 0.5
    const NodalField u(mesh, {0.0, 1.0});
    CHECK(discrete_l2h_norm(u, 2) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));

    const NodalField cu(mesh, {0.0, -3.0});
    CHECK(discrete_l2h_norm(cu, 2) ==
          doctest::Approx(3.0 * discrete_l2h_norm(u, 2)).epsilon(1e-14));

    CHECK_THROWS_AS((discrete_l2h_norm(u, 1)), std::invalid_argument);
}

TEST_CASE("nonuniform meshes need the explicit opt-in") {
    const MeshPtr graded = make_graded_mesh(4, 2.0);
    const NodalField u(graded, {1.0, 1.0, 1.0, 1.0});
    CHECK_THROWS_AS((discrete_l2h_norm(u, 2)), std::invalid_argument);

    // per-element-width extension: sum_j h_{j+1} x_{j+1}^{N-1} u_j^2
    double expect = 0.0;
    for (std::size_t j = 0; j < 4; ++j)
        expect += graded->width(j) * graded->node(j + 1);
    CHECK(discrete_l2h_norm(u, 2, true) ==
          doctest::Approx(std::sqrt(expect)).epsilon(1e-14));
}

TEST_CASE("controller increments") {
    TimeController uni = TimeController::uniform(0.01);
    const MeshPtr mesh = make_uniform_mesh(4);
    for (int i = 0; i < 5; ++i) CHECK(uni.next(123.0) == 0.01);
    CHECK(uni.gamma() == 1.0);
    CHECK(uni.delta() == 0.0);

    TimeController nak = TimeController::nakagawa(0.01, 1.0);
    CHECK(nak.next(0.5) == 0.01);            // min attains 1
    CHECK(nak.next(2.0) == doctest::Approx(0.005).epsilon(1e-15));
    CHECK(nak.next(0.0) == 0.01);            // zero-norm guard

    CHECK_THROWS_AS((TimeController::uniform(0.0)), std::invalid_argument);
    CHECK_THROWS_AS((TimeController::nakagawa(0.01, 0.0)), std::invalid_argument);
}

TEST_CASE("nakagawa increments never exceed the base and shrink with the norm") {
    std::mt19937 rng(83);
    std::uniform_real_distribution<double> step(0.0, 0.5);
    TimeController nak = TimeController::nakagawa(2e-4, 4.0 / 3.0);
    double norm = 0.3, prev_tau = 1.0;
    for (int n = 0; n < 200; ++n) {
        norm += step(rng); // nondecreasing norms
        const double tau = nak.next(norm);
        CHECK(tau > 0.0);
        CHECK(tau <= 2e-4);
        CHECK(tau <= prev_tau + 1e-18);
        prev_tau = tau;
    }
    CHECK(nak.tau_min() == prev_tau);
    CHECK(nak.tau_max() == 2e-4);
    CHECK(nak.gamma() == doctest::Approx(2e-4 / prev_tau));

    double delta = 0.0;
    for (std::size_t k = 0; k + 1 < nak.history().size(); ++k)
        delta = std::max(delta, std::abs(nak.history()[k] - nak.history()[k + 1]));
    CHECK(nak.delta() == delta);
}

TEST_CASE("field overload matches the norm route") {
    const MeshPtr mesh = make_uniform_mesh(8);
    std::vector<double> v(mesh->free_node_count(), 2.0);
    const NodalField u(mesh, v);
    TimeController a = TimeController::nakagawa(0.01, 2.0);
    TimeController b = TimeController::nakagawa(0.01, 2.0);
    CHECK(a.next(u, 3) == b.next(discrete_l2h_norm(u, 3)));
}
