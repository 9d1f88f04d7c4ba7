#include "radheat/mesh.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <random>
#include <sstream>

using namespace radheat;

TEST_CASE("uniform mesh basics") {
    const Mesh m2 = build_uniform_mesh(2);
    CHECK(m2.nodes() == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(m2.h() == 0.5);

    const Mesh m50 = build_uniform_mesh(50);
    CHECK(m50.h() == doctest::Approx(0.02).epsilon(1e-15));
    CHECK(quasi_uniformity_ratio(m50) == 1.0);

    const Mesh m480 = build_uniform_mesh(480);
    CHECK(m480.h() == doctest::Approx(1.0 / 480).epsilon(1e-15));

    CHECK_THROWS_AS((build_uniform_mesh(1)), std::invalid_argument);
    CHECK_THROWS_AS((build_uniform_mesh(0)), std::invalid_argument);
}

TEST_CASE("graded mesh") {
    const Mesh g1 = build_graded_mesh(2, 1.0);
    CHECK(g1.nodes() == std::vector<double>{0.0, 0.5, 1.0});

    const Mesh g2 = build_graded_mesh(2, 2.0);
    CHECK(g2.nodes() == std::vector<double>{0.0, 0.25, 1.0});

    const Mesh g4 = build_graded_mesh(4, 2.0);
    CHECK(quasi_uniformity_ratio(g4) == doctest::Approx(7.0).epsilon(1e-14));

    CHECK_THROWS_AS((build_graded_mesh(4, 0.5)), std::invalid_argument);
    CHECK_THROWS_AS((build_graded_mesh(1, 2.0)), std::invalid_argument);
}

TEST_CASE("quasi-uniformity ratio of explicit nodes") {
    const Mesh m = Mesh::from_nodes({0.0, 0.1, 1.0});
    CHECK(quasi_uniformity_ratio(m) == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(quasi_uniformity_ratio(build_uniform_mesh(10)) == 1.0);
}

TEST_CASE("from_nodes validates the partition") {
    CHECK_THROWS_AS((Mesh::from_nodes({0.1, 0.5, 1.0})), std::invalid_argument);
    CHECK_THROWS_AS((Mesh::from_nodes({0.0, 0.5, 0.9})), std::invalid_argument);
    CHECK_THROWS_AS((Mesh::from_nodes({0.0, 0.5, 0.5, 1.0})), std::invalid_argument);
    CHECK_THROWS_AS((Mesh::from_nodes({0.0, 0.6, 0.5, 1.0})), std::invalid_argument);
    CHECK_THROWS_AS((Mesh::from_nodes({1.0})), std::invalid_argument);
}

TEST_CASE("widths partition the interval") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> md(2, 200);
    std::uniform_real_distribution<double> gd(1.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Mesh mesh = trial % 2 == 0 ? build_uniform_mesh(md(rng))
                                         : build_graded_mesh(md(rng), gd(rng));
        double sum = 0.0;
        for (double w : mesh.widths()) sum += w;
        CHECK(std::abs(sum - 1.0) <= 1e-14);
        CHECK(quasi_uniformity_ratio(mesh) >= 1.0);
    }
}

TEST_CASE("element lookup") {
    const Mesh m = build_uniform_mesh(4);
    CHECK(m.element_of(0.0) == 0);
    CHECK(m.element_of(0.1) == 0);
    CHECK(m.element_of(0.25) == 1);
    CHECK(m.element_of(0.999) == 3);
    CHECK(m.element_of(1.0) == 3);
}

TEST_CASE("node serialization is one coordinate per line") {
    const Mesh m = build_uniform_mesh(2);
    std::ostringstream os;
    m.write_nodes(os);
    CHECK(os.str() == "0\n0.5\n1\n");
}
