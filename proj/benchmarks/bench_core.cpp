#include "radheat/assembly.hpp"
#include "radheat/diagnostics.hpp"
#include "radheat/scheme.hpp"
#include "radheat/tridiag.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

using namespace radheat;

NodalField cos_field(const MeshPtr& mesh) {
    std::vector<double> v(mesh->free_node_count());
    for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = std::cos(1.5707963267948966 * mesh->node(j));
    return NodalField(mesh, std::move(v));
}

void BM_AssembleMassSym(benchmark::State& state) {
    const MeshPtr mesh = make_uniform_mesh(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_mass_sym(*mesh, 3));
}
BENCHMARK(BM_AssembleMassSym)->Range(64, 4096);

void BM_ThomasSolve(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    TriDiag A(n);
    for (std::size_t i = 0; i < n; ++i) {
        A.diag(i) = 2.0;
        if (i > 0) A.lower(i) = -1.0;
        if (i + 1 < n) A.upper(i) = -1.0;
    }
    std::vector<double> b(n, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(thomas_solve(A, b));
}
BENCHMARK(BM_ThomasSolve)->Range(64, 4096);

void BM_SymStep(benchmark::State& state) {
    const MeshPtr mesh = make_uniform_mesh(static_cast<std::size_t>(state.range(0)));
    SchemeConfig sc;
    sc.dimension = 3;
    sc.f = Nonlinearity::power(4.0 / 3.0);
    Stepper stepper(cos_field(mesh), sc);
    const double tau = 0.5 * mesh->h() * mesh->h();
    for (auto _ : state)
        benchmark::DoNotOptimize(stepper.step(tau));
}
BENCHMARK(BM_SymStep)->Range(64, 4096);

void BM_DiscreteEnergy(benchmark::State& state) {
    const MeshPtr mesh = make_uniform_mesh(static_cast<std::size_t>(state.range(0)));
    const NodalField u = cos_field(mesh);
    const TriDiag K = assemble_stiffness_sym(*mesh, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(discrete_energy(u, 4.0 / 3.0, 3, K));
}
BENCHMARK(BM_DiscreteEnergy)->Range(64, 4096);

} // namespace

BENCHMARK_MAIN();
