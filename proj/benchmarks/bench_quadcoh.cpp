#include <benchmark/benchmark.h>

#include <cmath>

#include "quadcoh/measures/coherence.hpp"
#include "quadcoh/measures/incoherent.hpp"
#include "quadcoh/numerics/hermite.hpp"
#include "quadcoh/numerics/integrate.hpp"
#include "quadcoh/states/evaluate.hpp"
#include "quadcoh/states/fock.hpp"
#include "quadcoh/states/state_model.hpp"

namespace {

using namespace quadcoh;

void BM_HermitePsiAll(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    std::vector<double> out(order + 1);
    double x = 0.1;
    for (auto _ : state) {
        hermite_psi_all(order, x, out);
        benchmark::DoNotOptimize(out.data());
        x += 1e-6;
    }
    state.SetItemsProcessed(state.iterations() * (order + 1));
}
BENCHMARK(BM_HermitePsiAll)->Arg(16)->Arg(64)->Arg(256);

void BM_Integrate1D(benchmark::State& state) {
    const QuadratureGrid g = absolute_value_grid(9.0, static_cast<int>(state.range(0)));
    const auto f = [](double x) { return std::abs(hermite_psi(1, x)); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_1d(f, g).value);
    }
}
BENCHMARK(BM_Integrate1D)->Arg(4096)->Arg(16384);

void BM_VacuumKernel2D(benchmark::State& state) {
    const StateModel vacuum = StateModel::vacuum();
    const QuadratureGrid g =
        absolute_value_grid(support_radius(vacuum), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(abs_kernel_integral(vacuum, g, g).value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VacuumKernel2D)->Arg(1024)->Arg(2048)->Arg(4096)->Complexity(benchmark::oNSquared);

void BM_ThermalKernel2D(benchmark::State& state) {
    const StateModel thermal = StateModel::thermal(1.0);
    const QuadratureGrid g =
        absolute_value_grid(support_radius(thermal), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(abs_kernel_integral(thermal, g, g).value);
    }
}
BENCHMARK(BM_ThermalKernel2D)->Arg(2048)->Arg(4096);

void BM_FockMatrixKernel2D(benchmark::State& state) {
    const StateModel truncated(fock_truncate(StateModel::thermal(1.0), 60));
    const QuadratureGrid g =
        absolute_value_grid(support_radius(truncated), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(abs_kernel_integral(truncated, g, g).value);
    }
}
BENCHMARK(BM_FockMatrixKernel2D)->Arg(1024)->Arg(2048);

void BM_XiCoherenceBanded(benchmark::State& state) {
    const int cells = 261;
    std::vector<double> xs(cells), dens(cells);
    for (int i = 0; i < cells; ++i) {
        xs[i] = -6.5 + 13.0 * i / (cells - 1);
        dens[i] = std::exp(-0.5 * xs[i] * xs[i]) / std::sqrt(2.0 * M_PI);
    }
    const IncoherentApprox approx = xi_incoherent_state(xs, dens, 0.01);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            xi_coherence_numeric(approx, static_cast<int>(state.range(0))).value);
    }
}
BENCHMARK(BM_XiCoherenceBanded)->Arg(2048)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
