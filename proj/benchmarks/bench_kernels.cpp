#include <benchmark/benchmark.h>

#include "vacdist/distill.hpp"
#include "vacdist/evolve.hpp"
#include "vacdist/statevec.hpp"

namespace {

using namespace vacdist;

StateVector spread_state(std::size_t n) {
    StateVector s(n);
    for (std::size_t q = 0; q < n; ++q) {
        s.apply_one_qubit(q, gates::hadamard());
    }
    return s;
}

void BM_ApplyOneQubit(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto s = spread_state(n);
    const auto h = gates::hadamard();
    for (auto _ : state) {
        s.apply_one_qubit(n / 2, h);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dim()));
}
BENCHMARK(BM_ApplyOneQubit)->DenseRange(4, 20, 4);

void BM_ControlledStep(benchmark::State &state) {
    const auto n_anc = static_cast<std::size_t>(state.range(0));
    auto s = spread_state(2 + n_anc);
    const StepOperator step(target_hamiltonian({ModelKind::schwinger_two_site, 1.0}), 0.01,
                            Propagation::trotter2);
    for (auto _ : state) {
        step.apply_controlled(s, 2);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(BM_ControlledStep)->Arg(1)->Arg(6);

void BM_Expectation(benchmark::State &state) {
    const auto s = spread_state(static_cast<std::size_t>(state.range(0)));
    const PauliHamiltonian obs(2, {{0.5, "XX"}, {0.5, "YY"}, {1.0, "ZI"}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(expectation(s, obs));
    }
}
BENCHMARK(BM_Expectation)->Arg(2)->Arg(8)->Arg(16);

void BM_SampleShots(benchmark::State &state) {
    const auto s = spread_state(8);
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_shots(s, shots, seed++).n_shots());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shots));
}
BENCHMARK(BM_SampleShots)->Arg(100'000)->Arg(1'000'000);

void BM_RunAdiabatic(benchmark::State &state) {
    const ModelSpec spec{state.range(0) == 1 ? ModelKind::one_qubit : ModelKind::schwinger_two_site, 1.0};
    for (auto _ : state) {
        auto psi = run_adiabatic(spec, Schedule{}, initial_state(spec));
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
}
BENCHMARK(BM_RunAdiabatic)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Distillation(benchmark::State &state) {
    const ModelSpec spec{ModelKind::schwinger_two_site, 1.0};
    const auto psi0 = run_adiabatic(spec, Schedule{}, initial_state(spec));
    const TwirlConfig cfg{6, UMode::trotterized, 100};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_distillation(psi0, spec, cfg, observable(spec)).size());
    }
}
BENCHMARK(BM_Distillation)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
