#include "vacdist/evolve.hpp"

#include <cmath>
#include <numeric>

#include "vacdist/errors.hpp"

namespace vacdist {

Schedule Schedule::make(double t_total, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ConfigError("Schedule: dt must be positive");
    }
    if (!(t_total > 0.0) || !std::isfinite(t_total)) {
        throw ConfigError("Schedule: total time must be positive");
    }
    const double steps = std::round(t_total / dt);
    if (steps < 1.0 || steps > 1e9) {
        throw ConfigError("Schedule: step count out of range");
    }
    return {t_total, dt, static_cast<std::size_t>(steps)};
}

double Schedule::s_midpoint(std::size_t k) const {
    return (static_cast<double>(k) + 0.5) / static_cast<double>(n_steps);
}

TrotterSplit TrotterSplit::diagonal_split(const PauliHamiltonian &h) {
    std::vector<PauliString> diag;
    std::vector<PauliString> rest;
    for (const auto &t : h.terms()) {
        (t.is_diagonal() ? diag : rest).push_back(t);
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t k = i + 1; k < rest.size(); ++k) {
            if (!commutes(rest[i].word, rest[k].word)) {
                throw ConfigError("TrotterSplit: off-diagonal terms " +
                                  rest[i].word + " and " + rest[k].word +
                                  " do not commute");
            }
        }
    }
    return {PauliHamiltonian(h.n_qubits(), std::move(diag)),
            PauliHamiltonian(h.n_qubits(), std::move(rest))};
}

PauliHamiltonian interpolate(const PauliHamiltonian &h0,
                             const PauliHamiltonian &ht, double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw ConfigError("interpolate: s = " + std::to_string(s) +
                          " outside [0, 1]");
    }
    return (1.0 - s) * h0 + s * ht;
}

namespace {

std::vector<std::size_t> low_qubits(std::size_t n) {
    std::vector<std::size_t> q(n);
    std::iota(q.begin(), q.end(), std::size_t{0});
    return q;
}

} // namespace

void trotter2_step(StateVector &state, const TrotterSplit &split, double dt) {
    StepOperator(split, dt).apply(state);
}

StepOperator::StepOperator(const PauliHamiltonian &h, double dt,
                           Propagation mode)
    : targets_(low_qubits(h.n_qubits())) {
    if (mode == Propagation::exact) {
        factors_.push_back(expm_exact(h, dt));
        return;
    }
    *this = StepOperator(TrotterSplit::diagonal_split(h), dt);
}

StepOperator::StepOperator(const TrotterSplit &split, double dt)
    : targets_(low_qubits(split.part_a.n_qubits())) {
    if (split.part_b.n_qubits() != split.part_a.n_qubits()) {
        throw ConfigError("TrotterSplit: parts act on different registers");
    }
    const auto half_a = expm_exact(split.part_a, dt / 2.0);
    factors_.push_back(half_a);
    factors_.push_back(expm_exact(split.part_b, dt));
    factors_.push_back(half_a);
}

void StepOperator::apply(StateVector &state) const {
    for (const auto &f : factors_) {
        state.apply_block(targets_, f);
    }
}

void StepOperator::apply_controlled(StateVector &state,
                                    std::size_t control) const {
    for (const auto &f : factors_) {
        state.apply_controlled_block(control, targets_, f);
    }
}

StateVector run_adiabatic(const ModelSpec &spec, const Schedule &sched,
                          const StateVector &initial, Propagation mode,
                          const StepObserver &observer) {
    const auto h0 = initial_hamiltonian(spec);
    const auto ht = target_hamiltonian(spec);
    if (initial.n_qubits() != h0.n_qubits()) {
        throw ConfigError("run_adiabatic: initial state has " +
                          std::to_string(initial.n_qubits()) +
                          " qubits, model needs " +
                          std::to_string(h0.n_qubits()));
    }
    const double dt = sched.dt();
    StateVector psi = initial;
    if (observer) {
        observer(0.0, psi);
    }
    for (std::size_t k = 0; k < sched.n_steps; ++k) {
        const auto h = interpolate(h0, ht, sched.s_midpoint(k));
        StepOperator(h, dt, mode).apply(psi);
        if (observer) {
            observer(static_cast<double>(k + 1) * dt, psi);
        }
    }
    return psi;
}

std::vector<TrajectoryPoint> evolve_constant(const StateVector &state,
                                             const PauliHamiltonian &h,
                                             double duration, double dt,
                                             Propagation mode, double t_start) {
    if (duration < 0.0) {
        throw ConfigError("evolve_constant: negative duration");
    }
    std::vector<TrajectoryPoint> out;
    out.push_back({t_start, state});
    if (duration == 0.0) {
        return out;
    }
    if (!(dt > 0.0)) {
        throw ConfigError("evolve_constant: dt must be positive");
    }
    const auto n = static_cast<std::size_t>(std::round(duration / dt));
    const StepOperator step(h, dt, mode);
    out.reserve(n + 1);
    StateVector psi = state;
    for (std::size_t k = 1; k <= n; ++k) {
        step.apply(psi);
        out.push_back({t_start + static_cast<double>(k) * dt, psi});
    }
    return out;
}

} // namespace vacdist
