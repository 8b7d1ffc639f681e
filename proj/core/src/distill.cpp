#include "vacdist/distill.hpp"

#include <cmath>
#include <numbers>

#include "vacdist/errors.hpp"
#include "vacdist/evolve.hpp"

namespace vacdist {

void TwirlConfig::validate() const {
    if (steps < 1) {
        throw ConfigError("TwirlConfig: steps must be >= 1");
    }
}

double estimate_ground_energy(const StateVector &state,
                              const RegisterLayout &layout,
                              const PauliHamiltonian &ht) {
    const auto proj = project_ancillas_zero(state, layout, kActiveProbabilityFloor);
    return expectation(proj.projected, ht);
}

double theta_for(double e0j) {
    if (e0j == 0.0 || !std::isfinite(e0j)) {
        throw DegenerateProtocolError(
            "theta_for: ground-energy estimate is zero or non-finite");
    }
    return std::numbers::pi / (2.0 * e0j);
}

double conditional_expectation(const StateVector &state,
                               const RegisterLayout &layout,
                               const PauliHamiltonian &obs) {
    const auto proj = project_ancillas_zero(state, layout, kActiveProbabilityFloor);
    return expectation(proj.projected, obs);
}

void twirl_round(StateVector &state, const RegisterLayout &layout,
                 const PauliHamiltonian &ht, double theta, std::size_t ancilla,
                 const TwirlConfig &cfg) {
    cfg.validate();
    if (layout.n_qubits() != state.n_qubits()) {
        throw ConfigError("twirl_round: layout does not match state");
    }
    if (ht.n_qubits() != layout.n_physical) {
        throw ConfigError("twirl_round: H_T acts on " +
                          std::to_string(ht.n_qubits()) +
                          " qubits, physical register has " +
                          std::to_string(layout.n_physical));
    }
    const std::size_t control = layout.ancilla_qubit(ancilla);

    const std::uint64_t bit = std::uint64_t{1} << control;
    double used = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (i & bit) {
            used += std::norm(state[i]);
        }
    }
    if (used > 1e-12) {
        throw ConfigError("twirl_round: ancilla " + std::to_string(ancilla) +
                          " already in use");
    }

    const auto h = gates::hadamard();
    state.apply_one_qubit(control, h);
    if (cfg.u_mode == UMode::exact) {
        const auto u = Complex{0.0, 1.0} * expm_exact(ht, theta);
        std::vector<std::size_t> targets(layout.n_physical);
        for (std::size_t q = 0; q < targets.size(); ++q) {
            targets[q] = q;
        }
        state.apply_controlled_block(control, targets, u);
    } else {
        const StepOperator step(ht, theta / static_cast<double>(cfg.steps),
                                Propagation::trotter2);
        for (std::size_t k = 0; k < cfg.steps; ++k) {
            step.apply_controlled(state, control);
        }
        // The factor i of U is a relative phase between control branches.
        state.apply_one_qubit(control, gates::phase(std::numbers::pi / 2.0));
    }
    state.apply_one_qubit(control, h);
}

std::vector<TwirlRecord> run_distillation(const StateVector &psi0,
                                          const ModelSpec &spec,
                                          const TwirlConfig &cfg,
                                          const PauliHamiltonian &obs,
                                          const RoundObserver &observer) {
    cfg.validate();
    const RegisterLayout layout{n_physical(spec), cfg.rounds};
    if (psi0.n_qubits() != layout.n_physical) {
        throw ConfigError("run_distillation: psi0 has " +
                          std::to_string(psi0.n_qubits()) +
                          " qubits, model has " +
                          std::to_string(layout.n_physical));
    }
    const auto ht = target_hamiltonian(spec);
    StateVector state = psi0.with_ancillas(cfg.rounds);

    const auto measure = [&](std::size_t round) {
        const auto proj =
            project_ancillas_zero(state, layout, kActiveProbabilityFloor);
        const double e0j = expectation(proj.projected, ht);
        return TwirlRecord{round, e0j, theta_for(e0j), proj.active_prob,
                           expectation(proj.projected, obs)};
    };

    std::vector<TwirlRecord> records;
    records.reserve(cfg.rounds + 1);
    records.push_back(measure(0));
    if (observer) {
        observer(records.back(), state);
    }
    for (std::size_t j = 1; j <= cfg.rounds; ++j) {
        twirl_round(state, layout, ht, records.back().theta_j, j - 1, cfg);
        records.push_back(measure(j));
        if (observer) {
            observer(records.back(), state);
        }
    }
    return records;
}

} // namespace vacdist
