#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "vacdist/models.hpp"
#include "vacdist/pauli.hpp"
#include "vacdist/statevec.hpp"

namespace vacdist {

/// Active probability below which the protocol aborts.
inline constexpr double kActiveProbabilityFloor = 1e-12;

enum class UMode {
    /// Controlled i exp(-i theta H_T) from the exact matrix exponential.
    exact,
    /// `steps` controlled second-order Trotter sub-steps of length
    /// theta / steps, followed by a phase gate on the control.
    trotterized,
};

struct TwirlConfig {
    std::size_t rounds{1};
    UMode u_mode{UMode::trotterized};
    std::size_t steps{100};

    void validate() const;
};

/// Telemetry of round j. Round 0 describes the input state before any
/// twirl. theta_j is the time parameter derived from e0j and drives the
/// next twirl.
struct TwirlRecord {
    std::size_t round;
    double e0j;
    double theta_j;
    double active_prob;
    double cond_expect;
};

/// <H_T> on the renormalized all-ancillas-zero component.
double estimate_ground_energy(const StateVector &state,
                              const RegisterLayout &layout,
                              const PauliHamiltonian &ht);

/// pi / (2 e0j). Throws DegenerateProtocolError when e0j is zero.
double theta_for(double e0j);

/**
 * @brief One twirl: H(ancilla), controlled i exp(-i theta H_T) on the
 * physical qubits, H(ancilla).
 *
 * `ancilla` indexes the ancilla register (0 = first ancilla). The
 * ancilla must still be |0> on every branch.
 */
void twirl_round(StateVector &state, const RegisterLayout &layout,
                 const PauliHamiltonian &ht, double theta, std::size_t ancilla,
                 const TwirlConfig &cfg);

/// Observable expectation on the renormalized active component.
double conditional_expectation(const StateVector &state,
                               const RegisterLayout &layout,
                               const PauliHamiltonian &obs);

/// Called after each record is produced, with the full register state
/// (physical + cfg.rounds ancillas) at that point.
using RoundObserver =
    std::function<void(const TwirlRecord &, const StateVector &)>;

/**
 * @brief Iterated distillation of an approximate vacuum.
 *
 * Appends cfg.rounds ancillas in |0>, emits the pre-twirl record, then
 * for each round twirls with the next ancilla using theta from the
 * previous record and re-estimates the energy on the active subspace.
 */
std::vector<TwirlRecord> run_distillation(const StateVector &psi0,
                                          const ModelSpec &spec,
                                          const TwirlConfig &cfg,
                                          const PauliHamiltonian &obs,
                                          const RoundObserver &observer = {});

} // namespace vacdist
