#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "vacdist/models.hpp"
#include "vacdist/pauli.hpp"
#include "vacdist/statevec.hpp"

namespace vacdist {

/**
 * @brief Uniform time grid for the adiabatic sweep, s = t / T.
 *
 * The step count is round(T / dt); the effective step T / n_steps is what
 * the integrator uses and is recorded next to the requested value.
 */
struct Schedule {
    double t_total{36.0};
    double dt_requested{1.0 / 24.0};
    std::size_t n_steps{864};

    static Schedule make(double t_total, double dt);

    [[nodiscard]] double dt() const { return t_total / static_cast<double>(n_steps); }
    /// s at the midpoint of step k.
    [[nodiscard]] double s_midpoint(std::size_t k) const;
};

/// A = diagonal (I/Z) terms, B = everything else. Terms within each part
/// commute pairwise, so each part exponentiates exactly.
struct TrotterSplit {
    PauliHamiltonian part_a;
    PauliHamiltonian part_b;

    /// Throws ConfigError if the off-diagonal terms do not commute.
    static TrotterSplit diagonal_split(const PauliHamiltonian &h);

    [[nodiscard]] PauliHamiltonian sum() const { return part_a + part_b; }
};

enum class Propagation {
    /// exp(-i A dt/2) exp(-i B dt) exp(-i A dt/2)
    trotter2,
    /// exp(-i (A + B) dt) by eigendecomposition.
    exact,
};

/// (1 - s) h0 + s ht, s in [0, 1].
PauliHamiltonian interpolate(const PauliHamiltonian &h0,
                             const PauliHamiltonian &ht, double s);

/// One symmetric second-order Suzuki-Trotter step on the low
/// split.part_a.n_qubits() qubits of `state`.
void trotter2_step(StateVector &state, const TrotterSplit &split, double dt);

/// Precomputed step for a time-independent Hamiltonian. Applying it is a
/// handful of dense block products.
class StepOperator {
  public:
    StepOperator(const PauliHamiltonian &h, double dt, Propagation mode);
    /// Second-order step with an explicit split.
    StepOperator(const TrotterSplit &split, double dt);

    void apply(StateVector &state) const;
    void apply_controlled(StateVector &state, std::size_t control) const;

  private:
    std::vector<std::size_t> targets_;
    std::vector<DenseMatrix> factors_; // applied in order
};

using StepObserver = std::function<void(double t, const StateVector &)>;

/**
 * @brief Adiabatic sweep from the ground state of H0 towards that of H_T.
 *
 * Step k uses H_A(s) with s at the step midpoint (t_k + dt/2) / T.
 * `observer`, when set, sees the initial state at t = 0 and the state
 * after every step.
 */
StateVector run_adiabatic(const ModelSpec &spec, const Schedule &sched,
                          const StateVector &initial,
                          Propagation mode = Propagation::trotter2,
                          const StepObserver &observer = {});

struct TrajectoryPoint {
    double t;
    StateVector state;
};

/// Evolution under a fixed Hamiltonian; first point is the input at
/// t = t_start, then one point per step. round(duration / dt) steps.
std::vector<TrajectoryPoint> evolve_constant(const StateVector &state,
                                             const PauliHamiltonian &h,
                                             double duration, double dt,
                                             Propagation mode = Propagation::trotter2,
                                             double t_start = 0.0);

} // namespace vacdist
