#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "vacdist/pauli.hpp"
#include "vacdist/statevec.hpp"

namespace vacdist {

enum class ModelKind {
    /// H_T = X + J Z on one qubit.
    one_qubit,
    /// Two-site massless lattice Schwinger model after Gauss-law
    /// elimination and Jordan-Wigner: 1/2 (X0 X1 + Y0 Y1) + J Z0.
    schwinger_two_site,
};

struct ModelSpec {
    ModelKind kind{ModelKind::one_qubit};
    /// Dimensionless coupling. For the Schwinger case J = g^2 a^2 / 2.
    double j{1.0};
};

std::string to_string(ModelKind kind);
/// Accepts "one-qubit"/"one_qubit"/"1q" and "schwinger"/"schwinger_two_site"/"2q".
ModelKind parse_model_kind(std::string_view name);

std::size_t n_physical(const ModelSpec &spec);

PauliHamiltonian target_hamiltonian(const ModelSpec &spec);

/// Z for one qubit, 1/2 (Z0 - Z1) for the two-site model.
PauliHamiltonian initial_hamiltonian(const ModelSpec &spec);

/// Observable whose vacuum expectation value is reported. Coincides with
/// initial_hamiltonian for both models.
PauliHamiltonian observable(const ModelSpec &spec);

/// Ground state of initial_hamiltonian: |1> or |1>_0 |0>_1.
StateVector initial_state(const ModelSpec &spec);

struct AnalyticGround {
    double e0;
    double vev;
};

/// Closed-form ground energy and observable expectation value.
AnalyticGround analytic_ground(const ModelSpec &spec);

/// Variance of the observable's eigenvalue when the exact ground state
/// is measured in the computational basis.
double measurement_variance(const ModelSpec &spec);

} // namespace vacdist
