#include "vacdist/models.hpp"

#include <cmath>

#include "vacdist/errors.hpp"

namespace vacdist {

namespace {

void check_spec(const ModelSpec &spec) {
    if (!std::isfinite(spec.j)) {
        throw ConfigError("ModelSpec: coupling J must be finite");
    }
}

} // namespace

std::string to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::one_qubit:
        return "one_qubit";
    case ModelKind::schwinger_two_site:
        return "schwinger_two_site";
    }
    return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
    if (name == "one-qubit" || name == "one_qubit" || name == "1q") {
        return ModelKind::one_qubit;
    }
    if (name == "schwinger" || name == "schwinger_two_site" ||
        name == "schwinger-two-site" || name == "2q") {
        return ModelKind::schwinger_two_site;
    }
    throw ConfigError("unknown model '" + std::string(name) + "'");
}

std::size_t n_physical(const ModelSpec &spec) {
    return spec.kind == ModelKind::one_qubit ? 1 : 2;
}

PauliHamiltonian target_hamiltonian(const ModelSpec &spec) {
    check_spec(spec);
    if (spec.kind == ModelKind::one_qubit) {
        return PauliHamiltonian(1, {{1.0, "X"}, {spec.j, "Z"}});
    }
    return PauliHamiltonian(2, {{0.5, "XX"}, {0.5, "YY"}, {spec.j, "ZI"}});
}

PauliHamiltonian initial_hamiltonian(const ModelSpec &spec) {
    check_spec(spec);
    if (spec.kind == ModelKind::one_qubit) {
        return PauliHamiltonian(1, {{1.0, "Z"}});
    }
    return PauliHamiltonian(2, {{0.5, "ZI"}, {-0.5, "IZ"}});
}

PauliHamiltonian observable(const ModelSpec &spec) {
    return initial_hamiltonian(spec);
}

StateVector initial_state(const ModelSpec &spec) {
    return spec.kind == ModelKind::one_qubit ? basis_state(1, "1")
                                             : basis_state(2, "10");
}

AnalyticGround analytic_ground(const ModelSpec &spec) {
    check_spec(spec);
    const double j = spec.j;
    const double root = std::sqrt(1.0 + j * j);
    if (spec.kind == ModelKind::one_qubit) {
        // X + J Z has eigenvalues +-root; the ground state's Z weight is -J/root.
        return {-root, -j / root};
    }
    // Charge-neutral block {|01>,|10>} is [[-J, 1], [1, J]] in the
    // (qubit0=1, qubit1=0), (qubit0=0, qubit1=1) ordering.
    const double k = j * j + j * root;
    return {-root, -k / (k + 1.0)};
}

double measurement_variance(const ModelSpec &spec) {
    // Both observables square to 1 on the ground state's support (Z on one
    // qubit; Zbar on the charge-neutral states), so Var = 1 - <O>^2.
    const double vev = analytic_ground(spec).vev;
    return 1.0 - vev * vev;
}

} // namespace vacdist
