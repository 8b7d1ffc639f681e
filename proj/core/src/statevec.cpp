#include "vacdist/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "vacdist/errors.hpp"
#include "vacdist/rng.hpp"

namespace vacdist {

namespace gates {

Matrix2 hadamard() {
    const double r = std::numbers::sqrt2 / 2.0;
    return {Complex{r}, Complex{r}, Complex{r}, Complex{-r}};
}
Matrix2 pauli_x() { return {Complex{0}, Complex{1}, Complex{1}, Complex{0}}; }
Matrix2 pauli_y() {
    return {Complex{0}, Complex{0, -1}, Complex{0, 1}, Complex{0}};
}
Matrix2 pauli_z() { return {Complex{1}, Complex{0}, Complex{0}, Complex{-1}}; }
Matrix2 phase(double phi) {
    return {Complex{1}, Complex{0}, Complex{0}, std::polar(1.0, phi)};
}

} // namespace gates

std::size_t RegisterLayout::ancilla_qubit(std::size_t j) const {
    if (j >= n_ancilla) {
        throw ConfigError("RegisterLayout: ancilla " + std::to_string(j) +
                          " out of range (" + std::to_string(n_ancilla) +
                          " ancillas)");
    }
    return n_physical + j;
}

std::uint64_t RegisterLayout::physical_mask() const {
    return (std::uint64_t{1} << n_physical) - 1;
}

std::uint64_t RegisterLayout::ancilla_mask() const {
    return ((std::uint64_t{1} << n_qubits()) - 1) & ~physical_mask();
}

namespace {

void check_register_size(std::size_t n_qubits) {
    if (n_qubits == 0 || n_qubits > 30) {
        throw ConfigError("StateVector: qubit count must be in [1, 30], got " +
                          std::to_string(n_qubits));
    }
}

double unitarity_defect2(const Matrix2 &u) {
    // u^dagger u - I
    const Complex a = std::conj(u[0]) * u[0] + std::conj(u[2]) * u[2] - 1.0;
    const Complex b = std::conj(u[0]) * u[1] + std::conj(u[2]) * u[3];
    const Complex d = std::conj(u[1]) * u[1] + std::conj(u[3]) * u[3] - 1.0;
    return std::max({std::abs(a), std::abs(b), std::abs(d)});
}

} // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_{n_qubits} {
    check_register_size(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Complex{});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amps)
    : n_qubits_{n_qubits}, amps_{std::move(amps)} {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw ConfigError("StateVector: amplitude count " +
                          std::to_string(amps.size()) +
                          " is not a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(amps.size()));
    check_register_size(n);
    StateVector s(n, std::move(amps));
    if (std::abs(s.norm_squared() - 1.0) > kNormTolerance) {
        throw ValidationError("StateVector: amplitudes not normalized (norm^2 = " +
                              std::to_string(s.norm_squared()) + ")");
    }
    return s;
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

void StateVector::normalize() {
    const double n2 = norm_squared();
    if (n2 <= 0.0) {
        throw DegenerateProtocolError("StateVector: cannot normalize zero vector");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto &a : amps_) {
        a *= scale;
    }
}

StateVector StateVector::with_ancillas(std::size_t extra) const {
    std::vector<Complex> amps(amps_.size() << extra);
    std::copy(amps_.begin(), amps_.end(), amps.begin());
    check_register_size(n_qubits_ + extra);
    return StateVector(n_qubits_ + extra, std::move(amps));
}

void StateVector::check_qubit(std::size_t q, const char *what) const {
    if (q >= n_qubits_) {
        throw ConfigError(std::string(what) + ": qubit " + std::to_string(q) +
                          " out of range for " + std::to_string(n_qubits_) +
                          "-qubit state");
    }
}

void StateVector::apply_one_qubit(std::size_t q, const Matrix2 &u) {
    check_qubit(q, "apply_one_qubit");
    if (const double defect = unitarity_defect2(u); defect > 1e-12) {
        throw ValidationError("apply_one_qubit: gate is not unitary (defect " +
                              std::to_string(defect) + ")");
    }
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i + stride];
            amps_[i] = u[0] * a0 + u[1] * a1;
            amps_[i + stride] = u[2] * a0 + u[3] * a1;
        }
    }
}

void StateVector::apply_block(std::span<const std::size_t> targets,
                              const DenseMatrix &u) {
    apply_block_impl(targets, u, 0);
}

void StateVector::apply_controlled_block(std::size_t control,
                                         std::span<const std::size_t> targets,
                                         const DenseMatrix &u) {
    check_qubit(control, "apply_controlled_block");
    if (std::find(targets.begin(), targets.end(), control) != targets.end()) {
        throw ConfigError("apply_controlled_block: control qubit " +
                          std::to_string(control) + " is also a target");
    }
    apply_block_impl(targets, u, std::uint64_t{1} << control);
}

void StateVector::apply_block_impl(std::span<const std::size_t> targets,
                                   const DenseMatrix &u,
                                   std::uint64_t required_mask) {
    const std::size_t k = targets.size();
    if (k == 0 || u.dim() != (std::size_t{1} << k)) {
        throw ConfigError("apply_block: gate dimension " +
                          std::to_string(u.dim()) + " does not match " +
                          std::to_string(k) + " target qubits");
    }
    std::uint64_t target_mask = 0;
    for (auto q : targets) {
        check_qubit(q, "apply_block");
        const std::uint64_t bit = std::uint64_t{1} << q;
        if (target_mask & bit) {
            throw ConfigError("apply_block: repeated target qubit " +
                              std::to_string(q));
        }
        target_mask |= bit;
    }
    if (const double defect = unitarity_defect(u); defect > 1e-10) {
        throw ValidationError("apply_block: gate is not unitary (defect " +
                              std::to_string(defect) + ")");
    }

    const std::size_t block = u.dim();
    std::vector<std::uint64_t> offsets(block, 0);
    for (std::size_t j = 0; j < block; ++j) {
        for (std::size_t b = 0; b < k; ++b) {
            if ((j >> b) & 1U) {
                offsets[j] |= std::uint64_t{1} << targets[b];
            }
        }
    }

    std::vector<Complex> in(block);
    std::vector<Complex> out(block);
    for (std::uint64_t base = 0; base < amps_.size(); ++base) {
        if ((base & target_mask) != 0 || (base & required_mask) != required_mask) {
            continue;
        }
        for (std::size_t j = 0; j < block; ++j) {
            in[j] = amps_[base | offsets[j]];
        }
        for (std::size_t r = 0; r < block; ++r) {
            Complex acc{};
            for (std::size_t c = 0; c < block; ++c) {
                acc += u(r, c) * in[c];
            }
            out[r] = acc;
        }
        for (std::size_t j = 0; j < block; ++j) {
            amps_[base | offsets[j]] = out[j];
        }
    }
}

void StateVector::apply_diagonal_evolution(const PauliHamiltonian &h, double t) {
    if (h.n_qubits() > n_qubits_) {
        throw ConfigError("apply_diagonal_evolution: Hamiltonian wider than state");
    }
    const auto diag = diagonal_values(h);
    std::vector<Complex> phases(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        phases[i] = std::polar(1.0, -diag[i] * t);
    }
    const std::uint64_t low = diag.size() - 1;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        amps_[i] *= phases[i & low];
    }
}

StateVector basis_state(std::size_t n_qubits, std::string_view bits) {
    if (bits.size() != n_qubits) {
        throw ConfigError("basis_state: bitstring '" + std::string(bits) +
                          "' has length " + std::to_string(bits.size()) +
                          ", expected " + std::to_string(n_qubits));
    }
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1') {
            index |= std::uint64_t{1} << k;
        } else if (bits[k] != '0') {
            throw ConfigError("basis_state: bitstring must contain only 0/1");
        }
    }
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    amps[index] = 1.0;
    return StateVector::from_amplitudes(std::move(amps));
}

std::string index_to_bitstring(std::uint64_t index, std::size_t n_qubits) {
    std::string s(n_qubits, '0');
    for (std::size_t k = 0; k < n_qubits; ++k) {
        if ((index >> k) & 1U) {
            s[k] = '1';
        }
    }
    return s;
}

double expectation(const StateVector &state, const PauliHamiltonian &obs) {
    if (obs.n_qubits() > state.n_qubits()) {
        throw ConfigError("expectation: observable on " +
                          std::to_string(obs.n_qubits()) + " qubits, state has " +
                          std::to_string(state.n_qubits()));
    }
    const auto amps = state.amplitudes();
    double total = 0.0;
    for (const auto &t : obs.terms()) {
        const auto flip = t.flip_mask();
        const auto sign = t.sign_mask();
        const auto ny = t.y_count();
        static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const Complex base = kIPow[ny % 4];
        Complex acc{};
        for (std::uint64_t x = 0; x < amps.size(); ++x) {
            const Complex ph = (std::popcount(x & sign) & 1) ? -base : base;
            acc += std::conj(amps[x ^ flip]) * ph * amps[x];
        }
        total += t.coeff * acc.real();
    }
    return total;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw ConfigError("inner_product: dimension mismatch");
    }
    Complex acc{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double active_probability(const StateVector &state, const RegisterLayout &layout) {
    if (layout.n_qubits() != state.n_qubits()) {
        throw ConfigError("RegisterLayout covers " +
                          std::to_string(layout.n_qubits()) + " qubits, state has " +
                          std::to_string(state.n_qubits()));
    }
    const std::size_t phys_dim = std::size_t{1} << layout.n_physical;
    double p = 0.0;
    for (std::size_t i = 0; i < phys_dim; ++i) {
        p += std::norm(state[i]);
    }
    return p;
}

Projection project_ancillas_zero(const StateVector &state,
                                 const RegisterLayout &layout, double min_prob) {
    const double p = active_probability(state, layout);
    if (p <= 0.0 || p < min_prob) {
        throw DegenerateProtocolError(
            "project_ancillas_zero: active probability " + std::to_string(p) +
            " below threshold " + std::to_string(min_prob));
    }
    // All-ancillas-zero indices are exactly the low 2^n_physical entries.
    const std::size_t phys_dim = std::size_t{1} << layout.n_physical;
    const double scale = 1.0 / std::sqrt(p);
    std::vector<Complex> amps(phys_dim);
    for (std::size_t i = 0; i < phys_dim; ++i) {
        amps[i] = state[i] * scale;
    }
    return {p, StateVector::from_amplitudes(std::move(amps))};
}

ShotTally::ShotTally(std::size_t n_qubits, std::uint64_t seed)
    : n_qubits_{n_qubits}, seed_{seed}, by_index_(std::size_t{1} << n_qubits, 0) {}

void ShotTally::add(std::uint64_t index, std::uint64_t count) {
    by_index_.at(index) += count;
    n_shots_ += count;
}

std::map<std::string, std::uint64_t> ShotTally::counts() const {
    std::map<std::string, std::uint64_t> out;
    for (std::uint64_t i = 0; i < by_index_.size(); ++i) {
        if (by_index_[i] != 0) {
            out.emplace(index_to_bitstring(i, n_qubits_), by_index_[i]);
        }
    }
    return out;
}

ShotTally sample_shots(const StateVector &state, std::uint64_t n_shots,
                       std::uint64_t seed) {
    if (n_shots == 0) {
        throw ConfigError("sample_shots: n_shots must be >= 1");
    }
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double run = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        run += std::norm(amps[i]);
        cdf[i] = run;
    }
    const double total = cdf.back();

    Rng rng(seed);
    std::vector<std::uint64_t> counts(amps.size(), 0);
    for (std::uint64_t s = 0; s < n_shots; ++s) {
        const double r = uniform01(rng) * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), r);
        if (it == cdf.end()) {
            --it;
        }
        ++counts[static_cast<std::size_t>(it - cdf.begin())];
    }

    ShotTally tally(state.n_qubits(), seed);
    for (std::uint64_t i = 0; i < counts.size(); ++i) {
        if (counts[i] != 0) {
            tally.add(i, counts[i]);
        }
    }
    return tally;
}

} // namespace vacdist
