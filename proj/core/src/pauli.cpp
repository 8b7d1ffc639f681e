#include "vacdist/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include "vacdist/errors.hpp"

namespace vacdist {

namespace {

void check_word(const PauliString &term, std::size_t n_qubits) {
    if (term.word.size() != n_qubits) {
        throw ConfigError("PauliString '" + term.word + "' has length " +
                          std::to_string(term.word.size()) + ", register has " +
                          std::to_string(n_qubits) + " qubits");
    }
    for (char c : term.word) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ConfigError("PauliString '" + term.word +
                              "': letters must be I, X, Y or Z");
        }
    }
    if (!std::isfinite(term.coeff)) {
        throw ConfigError("PauliString '" + term.word +
                          "': non-finite coefficient");
    }
}

// (-1)^popcount(x & mask) * i^{y_count}
Complex term_phase(std::uint64_t x, std::uint64_t sign_mask,
                   std::size_t y_count) {
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const bool negative = (std::popcount(x & sign_mask) & 1) != 0;
    const Complex base = kIPow[y_count % 4];
    return negative ? -base : base;
}

} // namespace

std::uint64_t PauliString::flip_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (word[k] == 'X' || word[k] == 'Y') {
            mask |= std::uint64_t{1} << k;
        }
    }
    return mask;
}

std::uint64_t PauliString::sign_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (word[k] == 'Z' || word[k] == 'Y') {
            mask |= std::uint64_t{1} << k;
        }
    }
    return mask;
}

std::size_t PauliString::y_count() const {
    return static_cast<std::size_t>(std::count(word.begin(), word.end(), 'Y'));
}

bool PauliString::is_diagonal() const {
    return std::all_of(word.begin(), word.end(),
                       [](char c) { return c == 'I' || c == 'Z'; });
}

bool commutes(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) {
        throw ConfigError("commutes: word lengths differ");
    }
    std::size_t anti = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != 'I' && b[k] != 'I' && a[k] != b[k]) {
            ++anti;
        }
    }
    return anti % 2 == 0;
}

PauliHamiltonian::PauliHamiltonian(std::size_t n_qubits) : n_qubits_{n_qubits} {
    if (n_qubits == 0 || n_qubits > 63) {
        throw ConfigError("PauliHamiltonian: qubit count must be in [1, 63]");
    }
}

PauliHamiltonian::PauliHamiltonian(std::size_t n_qubits,
                                   std::vector<PauliString> terms)
    : PauliHamiltonian(n_qubits) {
    for (const auto &t : terms) {
        check_word(t, n_qubits);
    }
    terms_ = std::move(terms);
    canonicalize();
}

PauliHamiltonian::PauliHamiltonian(std::size_t n_qubits,
                                   std::initializer_list<PauliString> terms)
    : PauliHamiltonian(n_qubits, std::vector<PauliString>(terms)) {}

PauliHamiltonian PauliHamiltonian::single(std::size_t n_qubits, char letter,
                                          std::size_t qubit, double coeff) {
    if (qubit >= n_qubits) {
        throw ConfigError("PauliHamiltonian::single: qubit out of range");
    }
    std::string word(n_qubits, 'I');
    word[qubit] = letter;
    return PauliHamiltonian(n_qubits, {PauliString{coeff, word}});
}

void PauliHamiltonian::canonicalize() {
    std::map<std::string, double> merged;
    for (const auto &t : terms_) {
        merged[t.word] += t.coeff;
    }
    terms_.clear();
    for (const auto &[word, c] : merged) {
        if (std::abs(c) >= kMergeThreshold) {
            terms_.push_back({c, word});
        }
    }
}

double PauliHamiltonian::coeff(std::string_view word) const {
    for (const auto &t : terms_) {
        if (t.word == word) {
            return t.coeff;
        }
    }
    return 0.0;
}

bool PauliHamiltonian::is_diagonal() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const PauliString &t) { return t.is_diagonal(); });
}

PauliHamiltonian PauliHamiltonian::padded(std::size_t n_qubits) const {
    if (n_qubits < n_qubits_) {
        throw ConfigError("PauliHamiltonian::padded: cannot shrink register");
    }
    std::vector<PauliString> terms = terms_;
    for (auto &t : terms) {
        t.word.append(n_qubits - n_qubits_, 'I');
    }
    return PauliHamiltonian(n_qubits, std::move(terms));
}

PauliHamiltonian &PauliHamiltonian::operator+=(const PauliHamiltonian &rhs) {
    if (rhs.n_qubits_ != n_qubits_) {
        throw ConfigError("PauliHamiltonian: register width mismatch (" +
                          std::to_string(n_qubits_) + " vs " +
                          std::to_string(rhs.n_qubits_) + ")");
    }
    terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    canonicalize();
    return *this;
}

PauliHamiltonian &PauliHamiltonian::operator*=(double scale) {
    for (auto &t : terms_) {
        t.coeff *= scale;
    }
    canonicalize();
    return *this;
}

std::string PauliHamiltonian::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto &t : terms_) {
        os << (first ? "" : " + ") << t.coeff << "*" << t.word;
        first = false;
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

DenseMatrix to_dense(const PauliHamiltonian &h) {
    if (h.n_qubits() > kMaxDenseQubits) {
        throw ConfigError("to_dense: " + std::to_string(h.n_qubits()) +
                          " qubits exceeds the dense limit of " +
                          std::to_string(kMaxDenseQubits));
    }
    const std::size_t dim = std::size_t{1} << h.n_qubits();
    DenseMatrix m(dim);
    for (const auto &t : h.terms()) {
        const auto flip = t.flip_mask();
        const auto sign = t.sign_mask();
        const auto ny = t.y_count();
        for (std::uint64_t col = 0; col < dim; ++col) {
            m(col ^ flip, col) += t.coeff * term_phase(col, sign, ny);
        }
    }
    return m;
}

DenseMatrix expm_exact(const PauliHamiltonian &h, double t) {
    if (h.is_diagonal()) {
        const auto diag = diagonal_values(h);
        std::vector<Complex> phases(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) {
            phases[i] = std::polar(1.0, -diag[i] * t);
        }
        return DenseMatrix::diagonal(phases);
    }
    return expm_hermitian(to_dense(h), t);
}

std::vector<double> diagonal_values(const PauliHamiltonian &h) {
    if (!h.is_diagonal()) {
        throw ConfigError("diagonal_values: Hamiltonian has X/Y terms");
    }
    if (h.n_qubits() > kMaxDenseQubits) {
        throw ConfigError("diagonal_values: register too large");
    }
    const std::size_t dim = std::size_t{1} << h.n_qubits();
    std::vector<double> out(dim, 0.0);
    for (const auto &t : h.terms()) {
        const auto sign = t.sign_mask();
        for (std::uint64_t x = 0; x < dim; ++x) {
            out[x] += (std::popcount(x & sign) & 1) ? -t.coeff : t.coeff;
        }
    }
    return out;
}

} // namespace vacdist
