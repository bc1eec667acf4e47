#include "hvqe/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hvqe/rng.hpp"

namespace hvqe {

namespace {

const cdouble kI{0.0, 1.0};

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits)
        throw std::invalid_argument("qubit count must be between 1 and 8");
}

// Bit position of qubit k in a basis index (qubit 0 is most significant).
inline int bit_pos(int n_qubits, int qubit) { return n_qubits - 1 - qubit; }

void check_target(int n_qubits, int qubit) {
    if (qubit < 0 || qubit >= n_qubits)
        throw std::out_of_range("gate target out of range");
}

}  // namespace

std::size_t basis_index(std::string_view bits) {
    std::size_t idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("bitstring must be over {0,1}");
        idx = (idx << 1) | static_cast<std::size_t>(c - '0');
    }
    return idx;
}

std::string bitstring_of(std::size_t index, int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int k = 0; k < n_qubits; ++k)
        if (index >> bit_pos(n_qubits, k) & 1u) s[static_cast<std::size_t>(k)] = '1';
    return s;
}

CMatrix gate_matrix(const Gate& gate) {
    const double half = gate.angle / 2.0;
    CMatrix m(2, 2);
    switch (gate.kind) {
        case GateKind::RX:
            m.at(0, 0) = std::cos(half);
            m.at(0, 1) = -kI * std::sin(half);
            m.at(1, 0) = -kI * std::sin(half);
            m.at(1, 1) = std::cos(half);
            return m;
        case GateKind::RZ:
            m.at(0, 0) = std::exp(-kI * half);
            m.at(1, 1) = std::exp(kI * half);
            return m;
        case GateKind::X:
            m.at(0, 1) = 1.0;
            m.at(1, 0) = 1.0;
            return m;
        case GateKind::Y:
            m.at(0, 1) = -kI;
            m.at(1, 0) = kI;
            return m;
        case GateKind::Z:
            m.at(0, 0) = 1.0;
            m.at(1, 1) = -1.0;
            return m;
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            m.at(0, 0) = r;
            m.at(0, 1) = r;
            m.at(1, 0) = r;
            m.at(1, 1) = -r;
            return m;
        }
        case GateKind::CNOT: {
            CMatrix c(4, 4);
            c.at(0, 0) = 1.0;
            c.at(1, 1) = 1.0;
            c.at(2, 3) = 1.0;
            c.at(3, 2) = 1.0;
            return c;
        }
    }
    throw std::logic_error("unreachable gate kind");
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amplitudes_.assign(std::size_t{1} << n_qubits, cdouble{});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::computational_basis(int n_qubits, std::string_view bits) {
    if (static_cast<int>(bits.size()) != n_qubits)
        throw std::invalid_argument("bitstring length must equal qubit count");
    StateVector s(n_qubits);
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[basis_index(bits)] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<cdouble> amplitudes) {
    check_qubit_count(n_qubits);
    if (amplitudes.size() != (std::size_t{1} << n_qubits))
        throw std::invalid_argument("amplitude vector length must be 2^n");
    StateVector s(n_qubits);
    s.amplitudes_ = std::move(amplitudes);
    if (std::abs(s.norm_sq() - 1.0) > 1e-9)
        throw std::invalid_argument("amplitudes are not normalized");
    return s;
}

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return s;
}

cdouble StateVector::inner_product(const StateVector& other) const {
    if (n_qubits_ != other.n_qubits_)
        throw std::invalid_argument("states have different register widths");
    cdouble acc = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i)
        acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    return acc;
}

void StateVector::apply(const Gate& gate) {
    check_target(n_qubits_, gate.target);
    if (gate.kind == GateKind::CNOT) {
        check_target(n_qubits_, gate.control);
        if (gate.control == gate.target)
            throw std::invalid_argument("CNOT control and target must differ");
        const std::size_t cmask = std::size_t{1} << bit_pos(n_qubits_, gate.control);
        const std::size_t tmask = std::size_t{1} << bit_pos(n_qubits_, gate.target);
        for (std::size_t i = 0; i < amplitudes_.size(); ++i)
            if ((i & cmask) && !(i & tmask)) std::swap(amplitudes_[i], amplitudes_[i | tmask]);
        return;
    }

    const CMatrix u = gate_matrix(gate);
    const std::size_t tmask = std::size_t{1} << bit_pos(n_qubits_, gate.target);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (i & tmask) continue;
        const cdouble a0 = amplitudes_[i];
        const cdouble a1 = amplitudes_[i | tmask];
        amplitudes_[i] = u.at(0, 0) * a0 + u.at(0, 1) * a1;
        amplitudes_[i | tmask] = u.at(1, 0) * a0 + u.at(1, 1) * a1;
    }
}

void StateVector::apply(std::span<const Gate> gates) {
    for (const Gate& g : gates) apply(g);
}

StateVector apply_gate(StateVector state, const Gate& gate) {
    state.apply(gate);
    return state;
}

double exact_probability(const StateVector& state, std::string_view bits) {
    if (static_cast<int>(bits.size()) != state.n_qubits())
        throw std::invalid_argument("bitstring length must equal qubit count");
    return std::norm(state.amplitudes()[basis_index(bits)]);
}

ShotHistogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("shots must be at least 1");

    const auto amps = state.amplitudes();
    std::vector<double> cumulative(amps.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        cumulative[i] = acc;
    }
    cumulative.back() = 1.0;

    Rng rng(seed);
    std::vector<std::uint64_t> counts(amps.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform();
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        counts[static_cast<std::size_t>(it - cumulative.begin())]++;
    }

    ShotHistogram hist;
    hist.shots = shots;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0) hist.counts[bitstring_of(i, state.n_qubits())] = counts[i];
    return hist;
}

}  // namespace hvqe
