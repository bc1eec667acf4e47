#include "hvqe/vqe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hvqe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void append_rotation_block(std::vector<Gate>& gates, int qubit, std::span<const double> abc) {
    gates.push_back(Gate::rz(qubit, abc[0]));
    gates.push_back(Gate::rx(qubit, abc[1]));
    gates.push_back(Gate::rz(qubit, abc[2]));
}

// Parity of the bits selected by the Z letters of a diagonal pattern.
double pattern_sign(const std::string& ops, std::string_view bits) {
    int parity = 0;
    for (std::size_t q = 0; q < ops.size(); ++q)
        if (ops[q] == 'Z' && bits[q] == '1') parity ^= 1;
    return parity ? -1.0 : 1.0;
}

void check_diagonal(const PauliSum& h) {
    if (!h.is_diagonal())
        throw std::invalid_argument(
            "histogram-based estimation needs a diagonal (I/Z only) Hamiltonian; "
            "X/Y terms would require basis rotation");
}

bool is_identity(const std::string& ops) {
    return ops.find_first_not_of('I') == std::string::npos;
}

EnergyEstimate estimate_from_frequencies(const PauliSum& h,
                                         const std::map<std::string, double>& frequencies,
                                         std::uint64_t shots) {
    check_diagonal(h);
    EnergyEstimate est;
    est.shots_per_term = shots;
    for (const auto& term : h.terms()) {
        double expectation = 1.0;  // the identity contributes exactly
        if (!is_identity(term.ops)) {
            expectation = 0.0;
            for (const auto& [bits, freq] : frequencies)
                expectation += freq * pattern_sign(term.ops, bits);
        }
        est.term_expectations[term.ops] = expectation;
        est.energy += term.coefficient * expectation;
    }
    return est;
}

}  // namespace

std::vector<double> canonicalize_angles(std::span<const double> angles) {
    std::vector<double> out(angles.begin(), angles.end());
    for (double& a : out) {
        a = std::fmod(a, kTwoPi);
        if (a < 0.0) a += kTwoPi;
    }
    return out;
}

StateVector prepare_ansatz(const AnsatzConfig& config, std::span<const double> angles) {
    if (config.depth < 1) throw std::invalid_argument("ansatz depth must be at least 1");
    if (static_cast<int>(angles.size()) != config.parameter_count())
        throw std::invalid_argument("parameter count must be 3 * n_qubits * (depth + 1)");
    for (double a : angles)
        if (!std::isfinite(a)) throw std::invalid_argument("ansatz angles must be finite");

    std::vector<Gate> gates;
    std::size_t next = 0;
    const auto take_block = [&](int qubit) {
        append_rotation_block(gates, qubit, angles.subspan(next, 3));
        next += 3;
    };

    for (int layer = 0; layer < config.depth; ++layer) {
        for (int q = 0; q < config.n_qubits; ++q) take_block(q);
        // Entangler: forward then backward CNOT chain; two gates on two qubits.
        for (int q = 0; q + 1 < config.n_qubits; ++q) gates.push_back(Gate::cnot(q, q + 1));
        for (int q = 0; q + 1 < config.n_qubits; ++q) gates.push_back(Gate::cnot(q + 1, q));
    }
    for (int q = 0; q < config.n_qubits; ++q) take_block(q);

    StateVector state(config.n_qubits);
    state.apply(gates);
    return state;
}

ZExpectations estimate_pauli_z_expectations(const ShotHistogram& hist) {
    if (hist.shots == 0 || hist.counts.empty())
        throw std::invalid_argument("histogram is empty");
    for (const auto& [bits, count] : hist.counts)
        if (bits.size() != 2)
            throw std::invalid_argument("Z expectation formulas need a 2-qubit histogram");

    const auto p = [&](const char* bits) {
        const auto it = hist.counts.find(bits);
        return it == hist.counts.end()
                   ? 0.0
                   : static_cast<double>(it->second) / static_cast<double>(hist.shots);
    };
    const double p00 = p("00"), p01 = p("01"), p10 = p("10"), p11 = p("11");
    return {p00 + p01 - p10 - p11, p00 - p01 + p10 - p11, p00 - p01 - p10 + p11};
}

EnergyEstimate energy_exact(const PauliSum& h, const StateVector& state) {
    if (h.width() != state.n_qubits())
        throw std::invalid_argument("Hamiltonian width does not match state");
    EnergyEstimate est;
    for (const auto& term : h.terms()) {
        double value = 1.0;
        if (!is_identity(term.ops)) {
            const StateVector transformed = apply_pauli(PauliTerm(term.ops), state);
            value = state.inner_product(transformed).real();
        }
        est.term_expectations[term.ops] = value;
        est.energy += term.coefficient * value;
    }
    return est;
}

EnergyEstimate energy_from_counts(const PauliSum& h, const ShotHistogram& hist) {
    if (hist.shots == 0 || hist.counts.empty())
        throw std::invalid_argument("histogram is empty");
    std::map<std::string, double> freq;
    for (const auto& [bits, count] : hist.counts) {
        if (static_cast<int>(bits.size()) != h.width())
            throw std::invalid_argument("histogram bitstring width does not match Hamiltonian");
        freq[bits] = static_cast<double>(count) / static_cast<double>(hist.shots);
    }
    return estimate_from_frequencies(h, freq, hist.shots);
}

EnergyEstimate energy_from_probabilities(const PauliSum& h, const StateVector& state) {
    if (h.width() != state.n_qubits())
        throw std::invalid_argument("Hamiltonian width does not match state");
    std::map<std::string, double> freq;
    for (std::size_t i = 0; i < state.dimension(); ++i)
        freq[bitstring_of(i, state.n_qubits())] = std::norm(state.amplitudes()[i]);
    return estimate_from_frequencies(h, freq, 0);
}

EnergyEstimate sampled_energy(const PauliSum& h, const AnsatzConfig& config,
                              std::span<const double> angles, std::uint64_t shots,
                              std::uint64_t seed) {
    const StateVector state = prepare_ansatz(config, angles);
    return energy_from_counts(h, sample(state, shots, seed));
}

double variance(const PauliSum& h, const StateVector& state) {
    if (h.width() != state.n_qubits())
        throw std::invalid_argument("Hamiltonian width does not match state");
    const CMatrix m = to_matrix(h);
    const auto h_psi = m.apply(state.amplitudes());

    cdouble mean = 0.0;
    double second_moment = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        mean += std::conj(amps[i]) * h_psi[i];
        second_moment += std::norm(h_psi[i]);  // <psi|H^2|psi> = |H psi|^2
    }
    return second_moment - std::norm(mean);
}

}  // namespace hvqe
