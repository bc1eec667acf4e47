// Dense state-vector simulation of small qubit registers: gate application,
// exact basis-state probabilities, and seeded shot sampling.
//
// Bit ordering convention, used everywhere in this project: character k of a
// bitstring reports qubit k, and qubit 0 is the most significant bit of the
// basis index, i.e. index = sum_k b_k * 2^(n-1-k). "10" on two qubits means
// qubit 0 measured 1, qubit 1 measured 0, basis index 2.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hvqe/matrix.hpp"

namespace hvqe {

inline constexpr int kMaxQubits = 8;

std::size_t basis_index(std::string_view bits);
std::string bitstring_of(std::size_t index, int n_qubits);

struct ShotHistogram {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;
};

enum class GateKind { RX, RZ, X, Y, Z, H, CNOT };

struct Gate {
    GateKind kind;
    int target = 0;
    int control = -1;  // CNOT only
    double angle = 0.0;  // RX/RZ only, radians

    static Gate rx(int target, double angle) { return {GateKind::RX, target, -1, angle}; }
    static Gate rz(int target, double angle) { return {GateKind::RZ, target, -1, angle}; }
    static Gate x(int target) { return {GateKind::X, target}; }
    static Gate y(int target) { return {GateKind::Y, target}; }
    static Gate z(int target) { return {GateKind::Z, target}; }
    static Gate h(int target) { return {GateKind::H, target}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, target, control}; }
};

// Matrix realization of a gate: 2x2, or 4x4 for CNOT on the ordered
// (control, target) pair with the control as the more significant bit.
CMatrix gate_matrix(const Gate& gate);

class StateVector {
public:
    // |00...0>
    explicit StateVector(int n_qubits);

    static StateVector computational_basis(int n_qubits, std::string_view bits);
    // Amplitudes must have length 2^n and unit norm.
    static StateVector from_amplitudes(int n_qubits, std::vector<cdouble> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const cdouble> amplitudes() const { return amplitudes_; }

    double norm_sq() const;
    cdouble inner_product(const StateVector& other) const;

    void apply(const Gate& gate);
    void apply(std::span<const Gate> gates);

private:
    int n_qubits_;
    std::vector<cdouble> amplitudes_;
};

StateVector apply_gate(StateVector state, const Gate& gate);

// |amplitude|^2 of the indexed basis state.
double exact_probability(const StateVector& state, std::string_view bits);

// Shot histogram drawn from the exact distribution by inverse-CDF sampling.
// Pure function of (state, shots, seed): identical inputs give bit-identical
// histograms on any platform.
ShotHistogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

}  // namespace hvqe
