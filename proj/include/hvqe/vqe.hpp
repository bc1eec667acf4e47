// The trial-state circuit and energy estimation. Each qubit gets a
// three-angle rotation block U = RZ(c) RX(b) RZ(a) (a applied first); a layer
// is one block per qubit followed by a fixed CNOT entangler chain, and a
// final row of blocks closes the circuit. Energies come either from the exact
// state, from basis-state probabilities, or from a sampled shot histogram via
// the diagonal-pattern parity formulas.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hvqe/pauli.hpp"
#include "hvqe/statevector.hpp"

namespace hvqe {

struct AnsatzConfig {
    int n_qubits = 2;
    int depth = 1;  // entangling layers

    // 3 angles per qubit per layer, plus the final rotation row.
    int parameter_count() const { return 3 * n_qubits * (depth + 1); }
};

// Angles reduced to [0, 2pi) for reporting; the prepared state only changes
// by a global phase.
std::vector<double> canonicalize_angles(std::span<const double> angles);

StateVector prepare_ansatz(const AnsatzConfig& config, std::span<const double> angles);

struct ZExpectations {
    double z0 = 0.0;
    double z1 = 0.0;
    double z0z1 = 0.0;
};

// Two-qubit estimates from measured populations:
//   <Z0 I>  = P00 + P01 - P10 - P11
//   <I Z1>  = P00 - P01 + P10 - P11
//   <Z0 Z1> = P00 - P01 - P10 + P11
ZExpectations estimate_pauli_z_expectations(const ShotHistogram& hist);

struct EnergyEstimate {
    double energy = 0.0;  // Hartree
    std::map<std::string, double> term_expectations;
    std::uint64_t shots_per_term = 0;  // 0 for the exact paths
    std::optional<double> variance;    // Hartree^2
};

// <psi|H|psi> term by term on the full state vector; works for any Pauli sum.
EnergyEstimate energy_exact(const PauliSum& h, const StateVector& state);

// Diagonal Hamiltonians only: every term expectation is a parity-weighted sum
// over the histogram's basis-state frequencies. One histogram serves all
// terms.
EnergyEstimate energy_from_counts(const PauliSum& h, const ShotHistogram& hist);

// Same parity formulas fed with exact probabilities instead of counts.
EnergyEstimate energy_from_probabilities(const PauliSum& h, const StateVector& state);

// Prepares, samples, and estimates in one step (the optimizer's shot path).
EnergyEstimate sampled_energy(const PauliSum& h, const AnsatzConfig& config,
                              std::span<const double> angles, std::uint64_t shots,
                              std::uint64_t seed);

// Var(H) = <H^2> - <H>^2, computed through the dense matrix realization.
double variance(const PauliSum& h, const StateVector& state);

}  // namespace hvqe
