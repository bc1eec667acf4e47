// The hydride-ion Hamiltonian on two spin orbitals. Integral values are fixed
// inputs; the builder assembles the two-qubit Pauli sum for a chosen encoding,
// sign convention, and two-body sign variant, and exposes the reference
// energies used for reporting.

#pragma once

#include "hvqe/fermion.hpp"
#include "hvqe/pauli.hpp"

namespace hvqe {

// paper_literal keeps the one-body integrals positive as quoted; physical
// negates them so the spectrum describes a bound state. Only these two value
// sets are meaningful, so IntegralSet is constructed from the convention.
enum class SignConvention { paper_literal, physical };

// Sign of the Z0.Z1 contribution in the two-body term. The two published
// forms of the expectation disagree on it; both are supported.
enum class TwoBodySign { eq16_plus, eq18_minus };

enum class Encoding { jordan_wigner, bravyi_kitaev, parity };

struct IntegralSet {
    double h00;    // one-body, orbital 0 (Hartree)
    double h11;    // one-body, orbital 1 (Hartree)
    double h0110;  // two-body direct term (Hartree)
    SignConvention convention;

    static IntegralSet from_convention(SignConvention convention);
};

struct HamiltonianSpec {
    Encoding encoding = Encoding::jordan_wigner;
    IntegralSet integrals = IntegralSet::from_convention(SignConvention::physical);
    TwoBodySign two_body_sign = TwoBodySign::eq16_plus;
};

// Closed-form Pauli sum for the spec. For Jordan-Wigner with the plus sign:
// h00/2 (1 - Z0) + h11/2 (1 - Z1) + h0110/8 (1 - Z0 - Z1 + Z0.Z1).
PauliSum build_hamiltonian(const HamiltonianSpec& spec);

// The same Hamiltonian as a second-quantized operator; its image under the
// spec's encoding equals build_hamiltonian term for term.
FermionOperator fermionic_hamiltonian(const IntegralSet& integrals, TwoBodySign two_body_sign);

// Closed-form energy of the occupation basis state |n0 n1>:
// h00 n0 + h11 n1 + h0110/2 n0 n1.
double basis_state_energy(const IntegralSet& integrals, int n0, int n1);

// Fixed annotation constants (Hartree) for reports and plots; never
// optimization targets.
struct ReferenceEnergies {
    double chandrasekhar_uncorrelated = -0.51330;
    double chandrasekhar_correlated = -0.52592;
    double theoretical_line = -0.52952;
    double hydrogen_atom = -0.5;
    double hartree_fock_no_correlation = -0.375;
};

ReferenceEnergies reference_energies();

}  // namespace hvqe
