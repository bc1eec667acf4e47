#include "hvqe/hminus.hpp"

namespace hvqe {

IntegralSet IntegralSet::from_convention(SignConvention convention) {
    if (convention == SignConvention::paper_literal) return {0.5, 0.5, 0.625, convention};
    return {-0.5, -0.5, 0.625, convention};
}

PauliSum build_hamiltonian(const HamiltonianSpec& spec) {
    const double h00 = spec.integrals.h00;
    const double h11 = spec.integrals.h11;
    const double g = spec.integrals.h0110;

    std::vector<PauliSumTerm> terms;
    // Occupations map to (1 - Z)/2 of the encoded parity patterns. Under
    // Jordan-Wigner n1 reads qubit 1 directly; under parity or Bravyi-Kitaev
    // (identical at two modes) qubit 1 stores the total parity, so n1 reads
    // Z0.Z1 and the two-body correction lands on IZ instead of ZZ.
    const bool occupation_basis = spec.encoding == Encoding::jordan_wigner;
    const std::string n1_pattern = occupation_basis ? "IZ" : "ZZ";
    const std::string product_pattern = occupation_basis ? "ZZ" : "IZ";

    terms.push_back({0.5 * h00 + 0.5 * h11 + 0.125 * g, "II"});
    terms.push_back({-0.5 * h00 - 0.125 * g, "ZI"});
    terms.push_back({-0.5 * h11 - 0.125 * g, n1_pattern});
    terms.push_back({0.125 * g, product_pattern});
    if (spec.two_body_sign == TwoBodySign::eq18_minus)
        terms.push_back({-0.25 * g, product_pattern});

    return PauliSum(2, std::move(terms));
}

FermionOperator fermionic_hamiltonian(const IntegralSet& integrals, TwoBodySign two_body_sign) {
    const double g = integrals.h0110;
    FermionOperator op(2);
    op.add_term(integrals.h00, {create(0), annihilate(0)});
    op.add_term(integrals.h11, {create(1), annihilate(1)});
    // Two-body density-density term g/2 n0 n1, split symmetrically over the
    // two equivalent orderings.
    op.add_term(0.25 * g, {create(0), create(1), annihilate(1), annihilate(0)});
    op.add_term(0.25 * g, {create(1), create(0), annihilate(0), annihilate(1)});
    if (two_body_sign == TwoBodySign::eq18_minus) {
        // Flip the sign of the Z0.Z1 contribution: subtract
        // g/4 (1 - 2 n0)(1 - 2 n1) expanded in normal order.
        op.add_term(-0.25 * g, {});
        op.add_term(0.5 * g, {create(0), annihilate(0)});
        op.add_term(0.5 * g, {create(1), annihilate(1)});
        op.add_term(-0.5 * g, {create(0), create(1), annihilate(1), annihilate(0)});
        op.add_term(-0.5 * g, {create(1), create(0), annihilate(0), annihilate(1)});
    }
    return op;
}

double basis_state_energy(const IntegralSet& integrals, int n0, int n1) {
    return integrals.h00 * n0 + integrals.h11 * n1 + 0.5 * integrals.h0110 * n0 * n1;
}

ReferenceEnergies reference_energies() { return {}; }

}  // namespace hvqe
