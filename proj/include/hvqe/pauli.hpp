// Algebra of Pauli strings and real-weighted Pauli sums. Phases live in the
// exact cyclic group {1, i, -1, -i}, stored as the exponent k of i^k, so long
// operator products never accumulate floating-point phase drift. The dense
// matrix realization doubles as the verification oracle for expectation
// values and eigenvalues.

#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hvqe/matrix.hpp"
#include "hvqe/statevector.hpp"

namespace hvqe {

// A tensor product of single-qubit Paulis, one letter of "IXYZ" per qubit
// (letter k acts on qubit k), times a unit phase i^k.
class PauliTerm {
public:
    explicit PauliTerm(std::string ops, int phase_power = 0);
    static PauliTerm identity(int width);

    int width() const { return static_cast<int>(ops_.size()); }
    const std::string& ops() const { return ops_; }
    char op(int qubit) const { return ops_[static_cast<std::size_t>(qubit)]; }

    int phase_power() const { return phase_power_; }
    cdouble phase() const;

    CMatrix to_matrix() const;

private:
    std::string ops_;
    int phase_power_;  // phase = i^phase_power_, in {0,1,2,3}
};

// Qubit-wise product with exact phase tracking.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

StateVector apply_pauli(const PauliTerm& term, const StateVector& state);

struct PauliSumTerm {
    double coefficient = 0.0;  // Hartree
    std::string ops;
};

// Canonical hermitian Pauli sum: every ops pattern appears at most once,
// coefficients are real, near-zero terms are dropped, terms are ordered by
// (number of non-identity letters, then lexicographically).
class PauliSum {
public:
    explicit PauliSum(int width);
    PauliSum(int width, std::vector<PauliSumTerm> terms);

    int width() const { return width_; }
    const std::vector<PauliSumTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    // Coefficient of an ops pattern, 0 if absent.
    double coefficient(std::string_view ops) const;

    bool is_diagonal() const;  // only I/Z letters

private:
    friend class PauliAccumulator;
    struct canonical_tag {};
    PauliSum(canonical_tag, int width, std::vector<PauliSumTerm> terms);

    int width_;
    std::vector<PauliSumTerm> terms_;
};

// Complex-weighted accumulator used while expanding operator products
// (encoders, anticommutators). Collapses to a canonical hermitian PauliSum at
// the end; imaginary residue above `tol` on any pattern is an error.
class PauliAccumulator {
public:
    explicit PauliAccumulator(int width) : width_(width) {}

    int width() const { return width_; }
    bool empty() const { return terms_.empty(); }

    void add(cdouble coefficient, const PauliTerm& term);
    void add(cdouble coefficient, std::string_view ops);
    void add(const PauliAccumulator& other);
    void scale(cdouble factor);

    PauliSum to_hermitian_sum(double tol = 1e-12) const;
    CMatrix to_matrix() const;

    friend PauliAccumulator multiply(const PauliAccumulator& a, const PauliAccumulator& b);

private:
    int width_;
    std::map<std::string, cdouble> terms_;
};

CMatrix to_matrix(const PauliSum& h);
double exact_expectation(const StateVector& state, const PauliSum& h);
std::vector<double> eigenvalues(const PauliSum& h);
double min_eigenvalue(const PauliSum& h);

// One term per line: "<coefficient> <letters>", e.g. "-0.328125 ZI".
std::string to_text(const PauliSum& h);

std::string format_double(double value);  // shortest round-trip decimal

}  // namespace hvqe
