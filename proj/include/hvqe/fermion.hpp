// Second-quantized operators on fermionic modes and their images as qubit
// operators. Three encodings are supported: Jordan-Wigner, parity, and
// Bravyi-Kitaev. All three run through one code path that derives update,
// parity, and flip sets from an invertible binary encoding matrix and its
// GF(2) inverse, with Jordan-Wigner as the identity-matrix case.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hvqe/pauli.hpp"

namespace hvqe {

enum class FactorKind : std::uint8_t { Create, Annihilate };

struct FermionFactor {
    int mode = 0;
    FactorKind kind = FactorKind::Create;

    friend bool operator==(const FermionFactor&, const FermionFactor&) = default;
};

inline FermionFactor create(int mode) { return {mode, FactorKind::Create}; }
inline FermionFactor annihilate(int mode) { return {mode, FactorKind::Annihilate}; }

// coefficient * product of creation/annihilation factors, applied right to
// left. An empty factor list is the scalar (identity) term.
struct FermionTerm {
    cdouble coefficient{0.0, 0.0};
    std::vector<FermionFactor> factors;
};

class FermionOperator {
public:
    explicit FermionOperator(int mode_count);

    int mode_count() const { return mode_count_; }
    const std::vector<FermionTerm>& terms() const { return terms_; }

    void add_term(cdouble coefficient, std::vector<FermionFactor> factors);
    void add(const FermionOperator& other);

private:
    int mode_count_;
    std::vector<FermionTerm> terms_;
};

// Rewrites every term to canonical form (creations left, ascending mode;
// annihilations right, descending mode) using {a_i, a_j^} = delta_ij and
// {a_i, a_j} = 0, then merges identical factor sequences. Terms with a
// repeated creation or annihilation on one mode vanish.
FermionOperator normal_order(const FermionOperator& op);

// One term per line: "<coeff> <factor>...", caret marking creation, e.g.
// "0.15625 0^ 1^ 1 0". A scalar term is a bare coefficient.
std::string to_text(const FermionOperator& op);

// Square matrix over GF(2), rows stored as bitmasks (bit j = entry (i, j)).
class BinaryMatrix {
public:
    static BinaryMatrix identity(int n);
    BinaryMatrix(int n, std::vector<std::uint32_t> rows);

    int size() const { return n_; }
    bool entry(int row, int col) const { return rows_[static_cast<std::size_t>(row)] >> col & 1u; }
    std::uint32_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    // Gauss-Jordan inverse; throws if singular.
    BinaryMatrix inverse() const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    int n_;
    std::vector<std::uint32_t> rows_;
};

enum class EncodingKind { parity, bravyi_kitaev };

// Qubit values b = M f for occupation vector f. parity(n) is the all-ones
// lower triangle; bravyi_kitaev(n) is the binary-tree construction (qubits
// with even index store occupations, odd index partial parities).
class EncodingMatrix {
public:
    EncodingMatrix(EncodingKind kind, BinaryMatrix matrix);

    EncodingKind kind() const { return kind_; }
    const BinaryMatrix& matrix() const { return matrix_; }
    int size() const { return matrix_.size(); }

private:
    EncodingKind kind_;
    BinaryMatrix matrix_;
};

EncodingMatrix build_encoding_matrix(EncodingKind kind, int n);

// Image of one mode operator under the encoding: a sum of two Pauli strings
// with coefficients +-1/2 and -+i/2.
PauliAccumulator encode_mode_operator(const BinaryMatrix& encoding, int mode, FactorKind kind);

PauliSum jordan_wigner(const FermionOperator& op);
PauliSum encoded_transform(const FermionOperator& op, const EncodingMatrix& encoding);

}  // namespace hvqe
