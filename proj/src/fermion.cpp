#include "hvqe/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>

namespace hvqe {

namespace {

void check_mode_count(int n) {
    if (n < 1 || n > kMaxQubits)
        throw std::invalid_argument("mode count must be between 1 and 8");
}

bool is_create(const FermionFactor& f) { return f.kind == FactorKind::Create; }

// Canonical factor order: creations first ascending by mode, then
// annihilations descending by mode. Equal-mode pairs of one kind count as
// disorder so the rewriting loop can annihilate the term.
bool ordered(const FermionFactor& a, const FermionFactor& b) {
    if (is_create(a) && !is_create(b)) return true;
    if (!is_create(a) && is_create(b)) return false;
    if (is_create(a)) return a.mode < b.mode;
    return a.mode > b.mode;
}

std::string factor_key(const std::vector<FermionFactor>& factors) {
    std::string key;
    for (const auto& f : factors) {
        key += static_cast<char>('0' + f.mode);
        key += is_create(f) ? '^' : '.';
    }
    return key;
}

}  // namespace

FermionOperator::FermionOperator(int mode_count) : mode_count_(mode_count) {
    check_mode_count(mode_count);
}

void FermionOperator::add_term(cdouble coefficient, std::vector<FermionFactor> factors) {
    for (const auto& f : factors)
        if (f.mode < 0 || f.mode >= mode_count_)
            throw std::out_of_range("fermionic mode index out of range");
    terms_.push_back({coefficient, std::move(factors)});
}

void FermionOperator::add(const FermionOperator& other) {
    if (other.mode_count_ != mode_count_)
        throw std::invalid_argument("fermion operator mode counts do not match");
    for (const auto& t : other.terms_) terms_.push_back(t);
}

FermionOperator normal_order(const FermionOperator& op) {
    std::deque<FermionTerm> work(op.terms().begin(), op.terms().end());
    std::map<std::string, FermionTerm> result;

    while (!work.empty()) {
        FermionTerm term = std::move(work.front());
        work.pop_front();

        bool rewritten = false;
        auto& f = term.factors;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            if (ordered(f[i], f[i + 1])) continue;
            if (f[i].mode == f[i + 1].mode && f[i].kind == f[i + 1].kind) {
                // a a or a^ a^ on one mode: the term vanishes.
                rewritten = true;
                break;
            }
            if (!is_create(f[i]) && is_create(f[i + 1]) && f[i].mode == f[i + 1].mode) {
                // a_i a_i^ = 1 - a_i^ a_i
                FermionTerm contracted{term.coefficient, {}};
                contracted.factors.reserve(f.size() - 2);
                contracted.factors.insert(contracted.factors.end(), f.begin(),
                                          f.begin() + static_cast<long>(i));
                contracted.factors.insert(contracted.factors.end(),
                                          f.begin() + static_cast<long>(i) + 2, f.end());
                work.push_back(std::move(contracted));
            }
            FermionTerm swapped = term;
            swapped.coefficient = -swapped.coefficient;
            std::swap(swapped.factors[i], swapped.factors[i + 1]);
            work.push_back(std::move(swapped));
            rewritten = true;
            break;
        }
        if (rewritten) continue;

        // Repeated equal factors survive adjacency checks only if identical
        // neighbors; ordered() already forced them adjacent, handled above.
        FermionTerm& slot = result[factor_key(term.factors)];
        if (slot.factors.empty() && slot.coefficient == cdouble{}) slot.factors = term.factors;
        slot.coefficient += term.coefficient;
    }

    FermionOperator out(op.mode_count());
    for (auto& [key, term] : result) {
        if (std::abs(term.coefficient) < 1e-14) continue;
        out.add_term(term.coefficient, std::move(term.factors));
    }
    return out;
}

std::string to_text(const FermionOperator& op) {
    std::string out;
    for (const auto& t : op.terms()) {
        out += format_double(t.coefficient.real());
        if (t.coefficient.imag() != 0.0) {
            out += t.coefficient.imag() > 0 ? '+' : '-';
            out += format_double(std::abs(t.coefficient.imag()));
            out += 'i';
        }
        for (const auto& f : t.factors) {
            out += ' ';
            out += std::to_string(f.mode);
            if (is_create(f)) out += '^';
        }
        out += '\n';
    }
    return out;
}

BinaryMatrix::BinaryMatrix(int n, std::vector<std::uint32_t> rows)
    : n_(n), rows_(std::move(rows)) {
    check_mode_count(n);
    if (rows_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("binary matrix row count does not match size");
    const std::uint32_t mask = (1u << n) - 1u;
    for (auto& r : rows_)
        if (r & ~mask) throw std::invalid_argument("binary matrix row has bits beyond size");
}

BinaryMatrix BinaryMatrix::identity(int n) {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = 1u << i;
    return BinaryMatrix(n, std::move(rows));
}

BinaryMatrix BinaryMatrix::inverse() const {
    std::vector<std::uint32_t> a = rows_;
    std::vector<std::uint32_t> inv(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) inv[static_cast<std::size_t>(i)] = 1u << i;

    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (a[static_cast<std::size_t>(r)] >> col & 1u) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("encoding matrix is singular over GF(2)");
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
        std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(col)]);
        for (int r = 0; r < n_; ++r) {
            if (r == col) continue;
            if (a[static_cast<std::size_t>(r)] >> col & 1u) {
                a[static_cast<std::size_t>(r)] ^= a[static_cast<std::size_t>(col)];
                inv[static_cast<std::size_t>(r)] ^= inv[static_cast<std::size_t>(col)];
            }
        }
    }
    return BinaryMatrix(n_, std::move(inv));
}

namespace {

BinaryMatrix parity_matrix(int n) {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = (1u << (i + 1)) - 1u;
    return BinaryMatrix(n, std::move(rows));
}

// Recursive doubling: B_2m = [[B_m, 0], [C, B_m]] with C all ones in its last
// row; the n x n matrix is the top-left block of the next power of two.
BinaryMatrix bravyi_kitaev_matrix(int n) {
    int full = 1;
    while (full < n) full *= 2;

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(full), 0);
    rows[0] = 1u;
    for (int m = 1; m < full; m *= 2) {
        for (int r = 0; r < m; ++r)
            rows[static_cast<std::size_t>(m + r)] = rows[static_cast<std::size_t>(r)] << m;
        rows[static_cast<std::size_t>(2 * m - 1)] |= (1ULL << m) - 1u;
    }

    std::vector<std::uint32_t> out(static_cast<std::size_t>(n));
    const std::uint32_t mask = (1u << n) - 1u;
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rows[static_cast<std::size_t>(i)]) & mask;
    return BinaryMatrix(n, std::move(out));
}

}  // namespace

EncodingMatrix::EncodingMatrix(EncodingKind kind, BinaryMatrix matrix)
    : kind_(kind), matrix_(std::move(matrix)) {
    matrix_.inverse();  // must be invertible
    if (kind_ == EncodingKind::parity && matrix_ != parity_matrix(matrix_.size()))
        throw std::invalid_argument("parity encoding matrix must be the all-ones lower triangle");
    if (kind_ == EncodingKind::bravyi_kitaev && matrix_.size() == 4) {
        const BinaryMatrix expected(4, {0b0001, 0b0011, 0b0100, 0b1111});
        if (matrix_ != expected)
            throw std::invalid_argument("Bravyi-Kitaev matrix for n=4 has a fixed form");
    }
}

EncodingMatrix build_encoding_matrix(EncodingKind kind, int n) {
    check_mode_count(n);
    if (kind == EncodingKind::parity) return EncodingMatrix(kind, parity_matrix(n));
    return EncodingMatrix(kind, bravyi_kitaev_matrix(n));
}

PauliAccumulator encode_mode_operator(const BinaryMatrix& encoding, int mode, FactorKind kind) {
    const int n = encoding.size();
    if (mode < 0 || mode >= n) throw std::out_of_range("fermionic mode index out of range");
    const BinaryMatrix inv = encoding.inverse();

    // Update set: qubits storing a sum that includes this occupation (column
    // `mode`, diagonal excluded). Flip set: qubits whose values recover the
    // occupation (row `mode` of the inverse). Parity set: qubits whose values
    // recover the parity of occupations below `mode` (XOR of inverse rows
    // 0..mode-1).
    std::uint32_t update = 0;
    for (int r = 0; r < n; ++r)
        if (r != mode && encoding.entry(r, mode)) update |= 1u << r;

    const std::uint32_t flip = inv.row(mode);
    std::uint32_t parity = 0;
    for (int r = 0; r < mode; ++r) parity ^= inv.row(r);

    const auto string_term = [n](std::uint32_t x_mask, std::uint32_t y_mask,
                                 std::uint32_t z_mask) {
        PauliTerm term = PauliTerm::identity(n);
        const auto apply_letter = [&](char letter, std::uint32_t qubit_mask) {
            for (int q = 0; q < n; ++q) {
                if (!(qubit_mask >> q & 1u)) continue;
                std::string ops(static_cast<std::size_t>(n), 'I');
                ops[static_cast<std::size_t>(q)] = letter;
                term = multiply(term, PauliTerm(std::move(ops)));
            }
        };
        // X factors act left of Z factors: occupation updates happen after the
        // parity phase is read off.
        apply_letter('X', x_mask);
        apply_letter('Y', y_mask);
        apply_letter('Z', z_mask);
        return term;
    };

    const std::uint32_t mode_bit = 1u << mode;
    // a^ = X_update X_mode Z_parity (1 + Z_flip) / 2; multiplying through,
    // the mode qubit carries X in one summand and X.Z = -iY in the other.
    const PauliTerm plain = string_term(update | mode_bit, 0, parity);
    const PauliTerm flipped = string_term(update | mode_bit, 0, parity ^ flip);

    PauliAccumulator acc(n);
    if (kind == FactorKind::Create) {
        acc.add(0.5, plain);
        acc.add(0.5, flipped);
    } else {
        // adjoint: conjugate the phases
        acc.add(0.5, PauliTerm(plain.ops(), -plain.phase_power()));
        acc.add(0.5, PauliTerm(flipped.ops(), -flipped.phase_power()));
    }
    return acc;
}

namespace {

PauliSum encode(const FermionOperator& op, const BinaryMatrix& matrix) {
    const int n = op.mode_count();
    PauliAccumulator total(n);
    for (const auto& term : op.terms()) {
        PauliAccumulator product(n);
        product.add(term.coefficient, PauliTerm::identity(n));
        for (const auto& factor : term.factors)
            product = multiply(product, encode_mode_operator(matrix, factor.mode, factor.kind));
        total.add(product);
    }
    return total.to_hermitian_sum(1e-10);
}

}  // namespace

PauliSum jordan_wigner(const FermionOperator& op) {
    return encode(op, BinaryMatrix::identity(op.mode_count()));
}

PauliSum encoded_transform(const FermionOperator& op, const EncodingMatrix& encoding) {
    if (encoding.size() != op.mode_count())
        throw std::invalid_argument("encoding matrix dimension does not match mode count");
    return encode(op, encoding.matrix());
}

}  // namespace hvqe
