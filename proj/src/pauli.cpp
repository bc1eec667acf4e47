#include "hvqe/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace hvqe {

namespace {

const cdouble kI{0.0, 1.0};

bool valid_ops(std::string_view ops) {
    return std::all_of(ops.begin(), ops.end(),
                       [](char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; });
}

int letter_index(char c) {
    switch (c) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Y': return 2;
        case 'Z': return 3;
    }
    throw std::invalid_argument("Pauli letter must be one of I, X, Y, Z");
}

char letter_of(int idx) { return "IXYZ"[idx]; }

// Single-qubit product a*b = i^k * c. The label of c is the XOR of the labels
// in the {I,X,Y,Z} = {0,1,2,3} numbering; k is +1 for cyclic pairs XY, YZ, ZX
// and -1 (i.e. 3) for the reversed pairs.
void single_product(char a, char b, char& out, int& phase_power) {
    const int ia = letter_index(a);
    const int ib = letter_index(b);
    out = letter_of(ia ^ ib);
    if (ia == 0 || ib == 0 || ia == ib) {
        phase_power = 0;
        return;
    }
    const bool cyclic = (ib - ia + 3) % 3 == 1;  // XY, YZ, ZX
    phase_power = cyclic ? 1 : 3;
}

CMatrix single_matrix(char c) {
    CMatrix m(2, 2);
    switch (c) {
        case 'I':
            m.at(0, 0) = 1.0;
            m.at(1, 1) = 1.0;
            return m;
        case 'X':
            m.at(0, 1) = 1.0;
            m.at(1, 0) = 1.0;
            return m;
        case 'Y':
            m.at(0, 1) = -kI;
            m.at(1, 0) = kI;
            return m;
        case 'Z':
            m.at(0, 0) = 1.0;
            m.at(1, 1) = -1.0;
            return m;
    }
    throw std::invalid_argument("Pauli letter must be one of I, X, Y, Z");
}

CMatrix ops_matrix(std::string_view ops) {
    CMatrix m = single_matrix(ops[0]);
    for (std::size_t q = 1; q < ops.size(); ++q) m = kron(m, single_matrix(ops[q]));
    return m;
}

void check_width_limit(int width) {
    if (width > kMaxQubits) throw std::invalid_argument("register too wide (limit 8 qubits)");
}

// Canonical term order: identity first, then by non-identity letter count,
// then lexicographic.
bool term_order(const PauliSumTerm& a, const PauliSumTerm& b) {
    const auto weight = [](const std::string& s) {
        return std::count_if(s.begin(), s.end(), [](char c) { return c != 'I'; });
    };
    const auto wa = weight(a.ops);
    const auto wb = weight(b.ops);
    if (wa != wb) return wa < wb;
    return a.ops < b.ops;
}

}  // namespace

PauliTerm::PauliTerm(std::string ops, int phase_power)
    : ops_(std::move(ops)), phase_power_(((phase_power % 4) + 4) % 4) {
    if (ops_.empty()) throw std::invalid_argument("Pauli term needs at least one qubit");
    if (!valid_ops(ops_)) throw std::invalid_argument("Pauli letters must be one of I, X, Y, Z");
}

PauliTerm PauliTerm::identity(int width) {
    return PauliTerm(std::string(static_cast<std::size_t>(width), 'I'));
}

cdouble PauliTerm::phase() const {
    switch (phase_power_) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

CMatrix PauliTerm::to_matrix() const {
    check_width_limit(width());
    CMatrix m = ops_matrix(ops_);
    m *= phase();
    return m;
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
    if (a.width() != b.width())
        throw std::invalid_argument("Pauli term widths do not match");
    std::string out(a.ops().size(), 'I');
    int k = a.phase_power() + b.phase_power();
    for (std::size_t q = 0; q < out.size(); ++q) {
        int kq = 0;
        single_product(a.ops()[q], b.ops()[q], out[q], kq);
        k += kq;
    }
    return PauliTerm(std::move(out), k);
}

StateVector apply_pauli(const PauliTerm& term, const StateVector& state) {
    if (term.width() != state.n_qubits())
        throw std::invalid_argument("Pauli term width does not match state");
    const int n = state.n_qubits();
    const auto amps = state.amplitudes();

    std::size_t flip_mask = 0;
    for (int q = 0; q < n; ++q) {
        const char c = term.op(q);
        if (c == 'X' || c == 'Y') flip_mask |= std::size_t{1} << (n - 1 - q);
    }

    std::vector<cdouble> out(amps.size());
    for (std::size_t src = 0; src < amps.size(); ++src) {
        cdouble factor = term.phase();
        for (int q = 0; q < n; ++q) {
            const bool bit = src >> (n - 1 - q) & 1u;
            switch (term.op(q)) {
                case 'Y': factor *= bit ? -kI : kI; break;
                case 'Z': factor *= bit ? -1.0 : 1.0; break;
                default: break;
            }
        }
        out[src ^ flip_mask] = factor * amps[src];
    }
    return StateVector::from_amplitudes(n, std::move(out));
}

PauliSum::PauliSum(int width) : width_(width) {
    if (width < 1) throw std::invalid_argument("Pauli sum needs positive width");
}

PauliSum::PauliSum(int width, std::vector<PauliSumTerm> terms) : PauliSum(width) {
    PauliAccumulator acc(width);
    for (const auto& t : terms) acc.add(t.coefficient, t.ops);
    *this = acc.to_hermitian_sum();
}

PauliSum::PauliSum(canonical_tag, int width, std::vector<PauliSumTerm> terms)
    : width_(width), terms_(std::move(terms)) {}

double PauliSum::coefficient(std::string_view ops) const {
    for (const auto& t : terms_)
        if (t.ops == ops) return t.coefficient;
    return 0.0;
}

bool PauliSum::is_diagonal() const {
    for (const auto& t : terms_)
        for (char c : t.ops)
            if (c == 'X' || c == 'Y') return false;
    return true;
}

void PauliAccumulator::add(cdouble coefficient, const PauliTerm& term) {
    if (term.width() != width_)
        throw std::invalid_argument("Pauli term width does not match accumulator");
    terms_[term.ops()] += coefficient * term.phase();
}

void PauliAccumulator::add(cdouble coefficient, std::string_view ops) {
    if (static_cast<int>(ops.size()) != width_)
        throw std::invalid_argument("ops pattern width does not match accumulator");
    if (!valid_ops(ops)) throw std::invalid_argument("Pauli letters must be one of I, X, Y, Z");
    terms_[std::string(ops)] += coefficient;
}

void PauliAccumulator::add(const PauliAccumulator& other) {
    if (other.width_ != width_) throw std::invalid_argument("accumulator widths do not match");
    for (const auto& [ops, c] : other.terms_) terms_[ops] += c;
}

void PauliAccumulator::scale(cdouble factor) {
    for (auto& [ops, c] : terms_) c *= factor;
}

PauliAccumulator multiply(const PauliAccumulator& a, const PauliAccumulator& b) {
    if (a.width_ != b.width_) throw std::invalid_argument("accumulator widths do not match");
    PauliAccumulator out(a.width_);
    for (const auto& [ops_a, ca] : a.terms_) {
        if (ca == cdouble{}) continue;
        const PauliTerm ta(ops_a);
        for (const auto& [ops_b, cb] : b.terms_) {
            if (cb == cdouble{}) continue;
            const PauliTerm product = multiply(ta, PauliTerm(ops_b));
            out.terms_[product.ops()] += ca * cb * product.phase();
        }
    }
    return out;
}

PauliSum PauliAccumulator::to_hermitian_sum(double tol) const {
    std::vector<PauliSumTerm> out;
    for (const auto& [ops, c] : terms_) {
        if (std::abs(c.imag()) > tol)
            throw std::invalid_argument("Pauli sum has non-hermitian residue on pattern " + ops);
        if (std::abs(c.real()) < 1e-14) continue;
        out.push_back({c.real(), ops});
    }
    std::sort(out.begin(), out.end(), term_order);
    return PauliSum(PauliSum::canonical_tag{}, width_, std::move(out));
}

CMatrix PauliAccumulator::to_matrix() const {
    check_width_limit(width_);
    CMatrix m(std::size_t{1} << width_, std::size_t{1} << width_);
    for (const auto& [ops, c] : terms_) {
        if (c == cdouble{}) continue;
        CMatrix t = ops_matrix(ops);
        t *= c;
        m += t;
    }
    return m;
}

CMatrix to_matrix(const PauliSum& h) {
    check_width_limit(h.width());
    CMatrix m(std::size_t{1} << h.width(), std::size_t{1} << h.width());
    for (const auto& t : h.terms()) {
        CMatrix tm = ops_matrix(t.ops);
        tm *= t.coefficient;
        m += tm;
    }
    return m;
}

double exact_expectation(const StateVector& state, const PauliSum& h) {
    if (h.width() != state.n_qubits())
        throw std::invalid_argument("Pauli sum width does not match state");
    cdouble acc = 0.0;
    for (const auto& t : h.terms()) {
        const StateVector transformed = apply_pauli(PauliTerm(t.ops), state);
        acc += t.coefficient * state.inner_product(transformed);
    }
    if (std::abs(acc.imag()) > 1e-10)
        throw std::runtime_error("expectation value has imaginary residue");
    return acc.real();
}

std::vector<double> eigenvalues(const PauliSum& h) {
    check_width_limit(h.width());
    return hermitian_eigenvalues(to_matrix(h));
}

double min_eigenvalue(const PauliSum& h) { return eigenvalues(h).front(); }

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string to_text(const PauliSum& h) {
    std::string out;
    for (const auto& t : h.terms()) {
        out += format_double(t.coefficient);
        out += ' ';
        out += t.ops;
        out += '\n';
    }
    return out;
}

}  // namespace hvqe
