#include "doctest.h"

#include <cmath>

#include "hvqe/fermion.hpp"
#include "hvqe/hminus.hpp"
#include "hvqe/rng.hpp"
#include "support/fock_oracle.hpp"

using namespace hvqe;

namespace {

// Hermitian operator with random real coefficients on one- and two-body
// density-like terms plus symmetrized hopping pairs.
FermionOperator random_hermitian_operator(Rng& rng, int modes) {
    FermionOperator op(modes);
    for (int i = 0; i < modes; ++i) op.add_term(rng.uniform(-1.0, 1.0), {create(i), annihilate(i)});
    for (int i = 0; i < modes; ++i)
        for (int j = i + 1; j < modes; ++j) {
            const double hop = rng.uniform(-1.0, 1.0);
            op.add_term(hop, {create(i), annihilate(j)});
            op.add_term(hop, {create(j), annihilate(i)});
            op.add_term(rng.uniform(-1.0, 1.0),
                        {create(i), create(j), annihilate(j), annihilate(i)});
        }
    return op;
}

std::vector<double> oracle_eigenvalues(const oracle::Mat& m) {
    const std::size_t n = m.size();
    CMatrix cm(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) cm.at(r, c) = m[r][c];
    return hermitian_eigenvalues(cm);
}

std::string rows_of(const BinaryMatrix& m) {
    std::string out;
    for (int r = 0; r < m.size(); ++r) {
        for (int c = 0; c < m.size(); ++c) out += m.entry(r, c) ? '1' : '0';
        if (r + 1 < m.size()) out += ' ';
    }
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("fermion");

TEST_CASE("a0 a0^ normal-orders to 1 - a0^ a0") {
    FermionOperator op(1);
    op.add_term(1.0, {annihilate(0), create(0)});
    const FermionOperator no = normal_order(op);

    REQUIRE(no.terms().size() == 2);
    double scalar = 0.0, number = 0.0;
    for (const auto& t : no.terms()) {
        if (t.factors.empty()) scalar = t.coefficient.real();
        if (t.factors.size() == 2) {
            CHECK(t.factors[0] == create(0));
            CHECK(t.factors[1] == annihilate(0));
            number = t.coefficient.real();
        }
    }
    CHECK(scalar == doctest::Approx(1.0));
    CHECK(number == doctest::Approx(-1.0));
}

TEST_CASE("a0 a0 vanishes") {
    FermionOperator op(1);
    op.add_term(1.0, {annihilate(0), annihilate(0)});
    CHECK(normal_order(op).terms().empty());

    FermionOperator op2(2);
    op2.add_term(0.5, {create(1), create(1)});
    CHECK(normal_order(op2).terms().empty());
}

TEST_CASE("normal ordering preserves the Fock-space matrix") {
    FermionOperator op(2);
    op.add_term(1.0, {create(1), create(0), annihilate(0), annihilate(1)});
    const auto before = oracle::fock_matrix(op);
    const auto after = oracle::fock_matrix(normal_order(op));
    CHECK(oracle::max_abs_diff(before, after) < 1e-12);
}

TEST_CASE("normal ordering of random operators preserves the Fock-space matrix") {
    Rng rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        const int modes = 2 + static_cast<int>(rng.uniform(0.0, 3.0));
        FermionOperator op(modes);
        for (int t = 0; t < 5; ++t) {
            std::vector<FermionFactor> factors;
            const int len = static_cast<int>(rng.uniform(0.0, 5.0));
            for (int k = 0; k < len; ++k) {
                const int mode = static_cast<int>(rng.uniform(0.0, static_cast<double>(modes)));
                factors.push_back(rng.sign() > 0 ? create(mode) : annihilate(mode));
            }
            op.add_term(cdouble{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}, factors);
        }
        const auto before = oracle::fock_matrix(op);
        const auto after = oracle::fock_matrix(normal_order(op));
        CHECK(oracle::max_abs_diff(before, after) < 1e-12);
    }
}

TEST_CASE("normal ordering is idempotent") {
    Rng rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        FermionOperator op = random_hermitian_operator(rng, 3);
        op.add_term(cdouble{0.3, -0.2}, {annihilate(0), create(2), annihilate(1)});
        const FermionOperator once = normal_order(op);
        const FermionOperator twice = normal_order(once);
        CHECK(to_text(once) == to_text(twice));
    }
}

TEST_CASE("mode index out of range is rejected") {
    FermionOperator op(2);
    CHECK_THROWS_AS(op.add_term(1.0, {create(2)}), std::out_of_range);
}

TEST_CASE("Jordan-Wigner of the number operator is (I - Z)/2") {
    FermionOperator op(1);
    op.add_term(1.0, {create(0), annihilate(0)});
    const PauliSum h = jordan_wigner(op);
    CHECK(h.coefficient("I") == doctest::Approx(0.5));
    CHECK(h.coefficient("Z") == doctest::Approx(-0.5));
    CHECK(h.size() == 2);
}

TEST_CASE("Jordan-Wigner image equals the Fock-space matrix, random operators up to 4 modes") {
    Rng rng(59);
    for (int trial = 0; trial < 15; ++trial) {
        const int modes = 1 + static_cast<int>(rng.uniform(0.0, 4.0));
        const FermionOperator op = random_hermitian_operator(rng, modes);
        const PauliSum image = jordan_wigner(op);
        CHECK(oracle::max_abs_diff(oracle::pauli_sum_matrix(image), oracle::fock_matrix(op)) <
              1e-12);
    }
}

TEST_CASE("anticommutator {a0, a1^} maps to the zero Pauli sum") {
    FermionOperator op(2);
    op.add_term(1.0, {annihilate(0), create(1)});
    op.add_term(1.0, {create(1), annihilate(0)});
    CHECK(jordan_wigner(op).size() == 0);
    const auto zero = oracle::fock_matrix(op);
    CHECK(oracle::max_abs_diff(zero, oracle::zeros(4, 4)) < 1e-15);
}

TEST_CASE("the two-orbital Hamiltonian maps to the published Pauli coefficients") {
    // Physical signs: II -0.421875, Z0 and Z1 +0.171875, Z0.Z1 +0.078125.
    const auto physical = IntegralSet::from_convention(SignConvention::physical);
    const PauliSum h = jordan_wigner(fermionic_hamiltonian(physical, TwoBodySign::eq16_plus));
    CHECK(h.coefficient("II") == doctest::Approx(-0.421875).epsilon(1e-14));
    CHECK(h.coefficient("ZI") == doctest::Approx(0.171875).epsilon(1e-14));
    CHECK(h.coefficient("IZ") == doctest::Approx(0.171875).epsilon(1e-14));
    CHECK(h.coefficient("ZZ") == doctest::Approx(0.078125).epsilon(1e-14));

    // Literal signs flip the constant and the Z coefficients.
    const auto literal = IntegralSet::from_convention(SignConvention::paper_literal);
    const PauliSum hl = jordan_wigner(fermionic_hamiltonian(literal, TwoBodySign::eq16_plus));
    CHECK(hl.coefficient("II") == doctest::Approx(0.578125).epsilon(1e-14));
    CHECK(hl.coefficient("ZI") == doctest::Approx(-0.328125).epsilon(1e-14));
    CHECK(hl.coefficient("IZ") == doctest::Approx(-0.328125).epsilon(1e-14));
    CHECK(hl.coefficient("ZZ") == doctest::Approx(0.078125).epsilon(1e-14));
}

TEST_CASE("encoding matrices match the published forms") {
    const EncodingMatrix parity4 = build_encoding_matrix(EncodingKind::parity, 4);
    CHECK(rows_of(parity4.matrix()) == "1000 1100 1110 1111");

    const EncodingMatrix bk4 = build_encoding_matrix(EncodingKind::bravyi_kitaev, 4);
    CHECK(rows_of(bk4.matrix()) == "1000 1100 0010 1111");

    const EncodingMatrix bk1 = build_encoding_matrix(EncodingKind::bravyi_kitaev, 1);
    CHECK(rows_of(bk1.matrix()) == "1");

    CHECK_THROWS_AS(build_encoding_matrix(EncodingKind::parity, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_encoding_matrix(EncodingKind::parity, 9), std::invalid_argument);
}

TEST_CASE("encoding matrices are invertible over GF(2) for all supported sizes") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto kind : {EncodingKind::parity, EncodingKind::bravyi_kitaev}) {
            const BinaryMatrix m = build_encoding_matrix(kind, n).matrix();
            const BinaryMatrix inv = m.inverse();
            // m * inv = I over GF(2)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    int acc = 0;
                    for (int k = 0; k < n; ++k) acc ^= (m.entry(r, k) && inv.entry(k, c)) ? 1 : 0;
                    CHECK(acc == (r == c ? 1 : 0));
                }
        }
    }
}

TEST_CASE("one-mode operators coincide under all three encodings") {
    FermionOperator op(1);
    op.add_term(0.7, {create(0), annihilate(0)});
    op.add_term(0.1, {});
    const PauliSum jw = jordan_wigner(op);
    const PauliSum parity = encoded_transform(op, build_encoding_matrix(EncodingKind::parity, 1));
    const PauliSum bk = encoded_transform(op, build_encoding_matrix(EncodingKind::bravyi_kitaev, 1));
    CHECK(to_text(jw) == to_text(parity));
    CHECK(to_text(jw) == to_text(bk));
}

TEST_CASE("Bravyi-Kitaev image of the two-orbital Hamiltonian matches the published structure") {
    // 1/2 h00 (1 - Z0) + 1/2 h11 (1 - Z1.Z0) + 1/8 g (1 - Z0 + Z1 - Z0.Z1)
    const auto literal = IntegralSet::from_convention(SignConvention::paper_literal);
    const FermionOperator op = fermionic_hamiltonian(literal, TwoBodySign::eq16_plus);
    const PauliSum h = encoded_transform(op, build_encoding_matrix(EncodingKind::bravyi_kitaev, 2));
    CHECK(h.coefficient("II") == doctest::Approx(0.578125).epsilon(1e-14));
    CHECK(h.coefficient("ZI") == doctest::Approx(-0.328125).epsilon(1e-14));
    CHECK(h.coefficient("IZ") == doctest::Approx(0.078125).epsilon(1e-14));
    CHECK(h.coefficient("ZZ") == doctest::Approx(-0.328125).epsilon(1e-14));
}

TEST_CASE("dimension mismatch is rejected") {
    FermionOperator op(3);
    op.add_term(1.0, {create(0), annihilate(0)});
    CHECK_THROWS_AS(encoded_transform(op, build_encoding_matrix(EncodingKind::parity, 2)),
                    std::invalid_argument);
}

TEST_CASE("eigenvalue multisets agree across encodings for random hermitian operators") {
    Rng rng(83);
    for (int trial = 0; trial < 10; ++trial) {
        const int modes = 2 + static_cast<int>(rng.uniform(0.0, 2.0));  // 2 or 3
        const FermionOperator op = random_hermitian_operator(rng, modes);
        const auto jw = eigenvalues(jordan_wigner(op));
        const auto parity =
            eigenvalues(encoded_transform(op, build_encoding_matrix(EncodingKind::parity, modes)));
        const auto bk = eigenvalues(
            encoded_transform(op, build_encoding_matrix(EncodingKind::bravyi_kitaev, modes)));
        REQUIRE(jw.size() == parity.size());
        REQUIRE(jw.size() == bk.size());
        for (std::size_t k = 0; k < jw.size(); ++k) {
            CHECK(jw[k] == doctest::Approx(parity[k]).epsilon(1e-10));
            CHECK(jw[k] == doctest::Approx(bk[k]).epsilon(1e-10));
        }
        // Cross-check one image against the Fock oracle spectrum.
        const auto fock = oracle_eigenvalues(oracle::fock_matrix(op));
        for (std::size_t k = 0; k < jw.size(); ++k)
            CHECK(jw[k] == doctest::Approx(fock[k]).epsilon(1e-10));
    }
}

TEST_CASE("encoded ladder operators obey the anticommutation relations") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<BinaryMatrix> encodings = {BinaryMatrix::identity(n),
                                               build_encoding_matrix(EncodingKind::parity, n).matrix(),
                                               build_encoding_matrix(EncodingKind::bravyi_kitaev, n).matrix()};
        for (const auto& enc : encodings) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    const PauliAccumulator ai = encode_mode_operator(enc, i, FactorKind::Annihilate);
                    const PauliAccumulator aj_dag = encode_mode_operator(enc, j, FactorKind::Create);
                    PauliAccumulator anti = multiply(ai, aj_dag);
                    anti.add(multiply(aj_dag, ai));
                    CMatrix expected(std::size_t{1} << n, std::size_t{1} << n);
                    if (i == j) expected = CMatrix::identity(std::size_t{1} << n);
                    CHECK(anti.to_matrix().max_abs_diff(expected) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("encoded images match the Fock matrix through the occupation correspondence") {
    // Under encoding M the qubit basis state for occupation f is b = M f; the
    // encoded image must equal P^T F P where F is the Fock matrix and P the
    // basis permutation |f> -> |Mf>.
    Rng rng(97);
    for (const auto kind : {EncodingKind::parity, EncodingKind::bravyi_kitaev}) {
        for (int modes = 2; modes <= 3; ++modes) {
            const FermionOperator op = random_hermitian_operator(rng, modes);
            const BinaryMatrix m = build_encoding_matrix(kind, modes).matrix();
            const auto fock = oracle::fock_matrix(op);
            const std::size_t dim = std::size_t{1} << modes;

            // permutation: occupation index f (mode 0 = MSB) -> qubit index b
            const auto map_index = [&](std::size_t f_idx) {
                std::size_t b_idx = 0;
                for (int r = 0; r < modes; ++r) {
                    int bit = 0;
                    for (int c = 0; c < modes; ++c)
                        if (m.entry(r, c)) bit ^= static_cast<int>(f_idx >> (modes - 1 - c)) & 1;
                    b_idx |= static_cast<std::size_t>(bit) << (modes - 1 - r);
                }
                return b_idx;
            };

            oracle::Mat permuted = oracle::zeros(dim, dim);
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = 0; c < dim; ++c) permuted[map_index(r)][map_index(c)] = fock[r][c];

            const PauliSum image =
                encoded_transform(op, build_encoding_matrix(kind, modes));
            CHECK(oracle::max_abs_diff(oracle::pauli_sum_matrix(image), permuted) < 1e-12);
        }
    }
}

TEST_CASE("six-mode encoders stay isospectral") {
    Rng rng(131);
    const FermionOperator op = random_hermitian_operator(rng, 6);
    const auto jw = eigenvalues(jordan_wigner(op));
    const auto bk =
        eigenvalues(encoded_transform(op, build_encoding_matrix(EncodingKind::bravyi_kitaev, 6)));
    const auto parity =
        eigenvalues(encoded_transform(op, build_encoding_matrix(EncodingKind::parity, 6)));
    REQUIRE(jw.size() == 64);
    for (std::size_t k = 0; k < jw.size(); ++k) {
        CHECK(jw[k] == doctest::Approx(bk[k]).epsilon(1e-9));
        CHECK(jw[k] == doctest::Approx(parity[k]).epsilon(1e-9));
    }
}

TEST_CASE("fermion text format") {
    FermionOperator op(2);
    op.add_term(0.5, {create(0), create(1), annihilate(1), annihilate(0)});
    op.add_term(-0.25, {});
    CHECK(to_text(op) == "0.5 0^ 1^ 1 0\n-0.25\n");
}

TEST_SUITE_END();
