#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hvqe/hminus.hpp"
#include "hvqe/rng.hpp"
#include "hvqe/vqe.hpp"
#include "support/fock_oracle.hpp"

using namespace hvqe;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> random_angles(Rng& rng, int count) {
    std::vector<double> a(static_cast<std::size_t>(count));
    for (double& v : a) v = rng.uniform(0.0, 2.0 * kPi);
    return a;
}

double oracle_expectation(const PauliSum& h, const StateVector& state) {
    const auto m = oracle::pauli_sum_matrix(h);
    const std::vector<oracle::C> amps(state.amplitudes().begin(), state.amplitudes().end());
    const auto m_psi = oracle::matvec(m, amps);
    oracle::C acc = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) acc += std::conj(amps[k]) * m_psi[k];
    return acc.real();
}

StateVector random_state(Rng& rng, int n) {
    std::vector<cdouble> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto& a : amps) {
        a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    return StateVector::from_amplitudes(n, std::move(amps));
}

}  // namespace

TEST_SUITE_BEGIN("vqe");

TEST_CASE("parameter counting") {
    CHECK(AnsatzConfig{2, 1}.parameter_count() == 12);
    CHECK(AnsatzConfig{2, 2}.parameter_count() == 18);
    CHECK(AnsatzConfig{3, 1}.parameter_count() == 18);

    const AnsatzConfig config{2, 1};
    CHECK_THROWS_AS(prepare_ansatz(config, std::vector<double>(11, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(prepare_ansatz(config, std::vector<double>(13, 0.0)), std::invalid_argument);
    CHECK_NOTHROW(prepare_ansatz(config, std::vector<double>(12, 0.0)));
}

TEST_CASE("all-zero angles prepare |00> exactly") {
    const StateVector s = prepare_ansatz({2, 1}, std::vector<double>(12, 0.0));
    CHECK(std::abs(s.amplitudes()[0] - cdouble{1.0, 0.0}) < 1e-15);
    for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(s.amplitudes()[k]) < 1e-15);
}

TEST_CASE("a (0, pi, 0) block flips the qubit, against the 2x2 product oracle") {
    // RZ(0) RX(pi) RZ(0) |0> = -i |1>: probability of "1" is 1.
    const oracle::C i{0.0, 1.0};
    const auto rz0 = oracle::eye(2);
    const oracle::Mat rx_pi = {{std::cos(kPi / 2), -i * std::sin(kPi / 2)},
                               {-i * std::sin(kPi / 2), std::cos(kPi / 2)}};
    const auto block = oracle::mul(rz0, oracle::mul(rx_pi, rz0));
    const auto out = oracle::matvec(block, {1.0, 0.0});
    CHECK(std::abs(out[0]) < 1e-15);
    CHECK(std::norm(out[1]) == doctest::Approx(1.0));

    // Same block inside the 1-qubit ansatz layout (depth 1: initial + final).
    const std::vector<double> angles = {0.0, kPi, 0.0, 0.0, 0.0, 0.0};
    const StateVector s = prepare_ansatz({1, 1}, angles);
    CHECK(exact_probability(s, "1") == doctest::Approx(1.0));
}

TEST_CASE("prepared states are normalized for random parameters") {
    Rng rng(3);
    const AnsatzConfig config{2, 1};
    for (int trial = 0; trial < 1000; ++trial) {
        const StateVector s = prepare_ansatz(config, random_angles(rng, 12));
        CHECK(std::abs(s.norm_sq() - 1.0) < 1e-12);
    }
}

TEST_CASE("deeper circuits and non-finite angles") {
    Rng rng(5);
    const StateVector s = prepare_ansatz({2, 3}, random_angles(rng, 24));
    CHECK(std::abs(s.norm_sq() - 1.0) < 1e-12);

    std::vector<double> bad(12, 0.0);
    bad[4] = std::nan("");
    CHECK_THROWS_AS(prepare_ansatz({2, 1}, bad), std::invalid_argument);
}

TEST_CASE("Z expectation formulas on concentrated histograms") {
    ShotHistogram h00;
    h00.counts["00"] = 8192;
    h00.shots = 8192;
    auto z = estimate_pauli_z_expectations(h00);
    CHECK(z.z0 == 1.0);
    CHECK(z.z1 == 1.0);
    CHECK(z.z0z1 == 1.0);

    ShotHistogram h11;
    h11.counts["11"] = 8192;
    h11.shots = 8192;
    z = estimate_pauli_z_expectations(h11);
    CHECK(z.z0 == -1.0);
    CHECK(z.z1 == -1.0);
    CHECK(z.z0z1 == 1.0);

    ShotHistogram bell;
    bell.counts["00"] = 4096;
    bell.counts["11"] = 4096;
    bell.shots = 8192;
    z = estimate_pauli_z_expectations(bell);
    CHECK(z.z0 == 0.0);
    CHECK(z.z1 == 0.0);
    CHECK(z.z0z1 == 1.0);
}

TEST_CASE("product rule z0.z1 = z0z1 on single-bitstring histograms") {
    for (const char* bits : {"00", "01", "10", "11"}) {
        ShotHistogram h;
        h.counts[bits] = 1024;
        h.shots = 1024;
        const auto z = estimate_pauli_z_expectations(h);
        CHECK(z.z0 * z.z1 == doctest::Approx(z.z0z1));
    }
}

TEST_CASE("sampled Bell state feeds the formulas: z0 and z1 near 0, z0z1 exactly 1") {
    StateVector bell(2);
    bell.apply(Gate::h(0));
    bell.apply(Gate::cnot(0, 1));
    const auto z = estimate_pauli_z_expectations(sample(bell, 8192, 21));
    CHECK(std::abs(z.z0) < 0.06);  // ~5 sigma at 8192 shots
    CHECK(std::abs(z.z1) < 0.06);
    CHECK(z.z0z1 == 1.0);  // only "00" and "11" ever occur
}

TEST_CASE("empty or mis-sized histograms are rejected") {
    ShotHistogram empty;
    CHECK_THROWS_AS(estimate_pauli_z_expectations(empty), std::invalid_argument);
    ShotHistogram wide;
    wide.counts["000"] = 10;
    wide.shots = 10;
    CHECK_THROWS_AS(estimate_pauli_z_expectations(wide), std::invalid_argument);
}

TEST_CASE("closed-form energies of the computational states") {
    const PauliSum h = build_hamiltonian({});  // physical, eq16
    auto e = energy_exact(h, StateVector::computational_basis(2, "11"));
    CHECK(e.energy == doctest::Approx(-0.6875).epsilon(1e-14));
    e = energy_exact(h, StateVector::computational_basis(2, "00"));
    CHECK(e.energy == doctest::Approx(0.0));
    e = energy_exact(h, StateVector::computational_basis(2, "01"));
    CHECK(e.energy == doctest::Approx(-0.5));
}

TEST_CASE("term expectations land in [-1, 1] and identity contributes exactly") {
    Rng rng(9);
    const PauliSum h = build_hamiltonian({});
    for (int trial = 0; trial < 50; ++trial) {
        const StateVector s = prepare_ansatz({2, 1}, random_angles(rng, 12));
        const EnergyEstimate est = energy_from_probabilities(h, s);
        for (const auto& [ops, value] : est.term_expectations) {
            CHECK(value >= -1.0 - 1e-12);
            CHECK(value <= 1.0 + 1e-12);
        }
        CHECK(est.term_expectations.at("II") == doctest::Approx(1.0));
    }
}

TEST_CASE("probability-formula energies equal the matrix oracle exactly") {
    Rng rng(13);
    const PauliSum h = build_hamiltonian({});
    for (int trial = 0; trial < 1000; ++trial) {
        const StateVector s = random_state(rng, 2);
        const double formula = energy_from_probabilities(h, s).energy;
        CHECK(std::abs(formula - oracle_expectation(h, s)) < 1e-12);
    }
}

TEST_CASE("shot-path energies approach the exact path") {
    Rng rng(17);
    const PauliSum h = build_hamiltonian({});
    const AnsatzConfig config{2, 1};

    // 8192 shots: within 0.02 Hartree across 100 random parameter vectors.
    for (int trial = 0; trial < 100; ++trial) {
        const auto angles = random_angles(rng, 12);
        const StateVector s = prepare_ansatz(config, angles);
        const double exact = energy_exact(h, s).energy;
        const double sampled =
            sampled_energy(h, config, angles, 8192, derive_seed(1000, static_cast<std::uint64_t>(trial)))
                .energy;
        CHECK(std::abs(sampled - exact) < 0.02);
    }

    // 1e6 shots: within 5e-3.
    for (int trial = 0; trial < 5; ++trial) {
        const auto angles = random_angles(rng, 12);
        const StateVector s = prepare_ansatz(config, angles);
        const double exact = energy_exact(h, s).energy;
        const double sampled =
            sampled_energy(h, config, angles, 1'000'000, derive_seed(2000, static_cast<std::uint64_t>(trial)))
                .energy;
        CHECK(std::abs(sampled - exact) < 5e-3);
    }
}

TEST_CASE("the shot path rejects non-diagonal Hamiltonians") {
    const PauliSum h(2, {{1.0, "XI"}});
    ShotHistogram hist;
    hist.counts["00"] = 100;
    hist.shots = 100;
    CHECK_THROWS_AS(energy_from_counts(h, hist), std::invalid_argument);
    CHECK_NOTHROW(energy_exact(h, StateVector(2)));
}

TEST_CASE("variational bound: no parameter vector beats the spectrum floor") {
    Rng rng(19);
    const PauliSum h = build_hamiltonian({});
    const double floor = min_eigenvalue(h);
    for (int trial = 0; trial < 500; ++trial) {
        const double e = energy_exact(h, prepare_ansatz({2, 1}, random_angles(rng, 12))).energy;
        CHECK(e >= floor - 1e-10);
    }
}

TEST_CASE("variance vanishes on eigenstates and is 1 for |+> under Z") {
    const PauliSum h = build_hamiltonian({});
    for (const char* bits : {"00", "01", "10", "11"})
        CHECK(std::abs(variance(h, StateVector::computational_basis(2, bits))) < 1e-10);

    StateVector plus(1);
    plus.apply(Gate::h(0));
    CHECK(variance(PauliSum(1, {{1.0, "Z"}}), plus) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(variance(h, StateVector(1)), std::invalid_argument);
}

TEST_CASE("variance is non-negative for random states") {
    Rng rng(23);
    const PauliSum h = build_hamiltonian({});
    for (int trial = 0; trial < 1000; ++trial)
        CHECK(variance(h, random_state(rng, 2)) >= -1e-10);
}

TEST_CASE("angle canonicalization wraps into [0, 2pi) and keeps probabilities") {
    const std::vector<double> raw = {-0.5, 7.0, 2.0 * kPi, 13.2, 0.0, -9.0,
                                     1.0,  2.0, 3.0,        4.0,  5.0, 6.0};
    const auto canonical = canonicalize_angles(raw);
    for (double a : canonical) {
        CHECK(a >= 0.0);
        CHECK(a < 2.0 * kPi);
    }
    const StateVector s1 = prepare_ansatz({2, 1}, raw);
    const StateVector s2 = prepare_ansatz({2, 1}, canonical);
    for (int k = 0; k < 4; ++k)
        CHECK(exact_probability(s1, bitstring_of(static_cast<std::size_t>(k), 2)) ==
              doctest::Approx(exact_probability(s2, bitstring_of(static_cast<std::size_t>(k), 2)))
                  .epsilon(1e-12));
}

TEST_SUITE_END();
