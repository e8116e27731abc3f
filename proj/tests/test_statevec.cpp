#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "switchsim/statevec.hpp"
#include "test_util.hpp"

using namespace switchsim;
using namespace switchsim::testutil;

TEST_CASE("H creates an equal superposition") {
    StateVector sv(1);
    sv.apply(GateKind::h(0));
    CHECK(std::abs(sv.amplitudes()[0] - M_SQRT1_2) < 1e-12);
    CHECK(std::abs(sv.amplitudes()[1] - M_SQRT1_2) < 1e-12);
}

TEST_CASE("CCZ phase definition") {
    StateVector sv(3);
    sv.apply(GateKind::x(1));
    sv.apply(GateKind::x(2));  // |110> with qubit0 least significant
    sv.apply(GateKind::ccz(0, 1, 2));
    CHECK(std::abs(sv.amplitudes()[0b110] - 1.0) < 1e-12);
    sv.apply(GateKind::x(0));  // |111>
    sv.apply(GateKind::ccz(0, 1, 2));
    CHECK(std::abs(sv.amplitudes()[0b111] + 1.0) < 1e-12);
}

TEST_CASE("T rotates the Bloch vector by 45 degrees") {
    StateVector sv(1);
    sv.apply(GateKind::h(0));
    sv.apply(GateKind::t(0));
    double x = sv.expectation(single_pauli(1, 0, 'X')).real();
    double y = sv.expectation(single_pauli(1, 0, 'Y')).real();
    double z = sv.expectation(single_pauli(1, 0, 'Z')).real();
    CHECK(std::abs(x - std::cos(M_PI / 4)) < 1e-12);
    CHECK(std::abs(y - std::sin(M_PI / 4)) < 1e-12);
    CHECK(std::abs(z) < 1e-12);
}

TEST_CASE("gate then inverse restores the state") {
    RandomStream rng(7, 7);
    auto pairs = std::vector<std::pair<GateKind, GateKind>>{
        {GateKind::h(0), GateKind::h(0)},
        {GateKind::s(1), GateKind::sdag(1)},
        {GateKind::t(2), GateKind::tdag(2)},
        {GateKind::rx(0.7, 0), GateKind::rx(-0.7, 0)},
        {GateKind::ry(1.1, 3), GateKind::ry(-1.1, 3)},
        {GateKind::cnot(0, 2), GateKind::cnot(0, 2)},
        {GateKind::cz(1, 3), GateKind::cz(1, 3)},
        {GateKind::ccz(0, 1, 2), GateKind::ccz(0, 1, 2)},
    };
    for (auto& [g, ginv] : pairs) {
        auto sv = random_state(4, rng);
        auto orig = sv;
        sv.apply(g);
        CHECK(std::abs(sv.norm_sq() - 1.0) < 1e-10);
        sv.apply(ginv);
        double err = 0;
        for (size_t i = 0; i < sv.amplitudes().size(); ++i) {
            err += std::abs(sv.amplitudes()[i] - orig.amplitudes()[i]);
        }
        CHECK(err < 1e-10);
    }
}

TEST_CASE("apply_pauli matches gate decomposition including phase") {
    RandomStream rng(21, 4);
    auto sv = random_state(3, rng);
    auto via_pauli = sv;
    via_pauli.apply_pauli(single_pauli(3, 1, 'Y'));
    auto via_gate = sv;
    via_gate.apply(GateKind::y(1));
    for (size_t i = 0; i < sv.amplitudes().size(); ++i) {
        CHECK(std::abs(via_pauli.amplitudes()[i] - via_gate.amplitudes()[i]) < 1e-12);
    }

    // Y = i X Z exactly
    auto via_xz = sv;
    via_xz.apply_pauli(single_pauli(3, 1, 'Z'));
    via_xz.apply_pauli(single_pauli(3, 1, 'X'));
    for (auto& amp : via_xz.amplitudes()) amp *= std::complex<double>(0, 1);
    for (size_t i = 0; i < sv.amplitudes().size(); ++i) {
        CHECK(std::abs(via_pauli.amplitudes()[i] - via_xz.amplitudes()[i]) < 1e-12);
    }
}

TEST_CASE("apply_pauli matches the dense oracle on random Paulis") {
    RandomStream rng(5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + rng.below(3);
        PauliString p(n);
        for (int q = 0; q < n; ++q) p.set(q, "IXYZ"[rng.below(4)]);
        p.mul_phase_exponent(rng.below(4));
        auto sv = random_state(n, rng);
        auto expect = dense_pauli(p);
        std::vector<std::complex<double>> ref(sv.amplitudes().size(), {0, 0});
        for (size_t r = 0; r < ref.size(); ++r) {
            for (size_t c = 0; c < ref.size(); ++c) ref[r] += expect[r][c] * sv.amplitudes()[c];
        }
        sv.apply_pauli(p);
        for (size_t i = 0; i < ref.size(); ++i) {
            CHECK(std::abs(sv.amplitudes()[i] - ref[i]) < 1e-11);
        }
    }
}

TEST_CASE("measurement follows the Born rule") {
    StateVector sv(1);
    int bit = 1;
    {
        RandomStream rng(3, 3);
        bit = sv.measure_z(0, rng);
    }
    CHECK(bit == 0);

    RandomStream rng(11, 0);
    int ones = 0;
    const int shots = 10000;
    for (int i = 0; i < shots; ++i) {
        StateVector bell(2);
        bell.apply(GateKind::h(0));
        bell.apply(GateKind::cnot(0, 1));
        int b0 = bell.measure_z(0, rng);
        int b1 = bell.measure_z(1, rng);
        CHECK(b0 == b1);
        ones += b0;
    }
    CHECK(std::abs(ones / double(shots) - 0.5) < 0.02);
}

TEST_CASE("branch forcing reproduces the sampled branch") {
    RandomStream rng(42, 0);
    auto sv = random_state(3, rng);
    auto forced = sv;
    RandomStream rng2(43, 0);
    int b = sv.measure_z(1, rng2);
    double p = forced.force_measure_z(1, b);
    CHECK(p > 0);
    CHECK(p < 1 + 1e-12);
    for (size_t i = 0; i < sv.amplitudes().size(); ++i) {
        CHECK(std::abs(sv.amplitudes()[i] - forced.amplitudes()[i]) < 1e-12);
    }

    // zero-probability branch rejected
    StateVector zero(1);
    CHECK_THROWS_AS((void)zero.force_measure_z(0, 1), std::runtime_error);

    // branch probabilities sum to one
    auto sv2 = random_state(2, rng);
    auto a = sv2, bq = sv2;
    double p0 = a.force_measure_z(0, 0);
    double p1 = bq.force_measure_z(0, 1);
    CHECK(std::abs(p0 + p1 - 1.0) < 1e-10);
}

TEST_CASE("reset returns measured qubits to zero and preserves the rest") {
    RandomStream rng(8, 8);
    StateVector sv(3);
    sv.apply(GateKind::h(0));
    sv.apply(GateKind::cnot(0, 1));
    sv.apply(GateKind::h(2));
    sv.measure_z(0, rng);
    std::vector<int> qs{0};
    sv.reset_to_zero(qs);
    CHECK(sv.prob_one(0) < 1e-12);
    // qubit 2 still in |+>
    CHECK(std::abs(sv.expectation(single_pauli(3, 2, 'X')).real() - 1.0) < 1e-10);
    // resetting an unmeasured superposed qubit is a usage error
    std::vector<int> q2{2};
    CHECK_THROWS_AS(sv.reset_to_zero(q2), std::logic_error);
}

TEST_CASE("conjugate_pauli agrees with state evolution for all Cliffords") {
    RandomStream rng(17, 3);
    std::vector<GateKind> gates = {
        GateKind::h(0),           GateKind::s(1),
        GateKind::sdag(2),        GateKind::x(0),
        GateKind::y(1),           GateKind::z(2),
        GateKind::rx(M_PI / 2, 0), GateKind::rx(-M_PI / 2, 1),
        GateKind::ry(M_PI / 2, 2), GateKind::ry(-M_PI / 2, 0),
        GateKind::cnot(0, 1),     GateKind::cnot(2, 0),
        GateKind::cz(1, 2),
    };
    for (const auto& g : gates) {
        for (int trial = 0; trial < 25; ++trial) {
            PauliString p(3);
            for (int q = 0; q < 3; ++q) p.set(q, "IXYZ"[rng.below(4)]);
            p.mul_phase_exponent(rng.below(4));
            auto sv = random_state(3, rng);
            // G P |psi>  ==  P' G |psi>  with P' = G P G^dagger
            auto lhs = sv;
            lhs.apply_pauli(p);
            lhs.apply(g);
            auto rhs = sv;
            rhs.apply(g);
            rhs.apply_pauli(conjugate_pauli(p, g));
            for (size_t i = 0; i < lhs.amplitudes().size(); ++i) {
                CHECK(std::abs(lhs.amplitudes()[i] - rhs.amplitudes()[i]) < 1e-11);
            }
        }
    }
    CHECK_THROWS_AS((void)conjugate_pauli(single_pauli(1, 0, 'X'), GateKind::t(0)),
                    std::domain_error);
    CHECK_THROWS_AS((void)conjugate_pauli(single_pauli(1, 0, 'X'), GateKind::rx(0.3, 0)),
                    std::domain_error);
}

TEST_CASE("target validation") {
    StateVector sv(2);
    CHECK_THROWS_AS(sv.apply(GateKind::cnot(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(sv.apply(GateKind::x(5)), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(kMaxQubits + 1), std::invalid_argument);
}

TEST_CASE("projection onto a stabilizer eigenspace") {
    StateVector sv(2);
    sv.apply(GateKind::h(0));
    sv.apply(GateKind::cnot(0, 1));  // Bell: +1 of XX and ZZ
    PauliString xx(2);
    xx.set(0, 'X');
    xx.set(1, 'X');
    auto copy = sv;
    double kept = copy.project_pauli_plus(xx);
    CHECK(std::abs(kept - 1.0) < 1e-12);

    PauliString zmin = single_pauli(2, 0, 'Z');
    auto half = sv;
    double kept2 = half.project_pauli_plus(zmin);
    CHECK(std::abs(kept2 - 0.5) < 1e-12);
}

TEST_CASE("random streams are deterministic and platform-fixed") {
    RandomStream a(123, 45), b(123, 45);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    RandomStream c(123, 46);
    CHECK(RandomStream(123, 45).next_u64() != c.next_u64());
}
