#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "switchsim/codes.hpp"
#include "switchsim/pauli.hpp"
#include "test_util.hpp"

using namespace switchsim;
using namespace switchsim::testutil;

TEST_CASE("single-qubit products track phases") {
    auto x = single_pauli(1, 0, 'X');
    auto z = single_pauli(1, 0, 'Z');
    auto y = single_pauli(1, 0, 'Y');

    auto xz = x * z;
    // X*Z = -iY
    CHECK(xz.pauli_at(0) == 'Y');
    CHECK((xz * y).is_identity());
    auto minus_i_y = y;
    minus_i_y.mul_phase_exponent(3);  // -i * Y has exponent 1+3 = 0 relative to XZ rep
    CHECK(xz.str() == minus_i_y.str());

    CHECK((x * x).is_identity());
    CHECK((x * x).phase_exponent() == 0);
    CHECK((y * y).phase_exponent() == 0);
}

TEST_CASE("paper lookup entries multiply consistently") {
    // Z3Z6Z8 * Z4Z6Z8Z9 = Z3Z4Z9
    auto a = PauliString::from_sparse(10, "Z3.Z6.Z8");
    auto b = PauliString::from_sparse(10, "Z4.Z6.Z8.Z9");
    auto prod = a * b;
    CHECK(prod == PauliString::from_sparse(10, "Z3.Z4.Z9"));
    CHECK(prod.phase_exponent() == 0);
}

TEST_CASE("involution of stabilizer generators") {
    const auto& code = steane713();
    for (const auto& g : code.stabilizers) {
        auto sq = g * g;
        CHECK(sq.is_identity());
        CHECK(sq.phase_exponent() == 0);
    }
}

TEST_CASE("multiply and commute agree with the dense matrix oracle") {
    RandomStream rng(1234, 0);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + rng.below(4);
        auto rand_pauli = [&](int nn) {
            PauliString p(nn);
            for (int q = 0; q < nn; ++q) p.set(q, "IXYZ"[rng.below(4)]);
            if (rng.below(2)) p.mul_phase_exponent(rng.below(4));
            return p;
        };
        auto p = rand_pauli(n), q = rand_pauli(n);
        auto prod = p * q;
        auto mp = matmul(dense_pauli(p), dense_pauli(q));
        auto mexp = dense_pauli(prod);
        double err = 0;
        for (size_t r = 0; r < mp.size(); ++r)
            for (size_t c = 0; c < mp.size(); ++c) err += std::abs(mp[r][c] - mexp[r][c]);
        CHECK(err < 1e-12);

        // commutation against the oracle
        auto ab = matmul(dense_pauli(p), dense_pauli(q));
        auto ba = matmul(dense_pauli(q), dense_pauli(p));
        double diff = 0;
        for (size_t r = 0; r < ab.size(); ++r)
            for (size_t c = 0; c < ab.size(); ++c) diff += std::abs(ab[r][c] - ba[r][c]);
        CHECK(p.commutes_with(q) == (diff < 1e-12));
    }
}

TEST_CASE("commutation examples") {
    const auto& a = steane713();
    const auto& b = code1012z();
    CHECK(a.x_type[0].commutes_with(a.z_type[1]));
    CHECK(!a.logical_x.commutes_with(a.logical_z));
    // A_X^(3) vs B_Z^(6) = Z2Z3Z10 share only qubit 3
    auto ax3 = PauliString::from_sparse(10, "X3.X4.X6.X7");
    CHECK(!ax3.commutes_with(b.z_type[5]));
}

TEST_CASE("syndrome_of") {
    const auto& a = steane713();
    const auto& b = code1012z();

    auto id7 = PauliString::identity(7);
    CHECK(syndrome_of(id7, a.stabilizers) == std::vector<int>(6, 0));

    // X1 anticommutes only with A_Z^(1)
    auto x1 = single_pauli(7, 0, 'X');
    auto syn = syndrome_of(x1, a.stabilizers);
    for (size_t i = 0; i < syn.size(); ++i) {
        bool expect = false;
        for (int q = 0; q < 7; ++q) {
            if (a.stabilizers[i].z_bit(q) && q == 0) expect = true;
        }
        CHECK(syn[i] == (expect ? 1 : 0));
    }
    CHECK(syn == std::vector<int>{0, 0, 0, 1, 0, 0});

    // Z1 anticommutes only with B_X^(1)
    auto z1 = single_pauli(10, 0, 'Z');
    CHECK(syndrome_of(z1, b.stabilizers) == std::vector<int>{1, 0, 0, 0, 0, 0, 0, 0, 0});

    CHECK_THROWS_AS((void)syndrome_of(x1, b.stabilizers), std::invalid_argument);
}

TEST_CASE("syndrome is stabilizer-transparent") {
    const auto& b = code1012z();
    RandomStream rng(99, 1);
    for (int trial = 0; trial < 50; ++trial) {
        PauliString err(10);
        for (int q = 0; q < 10; ++q) err.set(q, "IXYZ"[rng.below(4)]);
        PauliString stab = PauliString::identity(10);
        for (const auto& g : b.stabilizers) {
            if (rng.below(2)) stab *= g;
        }
        CHECK(syndrome_of(err * stab, b.stabilizers) == syndrome_of(err, b.stabilizers));
    }
}

TEST_CASE("every weight-1 error is detectable on the ten-qubit code") {
    const auto& b = code1012z();
    for (int q = 0; q < 10; ++q) {
        for (char p : {'X', 'Y', 'Z'}) {
            auto syn = syndrome_of(single_pauli(10, q, p), b.stabilizers);
            bool any = false;
            for (int bit : syn) any |= bit != 0;
            CHECK(any);
        }
    }
}

TEST_CASE("stabilizer group validity") {
    for (const CodeSpec* c : {&steane713(), &code1012z(), &code1012x()}) {
        PauliGroup g{c->stabilizers};
        CHECK(g.is_valid_stabilizer_group());
        for (const auto& s : c->stabilizers) {
            CHECK(s.commutes_with(c->logical_x));
            CHECK(s.commutes_with(c->logical_z));
        }
    }
    // X1, -X1 generate -I
    PauliGroup bad;
    auto mx = single_pauli(3, 0, 'X');
    mx.negate();
    bad.generators = {single_pauli(3, 0, 'X'), mx};
    CHECK(!bad.is_valid_stabilizer_group());
}

TEST_CASE("serialization round trips") {
    auto p = PauliString::from_sparse(10, "Z3.Z6.Z8");
    CHECK(p.sparse_str() == "Z3.Z6.Z8");
    CHECK(PauliString::parse(p.str()) == p);

    auto y = PauliString::parse("+IYXZ");
    CHECK(y.pauli_at(1) == 'Y');
    CHECK(PauliString::parse(y.str()) == y);
    CHECK(PauliString::from_sparse(4, "I").is_identity());

    auto neg = PauliString::parse("-XX");
    CHECK(neg.phase_exponent() == 2);
}

TEST_CASE("remap embeds into wider registers") {
    auto p = PauliString::from_sparse(7, "Z1.Z4.Z7");
    std::vector<int> map = {3, 4, 5, 6, 7, 8, 9};
    auto wide = p.remap(16, map);
    CHECK(wide.sparse_str() == "Z4.Z7.Z10");
}
