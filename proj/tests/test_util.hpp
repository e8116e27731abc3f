#pragma once

#include <complex>
#include <vector>

#include "switchsim/pauli.hpp"
#include "switchsim/statevec.hpp"

namespace switchsim::testutil {

using CMat = std::vector<std::vector<std::complex<double>>>;

inline CMat cmat_id(int dim) {
    CMat m(dim, std::vector<std::complex<double>>(dim, {0, 0}));
    for (int i = 0; i < dim; ++i) m[i][i] = 1;
    return m;
}

inline CMat kron(const CMat& a, const CMat& b) {
    int ra = a.size(), rb = b.size();
    CMat out(ra * rb, std::vector<std::complex<double>>(ra * rb, {0, 0}));
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < ra; ++j)
            for (int k = 0; k < rb; ++k)
                for (int l = 0; l < rb; ++l) out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
    return out;
}

inline CMat matmul(const CMat& a, const CMat& b) {
    int n = a.size();
    CMat out(n, std::vector<std::complex<double>>(n, {0, 0}));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline CMat pauli_1q(char p) {
    const std::complex<double> i{0, 1};
    switch (p) {
        case 'I': return {{1, 0}, {0, 1}};
        case 'X': return {{0, 1}, {1, 0}};
        case 'Y': return {{0, -i}, {i, 0}};
        case 'Z': return {{1, 0}, {0, -1}};
    }
    return {};
}

/// Dense matrix of a PauliString; qubit 0 is the least significant bit, so
/// the kron order runs from the highest qubit down. The stored operator is
/// i^k prod X^x Z^z, and XZ = -iY, so each Y letter contributes a -i factor
/// on top of the stored phase.
inline CMat dense_pauli(const PauliString& p) {
    std::complex<double> scale = p.phase();
    for (int q = 0; q < p.n(); ++q) {
        if (p.pauli_at(q) == 'Y') scale *= std::complex<double>(0, -1);
    }
    CMat m = {{scale}};
    for (int q = p.n() - 1; q >= 0; --q) m = kron(m, pauli_1q(p.pauli_at(q)));
    return m;
}

inline StateVector random_state(int n, RandomStream& rng) {
    StateVector sv(n);
    auto amps = sv.amplitudes();
    for (auto& a : amps) a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    sv.renormalize();
    return sv;
}

inline bool states_close(const StateVector& a, const StateVector& b, double tol = 1e-10) {
    return std::abs(std::abs(inner_product(a, b)) - 1.0) < tol;
}

}  // namespace switchsim::testutil
