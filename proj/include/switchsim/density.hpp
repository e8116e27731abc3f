#pragma once

#include <complex>
#include <vector>

namespace switchsim {

inline constexpr double kPsdEigenvalueFloor = -1e-9;

/// Small dense density matrix (1 or 2 logical qubits in practice).
struct DensityMatrix {
    int dim = 0;
    std::vector<std::complex<double>> m;  // row-major dim x dim

    DensityMatrix() = default;
    explicit DensityMatrix(int d) : dim(d), m(static_cast<size_t>(d) * d, {0, 0}) {}

    std::complex<double>& at(int r, int c) { return m[static_cast<size_t>(r) * dim + c]; }
    const std::complex<double>& at(int r, int c) const {
        return m[static_cast<size_t>(r) * dim + c];
    }

    static DensityMatrix from_pure(const std::vector<std::complex<double>>& psi);
    static DensityMatrix maximally_mixed(int dim);

    double trace_real() const;
    void hermitize();
    /// Clips negative eigenvalues to zero and renormalizes to trace 1.
    /// Throws if an eigenvalue is below kPsdEigenvalueFloor before clipping
    /// and `strict` is set.
    void clip_and_normalize(bool strict = false);
};

/// Uhlmann fidelity Tr[sqrt(sqrt(r1) r2 sqrt(r1))]^2.
double fidelity_state(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// <psi|rho|psi> for a pure target.
double fidelity_with_pure(const DensityMatrix& rho, const std::vector<std::complex<double>>& psi);

/// Minimum eigenvalue of the partial transpose over the second qubit (dim 4
/// only). Negative values certify entanglement.
double negativity_min_eigenvalue(const DensityMatrix& rho);

}  // namespace switchsim
