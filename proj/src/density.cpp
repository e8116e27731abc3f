#include "switchsim/density.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace switchsim {

namespace {

using Mat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;

Mat to_eigen(const DensityMatrix& rho) {
    Mat out(rho.dim, rho.dim);
    for (int r = 0; r < rho.dim; ++r) {
        for (int c = 0; c < rho.dim; ++c) out(r, c) = rho.at(r, c);
    }
    return out;
}

void from_eigen(const Mat& m, DensityMatrix& rho) {
    for (int r = 0; r < rho.dim; ++r) {
        for (int c = 0; c < rho.dim; ++c) rho.at(r, c) = m(r, c);
    }
}

Mat psd_sqrt(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    Eigen::VectorXd ev = es.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) ev(i) = ev(i) > 0 ? std::sqrt(ev(i)) : 0.0;
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

DensityMatrix DensityMatrix::from_pure(const std::vector<std::complex<double>>& psi) {
    DensityMatrix out(static_cast<int>(psi.size()));
    for (int r = 0; r < out.dim; ++r) {
        for (int c = 0; c < out.dim; ++c) out.at(r, c) = psi[r] * std::conj(psi[c]);
    }
    return out;
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    DensityMatrix out(dim);
    for (int r = 0; r < dim; ++r) out.at(r, r) = 1.0 / dim;
    return out;
}

double DensityMatrix::trace_real() const {
    double t = 0;
    for (int r = 0; r < dim; ++r) t += at(r, r).real();
    return t;
}

void DensityMatrix::hermitize() {
    for (int r = 0; r < dim; ++r) {
        for (int c = r; c < dim; ++c) {
            auto avg = 0.5 * (at(r, c) + std::conj(at(c, r)));
            at(r, c) = avg;
            at(c, r) = std::conj(avg);
        }
    }
}

void DensityMatrix::clip_and_normalize(bool strict) {
    hermitize();
    Eigen::SelfAdjointEigenSolver<Mat> es(to_eigen(*this));
    Eigen::VectorXd ev = es.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) {
        if (strict && ev(i) < kPsdEigenvalueFloor) {
            throw std::domain_error("density matrix eigenvalue below PSD floor");
        }
        if (ev(i) < 0) ev(i) = 0;
    }
    double tr = ev.sum();
    if (tr <= 0) throw std::domain_error("density matrix has zero trace after clipping");
    ev /= tr;
    from_eigen(es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint(), *this);
}

double fidelity_state(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    if (rho1.dim != rho2.dim) throw std::invalid_argument("fidelity: dimension mismatch");
    Mat a = to_eigen(rho1), b = to_eigen(rho2);
    Mat sa = psd_sqrt(a);
    Mat inner = sa * b * sa;
    Eigen::SelfAdjointEigenSolver<Mat> es(inner);
    double f = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double ev = es.eigenvalues()(i);
        if (ev > 0) f += std::sqrt(ev);
    }
    double out = f * f;
    return out < 0 ? 0 : (out > 1 ? std::min(out, 1.0 + 1e-9) : out);
}

double fidelity_with_pure(const DensityMatrix& rho, const std::vector<std::complex<double>>& psi) {
    if (static_cast<int>(psi.size()) != rho.dim) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    std::complex<double> acc{0, 0};
    for (int r = 0; r < rho.dim; ++r) {
        for (int c = 0; c < rho.dim; ++c) acc += std::conj(psi[r]) * rho.at(r, c) * psi[c];
    }
    return acc.real();
}

double negativity_min_eigenvalue(const DensityMatrix& rho) {
    if (rho.dim != 4) throw std::invalid_argument("negativity: expected a two-qubit state");
    // Partial transpose on the second tensor factor: swap column bits.
    DensityMatrix pt(4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            int r1 = r >> 1, r2 = r & 1, c1 = c >> 1, c2 = c & 1;
            pt.at(r1 * 2 + c2, c1 * 2 + r2) = rho.at(r, c);
        }
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(to_eigen(pt));
    return es.eigenvalues().minCoeff();
}

}  // namespace switchsim
