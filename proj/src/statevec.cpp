#include "switchsim/statevec.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace switchsim {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::complex<double> kI{0.0, 1.0};

}  // namespace

RandomStream::RandomStream(uint64_t master_seed, uint64_t stream_index)
    : engine_(splitmix64(master_seed ^ splitmix64(stream_index))) {}

uint32_t RandomStream::below(uint32_t n) {
    return static_cast<uint32_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
}

int gate_arity(Gate g) {
    switch (g) {
        case Gate::CNOT:
        case Gate::CZ: return 2;
        case Gate::CCZ: return 3;
        default: return 1;
    }
}

const char* gate_name(Gate g) {
    switch (g) {
        case Gate::X: return "X";
        case Gate::Y: return "Y";
        case Gate::Z: return "Z";
        case Gate::H: return "H";
        case Gate::S: return "S";
        case Gate::Sdag: return "SDG";
        case Gate::T: return "T";
        case Gate::Tdag: return "TDG";
        case Gate::RX: return "RX";
        case Gate::RY: return "RY";
        case Gate::CNOT: return "CNOT";
        case Gate::CZ: return "CZ";
        case Gate::CCZ: return "CCZ";
    }
    return "?";
}

bool gate_is_diagonal(Gate g) {
    switch (g) {
        case Gate::Z:
        case Gate::S:
        case Gate::Sdag:
        case Gate::T:
        case Gate::Tdag:
        case Gate::CZ:
        case Gate::CCZ: return true;
        default: return false;
    }
}

GateKind GateKind::g1(Gate g, int q0) {
    GateKind out;
    out.gate = g;
    out.q[0] = static_cast<int16_t>(q0);
    return out;
}

GateKind GateKind::g2(Gate g, int q0, int q1) {
    GateKind out;
    out.gate = g;
    out.q[0] = static_cast<int16_t>(q0);
    out.q[1] = static_cast<int16_t>(q1);
    return out;
}

GateKind GateKind::rx(double theta, int q) {
    GateKind out = g1(Gate::RX, q);
    out.theta = theta;
    return out;
}

GateKind GateKind::ry(double theta, int q) {
    GateKind out = g1(Gate::RY, q);
    out.theta = theta;
    return out;
}

GateKind GateKind::ccz(int a, int b, int c) {
    GateKind out;
    out.gate = Gate::CCZ;
    out.q = {static_cast<int16_t>(a), static_cast<int16_t>(b), static_cast<int16_t>(c)};
    return out;
}

StateVector::StateVector(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range: " + std::to_string(n));
    }
    amps_.assign(size_t{1} << n, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

void StateVector::check_targets(const GateKind& g) const {
    int a = g.arity();
    for (int i = 0; i < a; ++i) {
        if (g.q[i] < 0 || g.q[i] >= n_) throw std::invalid_argument("gate target out of range");
        for (int j = i + 1; j < a; ++j) {
            if (g.q[i] == g.q[j]) throw std::invalid_argument("duplicate gate targets");
        }
    }
}

void StateVector::apply(const GateKind& g) {
    check_targets(g);
    const size_t dim = amps_.size();
    auto* a = amps_.data();
    switch (g.gate) {
        case Gate::X: {
            const size_t b = size_t{1} << g.q[0];
            for (size_t i = 0; i < dim; ++i) {
                if (!(i & b)) std::swap(a[i], a[i | b]);
            }
            return;
        }
        case Gate::Y: {
            const size_t b = size_t{1} << g.q[0];
            for (size_t i = 0; i < dim; ++i) {
                if (!(i & b)) {
                    auto a0 = a[i], a1 = a[i | b];
                    a[i] = -kI * a1;
                    a[i | b] = kI * a0;
                }
            }
            return;
        }
        case Gate::Z: {
            const size_t b = size_t{1} << g.q[0];
            for (size_t i = 0; i < dim; ++i) {
                if (i & b) a[i] = -a[i];
            }
            return;
        }
        case Gate::S:
        case Gate::Sdag:
        case Gate::T:
        case Gate::Tdag: {
            const size_t b = size_t{1} << g.q[0];
            std::complex<double> ph;
            if (g.gate == Gate::S) ph = kI;
            else if (g.gate == Gate::Sdag) ph = -kI;
            else if (g.gate == Gate::T) ph = std::polar(1.0, M_PI / 4);
            else ph = std::polar(1.0, -M_PI / 4);
            for (size_t i = 0; i < dim; ++i) {
                if (i & b) a[i] *= ph;
            }
            return;
        }
        case Gate::H: {
            const size_t b = size_t{1} << g.q[0];
            const double s = M_SQRT1_2;
            for (size_t i = 0; i < dim; ++i) {
                if (!(i & b)) {
                    auto a0 = a[i], a1 = a[i | b];
                    a[i] = s * (a0 + a1);
                    a[i | b] = s * (a0 - a1);
                }
            }
            return;
        }
        case Gate::RX:
        case Gate::RY: {
            const size_t b = size_t{1} << g.q[0];
            const double c = std::cos(g.theta / 2), s = std::sin(g.theta / 2);
            for (size_t i = 0; i < dim; ++i) {
                if (!(i & b)) {
                    auto a0 = a[i], a1 = a[i | b];
                    if (g.gate == Gate::RX) {
                        a[i] = c * a0 - kI * s * a1;
                        a[i | b] = -kI * s * a0 + c * a1;
                    } else {
                        a[i] = c * a0 - s * a1;
                        a[i | b] = s * a0 + c * a1;
                    }
                }
            }
            return;
        }
        case Gate::CNOT: {
            const size_t cb = size_t{1} << g.q[0], tb = size_t{1} << g.q[1];
            for (size_t i = 0; i < dim; ++i) {
                if ((i & cb) && !(i & tb)) std::swap(a[i], a[i | tb]);
            }
            return;
        }
        case Gate::CZ: {
            const size_t m = (size_t{1} << g.q[0]) | (size_t{1} << g.q[1]);
            for (size_t i = 0; i < dim; ++i) {
                if ((i & m) == m) a[i] = -a[i];
            }
            return;
        }
        case Gate::CCZ: {
            const size_t m =
                (size_t{1} << g.q[0]) | (size_t{1} << g.q[1]) | (size_t{1} << g.q[2]);
            for (size_t i = 0; i < dim; ++i) {
                if ((i & m) == m) a[i] = -a[i];
            }
            return;
        }
    }
}

void StateVector::apply_pauli(const PauliString& p) {
    if (p.n() != n_) throw std::invalid_argument("Pauli length mismatch with state");
    const size_t dim = amps_.size();
    const uint32_t x = p.x_mask(), z = p.z_mask();
    const std::complex<double> ph = p.phase();
    auto* a = amps_.data();
    if (x == 0) {
        for (size_t i = 0; i < dim; ++i) {
            double sign = std::popcount(static_cast<uint32_t>(i) & z) & 1 ? -1.0 : 1.0;
            a[i] *= sign * ph;
        }
        return;
    }
    for (size_t i = 0; i < dim; ++i) {
        size_t j = i ^ x;
        if (j < i) continue;
        // P|i> = ph * (-1)^{z.i} |i^x>
        double si = std::popcount(static_cast<uint32_t>(i) & z) & 1 ? -1.0 : 1.0;
        double sj = std::popcount(static_cast<uint32_t>(j) & z) & 1 ? -1.0 : 1.0;
        auto ai = a[i], aj = a[j];
        a[j] = ph * si * ai;
        a[i] = ph * sj * aj;
    }
}

double StateVector::prob_one(int q) const {
    const size_t b = size_t{1} << q;
    double p = 0;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & b) p += std::norm(amps_[i]);
    }
    return p;
}

int StateVector::measure_z(int q, RandomStream& rng) {
    double p1 = prob_one(q);
    int outcome = rng.uniform() < p1 ? 1 : 0;
    const size_t b = size_t{1} << q;
    double keep = outcome ? p1 : 1.0 - p1;
    double scale = 1.0 / std::sqrt(keep);
    for (size_t i = 0; i < amps_.size(); ++i) {
        bool one = (i & b) != 0;
        if (one != static_cast<bool>(outcome)) amps_[i] = {0.0, 0.0};
        else amps_[i] *= scale;
    }
    return outcome;
}

double StateVector::force_measure_z(int q, int outcome) {
    double p1 = prob_one(q);
    double keep = outcome ? p1 : 1.0 - p1;
    if (keep < kBranchEps) {
        throw std::runtime_error("forced zero-probability measurement branch");
    }
    const size_t b = size_t{1} << q;
    double scale = 1.0 / std::sqrt(keep);
    for (size_t i = 0; i < amps_.size(); ++i) {
        bool one = (i & b) != 0;
        if (one != static_cast<bool>(outcome)) amps_[i] = {0.0, 0.0};
        else amps_[i] *= scale;
    }
    return keep;
}

std::vector<int> StateVector::measure_z(std::span<const int> qubits, RandomStream& rng) {
    std::vector<int> bits;
    bits.reserve(qubits.size());
    for (int q : qubits) bits.push_back(measure_z(q, rng));
    return bits;
}

void StateVector::reset_to_zero(std::span<const int> qubits) {
    for (int q : qubits) {
        double p1 = prob_one(q);
        if (p1 > 1e-9 && p1 < 1.0 - 1e-9) {
            throw std::logic_error("reset of a qubit that is not in a classical state");
        }
        if (p1 >= 1.0 - 1e-9) apply(GateKind::x(q));
    }
}

std::complex<double> StateVector::expectation(const PauliString& p) const {
    if (p.n() != n_) throw std::invalid_argument("Pauli length mismatch with state");
    const uint32_t x = p.x_mask(), z = p.z_mask();
    const std::complex<double> ph = p.phase();
    std::complex<double> acc{0, 0};
    for (size_t i = 0; i < amps_.size(); ++i) {
        double si = std::popcount(static_cast<uint32_t>(i) & z) & 1 ? -1.0 : 1.0;
        acc += std::conj(amps_[i ^ x]) * (ph * si) * amps_[i];
    }
    return acc;
}

double StateVector::project_pauli_plus(const PauliString& p) {
    if (p.n() != n_) throw std::invalid_argument("Pauli length mismatch with state");
    const uint32_t x = p.x_mask(), z = p.z_mask();
    const std::complex<double> ph = p.phase();
    auto* a = amps_.data();
    if (x == 0) {
        for (size_t i = 0; i < amps_.size(); ++i) {
            double si = std::popcount(static_cast<uint32_t>(i) & z) & 1 ? -1.0 : 1.0;
            a[i] = 0.5 * (a[i] + ph * si * a[i]);
        }
    } else {
        for (size_t i = 0; i < amps_.size(); ++i) {
            size_t j = i ^ x;
            if (j < i) continue;
            double si = std::popcount(static_cast<uint32_t>(i) & z) & 1 ? -1.0 : 1.0;
            double sj = std::popcount(static_cast<uint32_t>(j) & z) & 1 ? -1.0 : 1.0;
            auto ai = a[i], aj = a[j];
            a[i] = 0.5 * (ai + ph * sj * aj);
            a[j] = 0.5 * (aj + ph * si * ai);
        }
    }
    return norm_sq();
}

double StateVector::norm_sq() const {
    double s = 0;
    for (const auto& c : amps_) s += std::norm(c);
    return s;
}

void StateVector::renormalize() {
    double s = std::sqrt(norm_sq());
    if (s <= 0) throw std::runtime_error("cannot renormalize zero state");
    for (auto& c : amps_) c /= s;
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b) {
    if (a.n() != b.n()) throw std::invalid_argument("state size mismatch");
    std::complex<double> acc{0, 0};
    auto sa = a.amplitudes(), sb = b.amplitudes();
    for (size_t i = 0; i < sa.size(); ++i) acc += std::conj(sa[i]) * sb[i];
    return acc;
}

namespace {

// Single-qubit Clifford conjugation on the (x, z) pair with phase step for
// the X^x Z^z representative. Returns {x', z', dk}.
struct XZMap {
    int x, z, dk;
};

XZMap conj1(Gate g, double theta, int x, int z) {
    auto id = XZMap{x, z, 0};
    if (x == 0 && z == 0) return id;
    const int code = x * 2 + z;  // 1=Z, 2=X, 3=XZ
    switch (g) {
        case Gate::H:
            if (code == 1) return {1, 0, 0};
            if (code == 2) return {0, 1, 0};
            return {1, 1, 2};  // XZ -> ZX = -XZ
        case Gate::S:
            if (code == 1) return {0, 1, 0};
            if (code == 2) return {1, 1, 1};  // X -> Y = iXZ
            return {1, 0, 1};                 // XZ -> iX
        case Gate::Sdag:
            if (code == 1) return {0, 1, 0};
            if (code == 2) return {1, 1, 3};
            return {1, 0, 3};
        case Gate::X:
            if (code == 1) return {0, 1, 2};
            if (code == 2) return {1, 0, 0};
            return {1, 1, 2};
        case Gate::Y:
            if (code == 3) return {1, 1, 0};
            return {x, z, 2};
        case Gate::Z:
            if (code == 1) return {0, 1, 0};
            if (code == 2) return {1, 0, 2};
            return {1, 1, 2};
        case Gate::RX: {
            bool plus = theta > 0;
            if (code == 2) return {1, 0, 0};
            if (code == 1) return {1, 1, plus ? 3 : 1};  // Z -> -Y / +Y
            return {0, 1, plus ? 3 : 1};                 // XZ -> -iZ / iZ
        }
        case Gate::RY: {
            bool plus = theta > 0;
            if (code == 3) return {1, 1, 0};
            if (plus) {
                if (code == 2) return {0, 1, 2};  // X -> -Z
                return {1, 0, 0};                 // Z -> X
            }
            if (code == 2) return {0, 1, 0};  // X -> Z
            return {1, 0, 2};                 // Z -> -X
        }
        default: break;
    }
    throw std::domain_error("conjugate_pauli: gate is not a supported Clifford");
}

}  // namespace

PauliString conjugate_pauli(const PauliString& p, const GateKind& g) {
    switch (g.gate) {
        case Gate::T:
        case Gate::Tdag:
        case Gate::CCZ: throw std::domain_error("conjugate_pauli: non-Clifford gate");
        case Gate::RX:
        case Gate::RY:
            if (std::abs(std::abs(g.theta) - M_PI / 2) > 1e-12) {
                throw std::domain_error("conjugate_pauli: non-Clifford rotation angle");
            }
            [[fallthrough]];
        case Gate::H:
        case Gate::S:
        case Gate::Sdag:
        case Gate::X:
        case Gate::Y:
        case Gate::Z: {
            const int q = g.q[0];
            auto m = conj1(g.gate, g.theta, p.x_bit(q), p.z_bit(q));
            uint32_t nx = p.x_mask() & ~(1u << q);
            uint32_t nz = p.z_mask() & ~(1u << q);
            nx |= static_cast<uint32_t>(m.x) << q;
            nz |= static_cast<uint32_t>(m.z) << q;
            return PauliString::from_masks(p.n(), nx, nz, p.phase_exponent() + m.dk);
        }
        case Gate::CNOT: {
            const int c = g.q[0], t = g.q[1];
            uint32_t x = p.x_mask(), z = p.z_mask();
            uint32_t nx = x, nz = z;
            if ((x >> c) & 1) nx ^= 1u << t;
            if ((z >> t) & 1) nz ^= 1u << c;
            return PauliString::from_masks(p.n(), nx, nz, p.phase_exponent());
        }
        case Gate::CZ: {
            const int qa = g.q[0], qb = g.q[1];
            uint32_t x = p.x_mask(), z = p.z_mask();
            uint32_t nz = z;
            int dk = 0;
            if ((x >> qa) & 1) nz ^= 1u << qb;
            if ((x >> qb) & 1) nz ^= 1u << qa;
            if (((x >> qa) & 1) && ((x >> qb) & 1)) dk = 2;
            return PauliString::from_masks(p.n(), x, nz, p.phase_exponent() + dk);
        }
    }
    return p;
}

}  // namespace switchsim
