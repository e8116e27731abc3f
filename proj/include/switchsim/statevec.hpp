#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "switchsim/pauli.hpp"

namespace switchsim {

inline constexpr int kMaxQubits = 17;
inline constexpr double kNormTol = 1e-10;
inline constexpr double kBranchEps = 1e-12;

/// Deterministic per-trajectory random stream.
///
/// Seeding and all derived draws use fixed integer arithmetic so that results
/// are bit-identical across platforms and worker counts.
class RandomStream {
  public:
    RandomStream(uint64_t master_seed, uint64_t stream_index);

    uint64_t next_u64() { return engine_(); }
    /// Uniform in [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }
    /// Uniform integer in [0, n) via fixed-point multiply (n small).
    uint32_t below(uint32_t n);

  private:
    std::mt19937_64 engine_;
};

enum class Gate : uint8_t { X, Y, Z, H, S, Sdag, T, Tdag, RX, RY, CNOT, CZ, CCZ };

int gate_arity(Gate g);
const char* gate_name(Gate g);
bool gate_is_diagonal(Gate g);

/// One gate application: kind, targets, and rotation angle for RX/RY.
struct GateKind {
    Gate gate = Gate::X;
    std::array<int16_t, 3> q{-1, -1, -1};
    double theta = 0.0;

    int arity() const { return gate_arity(gate); }

    static GateKind g1(Gate g, int q0);
    static GateKind g2(Gate g, int q0, int q1);
    static GateKind x(int q) { return g1(Gate::X, q); }
    static GateKind y(int q) { return g1(Gate::Y, q); }
    static GateKind z(int q) { return g1(Gate::Z, q); }
    static GateKind h(int q) { return g1(Gate::H, q); }
    static GateKind s(int q) { return g1(Gate::S, q); }
    static GateKind sdag(int q) { return g1(Gate::Sdag, q); }
    static GateKind t(int q) { return g1(Gate::T, q); }
    static GateKind tdag(int q) { return g1(Gate::Tdag, q); }
    static GateKind rx(double theta, int q);
    static GateKind ry(double theta, int q);
    static GateKind cnot(int c, int t) { return g2(Gate::CNOT, c, t); }
    static GateKind cz(int a, int b) { return g2(Gate::CZ, a, b); }
    static GateKind ccz(int a, int b, int c);
};

/// Dense state vector on at most kMaxQubits qubits.
class StateVector {
  public:
    explicit StateVector(int n);

    int n() const { return n_; }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    std::span<std::complex<double>> amplitudes() { return amps_; }

    void apply(const GateKind& g);
    void apply_pauli(const PauliString& p);

    double prob_one(int q) const;
    /// Samples a Z-basis outcome for q, collapses and renormalizes.
    int measure_z(int q, RandomStream& rng);
    /// Forces the given outcome; returns its pre-collapse probability.
    /// Throws if that branch has probability below kBranchEps.
    double force_measure_z(int q, int outcome);
    std::vector<int> measure_z(std::span<const int> qubits, RandomStream& rng);

    /// Moves listed qubits to |0>. Qubits must be in a classical state
    /// (i.e. just measured); anything else is a usage error.
    void reset_to_zero(std::span<const int> qubits);

    /// <psi|P|psi>.
    std::complex<double> expectation(const PauliString& p) const;
    /// In-place (I+P)/2 projection; returns the squared norm kept.
    double project_pauli_plus(const PauliString& p);

    double norm_sq() const;
    void renormalize();

  private:
    void check_targets(const GateKind& g) const;

    int n_;
    std::vector<std::complex<double>> amps_;
};

std::complex<double> inner_product(const StateVector& a, const StateVector& b);

/// P -> G P G^dagger for Clifford gates (throws for T/Tdag/CCZ and
/// non-Clifford rotation angles).
PauliString conjugate_pauli(const PauliString& p, const GateKind& g);

}  // namespace switchsim
