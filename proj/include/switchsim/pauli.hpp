#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace switchsim {

/// Signed n-qubit Pauli operator in symplectic form.
///
/// The operator is i^k * prod_q X_q^{x_q} Z_q^{z_q} with k in {0,1,2,3} and
/// per-qubit convention Y = i*X*Z. Qubit indices are 0-based internally;
/// text serializations use the 1-based labels of the layout figures.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(int n) : n_(n) {}

    static PauliString identity(int n) { return PauliString(n); }
    /// Dense form, e.g. "+XIZZY" or "-IIXII" (sign optional, "i"/"-i" allowed).
    static PauliString parse(const std::string& text);
    /// Sparse form with 1-based qubits, e.g. "Z3.Z6.Z8"; "I" is the identity.
    static PauliString from_sparse(int n, const std::string& text);
    /// Direct construction from symplectic masks and phase exponent.
    static PauliString from_masks(int n, uint32_t x, uint32_t z, int k);

    int n() const { return n_; }
    uint32_t x_mask() const { return x_; }
    uint32_t z_mask() const { return z_; }
    int phase_exponent() const { return k_; }
    std::complex<double> phase() const;

    bool x_bit(int q) const { return (x_ >> q) & 1u; }
    bool z_bit(int q) const { return (z_ >> q) & 1u; }
    /// 'I', 'X', 'Y' or 'Z' ignoring the global phase.
    char pauli_at(int q) const;
    /// Sets qubit q to the given Pauli letter; Y contributes a factor i so
    /// that set followed by pauli_at round-trips with phase i^(#Y).
    void set(int q, char p);

    int weight() const;
    bool is_identity() const { return x_ == 0 && z_ == 0; }
    uint32_t support() const { return x_ | z_; }

    PauliString& operator*=(const PauliString& rhs);
    friend PauliString operator*(PauliString a, const PauliString& b) {
        a *= b;
        return a;
    }
    bool operator==(const PauliString& rhs) const = default;

    bool commutes_with(const PauliString& other) const;

    /// Same operator embedded into a wider register; qubit_map[q] gives the
    /// new index of old qubit q.
    PauliString remap(int new_n, std::span<const int> qubit_map) const;

    void negate() { k_ = (k_ + 2) & 3; }
    void mul_phase_exponent(int dk) { k_ = (k_ + dk) & 3; }

    std::string str() const;
    std::string sparse_str() const;

  private:
    int n_ = 0;
    uint32_t x_ = 0;
    uint32_t z_ = 0;
    int k_ = 0;
};

/// Convenience: weight-1 Pauli p on qubit q (phase +1 for X,Z; Y carries i per the rep).
PauliString single_pauli(int n, int q, char p);

/// Bit i is 1 iff `error` anticommutes with generators[i].
std::vector<int> syndrome_of(const PauliString& error, std::span<const PauliString> generators);

/// A list of commuting Pauli generators intended as a stabilizer group.
struct PauliGroup {
    std::vector<PauliString> generators;

    /// True when all pairs commute and no subset product equals -identity.
    bool is_valid_stabilizer_group() const;
};

}  // namespace switchsim
