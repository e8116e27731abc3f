#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "switchsim/circuit.hpp"
#include "switchsim/pauli.hpp"

namespace switchsim {

/// Stabilizer code description plus readout bookkeeping.
///
/// Both codes share the logical operators X_L = X^(x7) and Z_L = Z^(x7) on
/// qubits 1..7; Y_L = i X_L Z_L picks up a sign relative to the bare Y
/// parity, fixed here by a noiseless calibration run instead of by hand.
struct CodeSpec {
    std::string name;
    int n = 0;
    std::vector<PauliString> stabilizers;
    std::vector<PauliString> x_type;  // pure X-type generators
    std::vector<PauliString> z_type;  // pure Z-type generators
    PauliString logical_x, logical_z, logical_y;
    std::string distance_note;

    /// Supports of the stabilizer parities computable from a transversal
    /// readout in the given basis ('X','Y','Z'), as qubit masks.
    std::vector<uint32_t> readout_check_masks(char basis) const;
    /// Sign s such that the logical eigenvalue is s * (-1)^(bit parity over
    /// qubits 1..7) in that readout basis.
    int logical_readout_sign(char basis) const;

    /// Logical operator for the basis letter (signed).
    const PauliString& logical(char basis) const;
};

const CodeSpec& steane713();
const CodeSpec& code1012z();
const CodeSpec& code1012x();
const CodeSpec& code_by_name(const std::string& name);

enum class LogicalTarget { Zero, Plus };

/// Seeds+CNOT forest of the encoder, on local qubits 0..n-1.
struct EncoderLayout {
    std::vector<int> seeds;
    std::vector<std::pair<int, int>> cnots;
    /// Verification operator measured onto one ancilla in the FT variant
    /// (empty when the bare encoder is already fault-tolerant).
    PauliString verification;
};

const EncoderLayout& encoder_layout(const CodeSpec& code, LogicalTarget target);

/// Appends the encoder (resets, seed H's, CNOT forest) for the code block
/// mapped through data[q]. The FT variant is completed by the caller by
/// measuring the verification operator (see append_stabilizer_gadget).
void append_encoder(Circuit& c, const CodeSpec& code, LogicalTarget target,
                    std::span<const int> data);

/// Standalone encoding circuit on n (+1 ancilla if ft) qubits; with ft the
/// verification ancilla is coupled but left for the final detection.
Circuit encode_circuit(const CodeSpec& code, LogicalTarget target, bool ft);

/// Ancilla-based stabilizer measurement gadget. X-type stabilizers use a
/// |+> syndrome ancilla with ancilla-as-control CNOTs and an optional |0>
/// flag; Z-type use the mirrored construction. `reset_ancillas` controls
/// whether reset events are emitted for the ancillas (fresh allocation) or
/// not (flag bunching onto a live qubit).
void append_stabilizer_gadget(Circuit& c, const PauliString& stab, int anc, int flag,
                              const std::string& label, bool reset_ancillas = true,
                              bool reset_flag = true);

/// Transversal logical layer on one block (H, S, X, Z); throws a capability
/// error when the gate is not transversal for the code.
void append_transversal(Circuit& c, const CodeSpec& code, char gate, std::span<const int> data);

/// Spec surface: standalone transversal circuit; gate 'C' emits the
/// block-pairwise CNOT on 2n qubits.
Circuit transversal_gate(const CodeSpec& code, char gate);

/// Transversal pi/2 rotation layer implementing the *logical* RX/RY(theta)
/// on a 7-qubit-logical block (sign correction included).
void append_logical_rotation(Circuit& c, const CodeSpec& code, char axis, double theta,
                             std::span<const int> data);

/// T_L = T1 Tdag2 T3 Tdag4 T5 Tdag6 T7 * CCZ(8,9,10), with the CCZ expanded
/// into the fixed 6-CNOT + T template; the rotated code wraps the layer in
/// transversal H.
void append_logical_t(Circuit& c, const CodeSpec& code, std::span<const int> data);
Circuit logical_t_gate(const CodeSpec& code);

/// Noiseless encoded state alpha|0_L> + beta|1_L> on a fresh n-qubit register.
StateVector logical_state(const CodeSpec& code, std::complex<double> alpha,
                          std::complex<double> beta);

/// 2x2 unitaries for ideal-target computation.
using Mat2 = std::array<std::complex<double>, 4>;
Mat2 logical_matrix(char gate);  // 'I','X','Y','Z','H','S','s'(Sdag),'T'
Mat2 rotation_matrix(char axis, double theta);
std::array<std::complex<double>, 2> apply_mat2(const Mat2& m,
                                               const std::array<std::complex<double>, 2>& v);

}  // namespace switchsim
