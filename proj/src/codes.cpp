#include "switchsim/codes.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace switchsim {

namespace {

PauliString ops(int n, char p, std::initializer_list<int> qubits_1based) {
    PauliString out(n);
    for (int q : qubits_1based) out.set(q - 1, p);
    return out;
}

PauliString y_parity_op(int n, uint32_t support) {
    PauliString out(n);
    for (int q = 0; q < n; ++q) {
        if ((support >> q) & 1) out.set(q, 'Y');
    }
    return out;
}

void execute_noiseless(const Circuit& c, StateVector& sv) {
    for (const auto& ev : c.events()) {
        switch (ev.kind) {
            case EventKind::Gate: sv.apply(ev.gate); break;
            case EventKind::Reset: break;  // fresh registers only in this path
            case EventKind::MeasureDetect:
                throw std::logic_error("detection inside a pure encoding circuit");
            case EventKind::ClassicalNote: break;
        }
    }
}

struct CodeRegistry {
    CodeSpec steane, zcode, xcode;
    int y_sign_steane = 0, y_sign_z = 0, y_sign_x = 0;
    CodeRegistry();
};

int calibrate_y_sign(const CodeSpec& code) {
    StateVector plus_i = logical_state(code, M_SQRT1_2, std::complex<double>(0, M_SQRT1_2));
    PauliString y7 = y_parity_op(code.n, 0x7f);
    double e = plus_i.expectation(y7).real();
    if (std::abs(std::abs(e) - 1.0) > 1e-9) {
        throw std::logic_error("Y readout calibration failed for " + code.name);
    }
    return e > 0 ? 1 : -1;
}

void self_check(const CodeSpec& code) {
    StateVector zero = logical_state(code, 1.0, 0.0);
    for (const auto& s : code.stabilizers) {
        if (std::abs(zero.expectation(s).real() - 1.0) > 1e-9) {
            throw std::logic_error("encoder does not stabilize " + s.sparse_str() + " for " +
                                   code.name);
        }
    }
    if (std::abs(zero.expectation(code.logical_z).real() - 1.0) > 1e-9) {
        throw std::logic_error("encoder does not prepare logical zero for " + code.name);
    }
}

CodeRegistry::CodeRegistry() {
    {
        CodeSpec& c = steane;
        c.name = "steane713";
        c.n = 7;
        c.x_type = {ops(7, 'X', {1, 2, 3, 4}), ops(7, 'X', {2, 3, 5, 6}), ops(7, 'X', {3, 4, 6, 7})};
        c.z_type = {ops(7, 'Z', {1, 2, 3, 4}), ops(7, 'Z', {2, 3, 5, 6}), ops(7, 'Z', {3, 4, 6, 7})};
        c.stabilizers = c.x_type;
        c.stabilizers.insert(c.stabilizers.end(), c.z_type.begin(), c.z_type.end());
        c.logical_x = ops(7, 'X', {1, 2, 3, 4, 5, 6, 7});
        c.logical_z = ops(7, 'Z', {1, 2, 3, 4, 5, 6, 7});
        c.logical_y = c.logical_x * c.logical_z;
        c.logical_y.mul_phase_exponent(1);
        c.distance_note = "distance 3; corrects any single-qubit error";
    }
    {
        CodeSpec& c = zcode;
        c.name = "code1012z";
        c.n = 10;
        c.x_type = {ops(10, 'X', {1, 2, 3, 4, 8}), ops(10, 'X', {2, 3, 5, 6, 9}),
                    ops(10, 'X', {3, 4, 6, 7, 10})};
        c.z_type = {ops(10, 'Z', {1, 2, 3, 4}), ops(10, 'Z', {2, 3, 5, 6}),
                    ops(10, 'Z', {3, 4, 6, 7}), ops(10, 'Z', {3, 6, 8}),
                    ops(10, 'Z', {3, 4, 9}),    ops(10, 'Z', {2, 3, 10})};
        c.stabilizers = c.x_type;
        c.stabilizers.insert(c.stabilizers.end(), c.z_type.begin(), c.z_type.end());
        c.logical_x = ops(10, 'X', {1, 2, 3, 4, 5, 6, 7});
        c.logical_z = ops(10, 'Z', {1, 2, 3, 4, 5, 6, 7});
        c.logical_y = c.logical_x * c.logical_z;
        c.logical_y.mul_phase_exponent(1);
        c.distance_note =
            "distance 2; corrects up to three X errors but only detects a single Z error";
    }
    {
        // X <-> Z on every generator of code1012z.
        CodeSpec& c = xcode;
        c.name = "code1012x";
        c.n = 10;
        c.x_type = {ops(10, 'X', {1, 2, 3, 4}), ops(10, 'X', {2, 3, 5, 6}),
                    ops(10, 'X', {3, 4, 6, 7}), ops(10, 'X', {3, 6, 8}),
                    ops(10, 'X', {3, 4, 9}),    ops(10, 'X', {2, 3, 10})};
        c.z_type = {ops(10, 'Z', {1, 2, 3, 4, 8}), ops(10, 'Z', {2, 3, 5, 6, 9}),
                    ops(10, 'Z', {3, 4, 6, 7, 10})};
        c.stabilizers = c.x_type;
        c.stabilizers.insert(c.stabilizers.end(), c.z_type.begin(), c.z_type.end());
        c.logical_x = ops(10, 'X', {1, 2, 3, 4, 5, 6, 7});
        c.logical_z = ops(10, 'Z', {1, 2, 3, 4, 5, 6, 7});
        c.logical_y = c.logical_x * c.logical_z;
        c.logical_y.mul_phase_exponent(1);
        c.distance_note =
            "rotated variant; corrects up to three Z errors but only detects a single X error";
    }
    self_check(steane);
    self_check(zcode);
    self_check(xcode);
    y_sign_steane = calibrate_y_sign(steane);
    y_sign_z = calibrate_y_sign(zcode);
    y_sign_x = calibrate_y_sign(xcode);
}

const CodeRegistry& registry() {
    static CodeRegistry reg;
    return reg;
}

}  // namespace

std::vector<uint32_t> CodeSpec::readout_check_masks(char basis) const {
    std::vector<uint32_t> out;
    if (basis == 'X') {
        for (const auto& s : x_type) out.push_back(s.support());
    } else if (basis == 'Z') {
        for (const auto& s : z_type) out.push_back(s.support());
    } else if (basis == 'Y') {
        // Pure Y-type parities exist only where an X and a Z generator share
        // support (the self-dual plaquettes of the seven-qubit code).
        for (const auto& sx : x_type) {
            for (const auto& sz : z_type) {
                if (sx.support() == sz.support()) out.push_back(sx.support());
            }
        }
    } else {
        throw std::invalid_argument("unknown readout basis");
    }
    return out;
}

int CodeSpec::logical_readout_sign(char basis) const {
    if (basis == 'X' || basis == 'Z') return 1;
    if (basis != 'Y') throw std::invalid_argument("unknown readout basis");
    const auto& reg = registry();
    if (name == "steane713") return reg.y_sign_steane;
    if (name == "code1012z") return reg.y_sign_z;
    if (name == "code1012x") return reg.y_sign_x;
    throw std::invalid_argument("unknown code");
}

const PauliString& CodeSpec::logical(char basis) const {
    switch (basis) {
        case 'X': return logical_x;
        case 'Y': return logical_y;
        case 'Z': return logical_z;
    }
    throw std::invalid_argument("unknown logical basis");
}

const CodeSpec& steane713() { return registry().steane; }
const CodeSpec& code1012z() { return registry().zcode; }
const CodeSpec& code1012x() { return registry().xcode; }

const CodeSpec& code_by_name(const std::string& name) {
    if (name == "steane713") return steane713();
    if (name == "code1012z") return code1012z();
    if (name == "code1012x") return code1012x();
    throw std::invalid_argument("unknown code name: " + name);
}

const EncoderLayout& encoder_layout(const CodeSpec& code, LogicalTarget target) {
    static const EncoderLayout steane_zero{
        {0, 1, 2},
        {{0, 3}, {0, 4}, {0, 5}, {1, 0}, {0, 6}, {2, 3}, {3, 6}, {6, 5}},
        ops(7, 'Z', {1, 4, 7})};
    static const EncoderLayout zcode_zero{
        {0, 4, 6},
        {{0, 1}, {0, 2}, {0, 3}, {0, 7}, {4, 1}, {4, 2}, {4, 5}, {4, 8}, {6, 2}, {6, 3}, {6, 5},
         {6, 9}},
        ops(10, 'Z', {1, 3, 6})};
    static const EncoderLayout zcode_plus{
        {5, 8, 9, 2},
        {{5, 4}, {5, 6}, {5, 7}, {8, 0}, {8, 3}, {8, 6}, {9, 0}, {9, 1}, {9, 4}, {2, 0}, {2, 1},
         {2, 3}, {2, 7}},
        PauliString{}};
    static const EncoderLayout xcode_zero{
        {2, 3, 9, 0, 4, 6},
        {{2, 5}, {2, 7}, {3, 2}, {3, 8}, {9, 1}, {9, 2}, {0, 1}, {0, 8}, {4, 1}, {4, 7}, {6, 5},
         {6, 8}},
        PauliString{}};

    if (code.name == "steane713" && target == LogicalTarget::Zero) return steane_zero;
    if (code.name == "code1012z" && target == LogicalTarget::Zero) return zcode_zero;
    if (code.name == "code1012z" && target == LogicalTarget::Plus) return zcode_plus;
    if (code.name == "code1012x" && target == LogicalTarget::Zero) return xcode_zero;
    throw std::domain_error("no encoder for " + code.name +
                            (target == LogicalTarget::Zero ? " |0>" : " |+>"));
}

void append_encoder(Circuit& c, const CodeSpec& code, LogicalTarget target,
                    std::span<const int> data) {
    if (static_cast<int>(data.size()) != code.n) {
        throw std::invalid_argument("encoder data map size mismatch");
    }
    const auto& layout = encoder_layout(code, target);
    std::vector<int> all(data.begin(), data.end());
    c.add_reset(all, "init:" + code.name);
    for (int s : layout.seeds) c.add_gate(GateKind::h(data[s]));
    for (auto [a, b] : layout.cnots) c.add_gate(GateKind::cnot(data[a], data[b]));
}

Circuit encode_circuit(const CodeSpec& code, LogicalTarget target, bool ft) {
    const auto& layout = encoder_layout(code, target);
    bool has_verify = ft && !layout.verification.is_identity();
    Circuit c(code.n + (has_verify ? 1 : 0),
              code.name + (target == LogicalTarget::Zero ? "_zero" : "_plus") +
                  (ft ? "_ft" : "_nft"));
    std::vector<int> data(code.n);
    for (int q = 0; q < code.n; ++q) data[q] = q;
    append_encoder(c, code, target, data);
    if (has_verify) {
        append_stabilizer_gadget(c, layout.verification, code.n, -1, "verify:" + code.name);
    }
    c.refresh_metadata();
    return c;
}

void append_stabilizer_gadget(Circuit& c, const PauliString& stab, int anc, int flag,
                              const std::string& label, bool reset_ancillas, bool reset_flag) {
    bool is_x = stab.z_mask() == 0 && stab.x_mask() != 0;
    bool is_z = stab.x_mask() == 0 && stab.z_mask() != 0;
    if (!is_x && !is_z) {
        throw std::domain_error("stabilizer gadget requires a pure X- or Z-type operator");
    }
    std::vector<int> support;
    for (int q = 0; q < stab.n(); ++q) {
        if ((stab.support() >> q) & 1) support.push_back(q);
    }
    const int w = static_cast<int>(support.size());
    const bool flagged = flag >= 0;

    if (reset_ancillas) c.add_reset({anc}, label);
    if (flagged && reset_flag) c.add_reset({flag}, label);
    if (is_x) {
        c.add_gate(GateKind::h(anc), label);
        for (int i = 0; i < w; ++i) {
            c.add_gate(GateKind::cnot(anc, support[i]), label);
            if (flagged && (i == 0 || i == w - 2)) c.add_gate(GateKind::cnot(anc, flag), label);
        }
        c.add_gate(GateKind::h(anc), label);
    } else {
        if (flagged) c.add_gate(GateKind::h(flag), label);
        for (int i = 0; i < w; ++i) {
            c.add_gate(GateKind::cnot(support[i], anc), label);
            if (flagged && (i == 0 || i == w - 2)) c.add_gate(GateKind::cnot(flag, anc), label);
        }
        if (flagged) c.add_gate(GateKind::h(flag), label);
    }
}

namespace {

bool transversal_supported(const CodeSpec& code, char gate) {
    if (gate == 'X' || gate == 'Z' || gate == 'C') return true;
    if (code.name == "steane713") return gate == 'H' || gate == 'S';
    if (code.name == "code1012z") return gate == 'S';
    return false;  // code1012x: only X, Z, CNOT from this set
}

}  // namespace

void append_transversal(Circuit& c, const CodeSpec& code, char gate, std::span<const int> data) {
    if (!transversal_supported(code, gate)) {
        throw std::domain_error(std::string("gate ") + gate + " is not transversal for " +
                                code.name);
    }
    switch (gate) {
        case 'X':
            for (int i = 0; i < 7; ++i) c.add_gate(GateKind::x(data[i]));
            break;
        case 'Z':
            for (int i = 0; i < 7; ++i) c.add_gate(GateKind::z(data[i]));
            break;
        case 'S':
            // S_L is realized by transversal S-dagger.
            for (int i = 0; i < 7; ++i) c.add_gate(GateKind::sdag(data[i]));
            break;
        case 'H':
            for (int i = 0; i < 7; ++i) c.add_gate(GateKind::h(data[i]));
            break;
        default: throw std::domain_error("unknown transversal gate");
    }
}

Circuit transversal_gate(const CodeSpec& code, char gate) {
    if (gate == 'C') {
        Circuit c(2 * code.n, code.name + "_cnot_l");
        for (int i = 0; i < 7; ++i) c.add_gate(GateKind::cnot(i, code.n + i));
        c.refresh_metadata();
        return c;
    }
    Circuit c(code.n, code.name + "_transversal_" + gate);
    std::vector<int> data(code.n);
    for (int q = 0; q < code.n; ++q) data[q] = q;
    append_transversal(c, code, gate, data);
    c.refresh_metadata();
    return c;
}

void append_logical_rotation(Circuit& c, const CodeSpec& code, char axis, double theta,
                             std::span<const int> data) {
    (void)code;
    if (std::abs(std::abs(theta) - M_PI / 2) > 1e-12) {
        throw std::domain_error("only pi/2 transversal rotations are logical");
    }
    for (int i = 0; i < 7; ++i) {
        // Y_L = -Y^(x7), so the X-axis rotation angle flips sign physically.
        if (axis == 'X') c.add_gate(GateKind::rx(-theta, data[i]));
        else if (axis == 'Y') c.add_gate(GateKind::ry(theta, data[i]));
        else throw std::invalid_argument("rotation axis must be X or Y");
    }
}

namespace {

void append_t_layer_and_ccz(Circuit& c, std::span<const int> data) {
    for (int i = 0; i < 7; ++i) {
        // T on odd 1-based positions, T-dagger on even.
        c.add_gate(i % 2 == 0 ? GateKind::t(data[i]) : GateKind::tdag(data[i]));
    }
    const int a = data[7], b = data[8], cc = data[9];
    c.add_gate(GateKind::cnot(b, cc));
    c.add_gate(GateKind::tdag(cc));
    c.add_gate(GateKind::cnot(a, cc));
    c.add_gate(GateKind::t(cc));
    c.add_gate(GateKind::cnot(b, cc));
    c.add_gate(GateKind::tdag(cc));
    c.add_gate(GateKind::cnot(a, cc));
    c.add_gate(GateKind::cnot(a, b));
    c.add_gate(GateKind::tdag(b));
    c.add_gate(GateKind::cnot(a, b));
    c.add_gate(GateKind::t(a));
    c.add_gate(GateKind::t(b));
    c.add_gate(GateKind::t(cc));
}

}  // namespace

void append_logical_t(Circuit& c, const CodeSpec& code, std::span<const int> data) {
    if (code.name == "code1012z") {
        append_t_layer_and_ccz(c, data);
        return;
    }
    if (code.name == "code1012x") {
        for (int i = 0; i < 10; ++i) c.add_gate(GateKind::h(data[i]));
        append_t_layer_and_ccz(c, data);
        for (int i = 0; i < 10; ++i) c.add_gate(GateKind::h(data[i]));
        return;
    }
    throw std::domain_error("logical T is only available on the ten-qubit code");
}

Circuit logical_t_gate(const CodeSpec& code) {
    Circuit c(code.n, code.name + "_t_l");
    std::vector<int> data(code.n);
    for (int q = 0; q < code.n; ++q) data[q] = q;
    append_logical_t(c, code, data);
    c.refresh_metadata();
    return c;
}

StateVector logical_state(const CodeSpec& code, std::complex<double> alpha,
                          std::complex<double> beta) {
    Circuit enc(code.n, "enc");
    std::vector<int> data(code.n);
    for (int q = 0; q < code.n; ++q) data[q] = q;
    append_encoder(enc, code, LogicalTarget::Zero, data);
    StateVector zero(code.n);
    execute_noiseless(enc, zero);
    StateVector one = zero;
    one.apply_pauli(code.logical_x);
    StateVector out(code.n);
    auto oa = out.amplitudes();
    auto za = zero.amplitudes();
    auto na = one.amplitudes();
    for (size_t i = 0; i < oa.size(); ++i) oa[i] = alpha * za[i] + beta * na[i];
    out.renormalize();
    return out;
}

Mat2 logical_matrix(char gate) {
    const std::complex<double> i{0, 1};
    switch (gate) {
        case 'I': return {1, 0, 0, 1};
        case 'X': return {0, 1, 1, 0};
        case 'Y': return {0, -i, i, 0};
        case 'Z': return {1, 0, 0, -1};
        case 'H': return {M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};
        case 'S': return {1, 0, 0, i};
        case 's': return {1, 0, 0, -i};
        case 'T': return {1, 0, 0, std::polar(1.0, M_PI / 4)};
        case 't': return {1, 0, 0, std::polar(1.0, -M_PI / 4)};
    }
    throw std::invalid_argument("unknown logical gate letter");
}

Mat2 rotation_matrix(char axis, double theta) {
    const std::complex<double> i{0, 1};
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    if (axis == 'X') return {c, -i * s, -i * s, c};
    if (axis == 'Y') return {c, -s, s, c};
    throw std::invalid_argument("rotation axis must be X or Y");
}

std::array<std::complex<double>, 2> apply_mat2(const Mat2& m,
                                               const std::array<std::complex<double>, 2>& v) {
    return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
}

}  // namespace switchsim
