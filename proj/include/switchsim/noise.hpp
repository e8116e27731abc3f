#pragma once

#include <set>
#include <string>
#include <vector>

#include "switchsim/circuit.hpp"
#include "switchsim/pauli.hpp"
#include "switchsim/statevec.hpp"

namespace switchsim {

/// Multi-parameter error model: depolarizing gate noise, preparation and
/// measurement bit flips, idle dephasing with coherence time T2, and the
/// asymmetric per-Pauli channel on data qubits hidden during a detection.
struct NoiseParams {
    double p1 = 0.0036;
    double p2 = 0.027;
    double p_init = 0.003;
    double p_meas = 0.003;
    double p_midcirc_x = 0.011;
    double p_midcirc_y = 0.024;
    double p_midcirc_z = 0.035;
    double T2 = 50.0;       // ms
    double dur_1q = 25.0;   // us
    double dur_2q = 322.5;  // us

    static NoiseParams experiment() { return NoiseParams{}; }
    static NoiseParams ideal();

    bool is_ideal() const;
    std::string to_json() const;
    static NoiseParams from_json(const std::string& text);
};

enum class FaultSource { Gate1q, Gate2q, Init, Meas, Idle, Midcirc };

const char* fault_source_name(FaultSource s);

struct FaultEvent {
    int position = -1;  // event index in the circuit
    PauliString pauli;
    FaultSource source = FaultSource::Gate1q;
};

/// p_idle = (1 - exp(-t/T2)) / 2 with t in us and T2 in ms.
double idle_dephasing_prob(double t_us, double T2_ms);

/// Stochastic fault draw for one trajectory, in the documented deterministic
/// order (per event: gate/init/meas faults by ascending target, then idle
/// dephasing by ascending qubit, then hidden-qubit detection faults).
std::vector<FaultEvent> sample_faults(const Circuit& circuit, const NoiseParams& params,
                                      uint32_t data_mask, RandomStream& rng);

/// Parameters outside `keep` set to zero; excluding Idle sends T2 to
/// infinity. An empty set gives the noiseless model.
NoiseParams reduce_model(const NoiseParams& params, const std::set<FaultSource>& keep);

/// The projected-improvement scenario: idle and mid-circuit rates scaled by
/// `factor` (T2 scales inversely).
NoiseParams scale_idle_midcirc(const NoiseParams& params, double factor);

/// Fixed enumeration of the 15 two-qubit depolarizing Paulis (II excluded).
PauliString two_qubit_error(int index, int n, int qa, int qb);
/// Fixed enumeration of the 3 single-qubit depolarizing Paulis.
PauliString one_qubit_error(int index, int n, int q);

}  // namespace switchsim
