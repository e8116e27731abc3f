#include "switchsim/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace switchsim {

NoiseParams NoiseParams::ideal() {
    NoiseParams p;
    p.p1 = p.p2 = p.p_init = p.p_meas = 0;
    p.p_midcirc_x = p.p_midcirc_y = p.p_midcirc_z = 0;
    p.T2 = std::numeric_limits<double>::infinity();
    return p;
}

bool NoiseParams::is_ideal() const {
    return p1 == 0 && p2 == 0 && p_init == 0 && p_meas == 0 && p_midcirc_x == 0 &&
           p_midcirc_y == 0 && p_midcirc_z == 0 && std::isinf(T2);
}

std::string NoiseParams::to_json() const {
    nlohmann::json j;
    j["p1"] = p1;
    j["p2"] = p2;
    j["p_init"] = p_init;
    j["p_meas"] = p_meas;
    j["p_midcirc_x"] = p_midcirc_x;
    j["p_midcirc_y"] = p_midcirc_y;
    j["p_midcirc_z"] = p_midcirc_z;
    j["T2"] = std::isinf(T2) ? -1.0 : T2;
    j["dur_1q"] = dur_1q;
    j["dur_2q"] = dur_2q;
    return j.dump(2);
}

NoiseParams NoiseParams::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    NoiseParams p;
    p.p1 = j.at("p1").get<double>();
    p.p2 = j.at("p2").get<double>();
    p.p_init = j.at("p_init").get<double>();
    p.p_meas = j.at("p_meas").get<double>();
    p.p_midcirc_x = j.at("p_midcirc_x").get<double>();
    p.p_midcirc_y = j.at("p_midcirc_y").get<double>();
    p.p_midcirc_z = j.at("p_midcirc_z").get<double>();
    double t2 = j.at("T2").get<double>();
    p.T2 = t2 < 0 ? std::numeric_limits<double>::infinity() : t2;
    if (j.contains("dur_1q")) p.dur_1q = j.at("dur_1q").get<double>();
    if (j.contains("dur_2q")) p.dur_2q = j.at("dur_2q").get<double>();
    for (double v : {p.p1, p.p2, p.p_init, p.p_meas, p.p_midcirc_x, p.p_midcirc_y, p.p_midcirc_z}) {
        if (v < 0 || v > 1) throw std::invalid_argument("noise probability out of [0,1]");
    }
    if (p.T2 <= 0) throw std::invalid_argument("T2 must be positive");
    return p;
}

const char* fault_source_name(FaultSource s) {
    switch (s) {
        case FaultSource::Gate1q: return "gate1q";
        case FaultSource::Gate2q: return "gate2q";
        case FaultSource::Init: return "init";
        case FaultSource::Meas: return "meas";
        case FaultSource::Idle: return "idle";
        case FaultSource::Midcirc: return "midcirc";
    }
    return "?";
}

double idle_dephasing_prob(double t_us, double T2_ms) {
    if (t_us < 0) throw std::invalid_argument("negative duration");
    if (!(T2_ms > 0)) throw std::invalid_argument("T2 must be positive");
    if (std::isinf(T2_ms)) return 0.0;
    return 0.5 * (1.0 - std::exp(-t_us / (T2_ms * 1000.0)));
}

PauliString one_qubit_error(int index, int n, int q) {
    static constexpr char kSet[3] = {'X', 'Y', 'Z'};
    return single_pauli(n, q, kSet[index]);
}

PauliString two_qubit_error(int index, int n, int qa, int qb) {
    // Row-major over (a, b) in {I,X,Y,Z}^2 with II skipped.
    static constexpr char kSet[4] = {'I', 'X', 'Y', 'Z'};
    int idx = index + 1;
    PauliString p(n);
    p.set(qa, kSet[idx / 4]);
    p.set(qb, kSet[idx % 4]);
    return p;
}

std::vector<FaultEvent> sample_faults(const Circuit& circuit, const NoiseParams& params,
                                      uint32_t data_mask, RandomStream& rng) {
    std::vector<FaultEvent> out;
    const int n = circuit.n_qubits();
    const auto& evs = circuit.events();
    for (int i = 0; i < static_cast<int>(evs.size()); ++i) {
        const auto& ev = evs[i];
        switch (ev.kind) {
            case EventKind::Gate: {
                if (ev.gate.arity() == 1) {
                    if (params.p1 > 0 && rng.bernoulli(params.p1)) {
                        out.push_back({i, one_qubit_error(rng.below(3), n, ev.targets[0]),
                                       FaultSource::Gate1q});
                    }
                } else if (ev.gate.arity() == 2) {
                    if (params.p2 > 0 && rng.bernoulli(params.p2)) {
                        out.push_back({i,
                                       two_qubit_error(rng.below(15), n, ev.targets[0],
                                                       ev.targets[1]),
                                       FaultSource::Gate2q});
                    }
                } else {
                    // CCZ appears only through its two-qubit decomposition.
                    throw std::logic_error("three-qubit gate in a noisy circuit");
                }
                double p_idle = idle_dephasing_prob(ev.duration_us, params.T2);
                if (p_idle > 0) {
                    std::vector<bool> active(n, false);
                    for (int q : ev.targets) active[q] = true;
                    for (int q = 0; q < n; ++q) {
                        if (!active[q] && rng.bernoulli(p_idle)) {
                            out.push_back({i, single_pauli(n, q, 'Z'), FaultSource::Idle});
                        }
                    }
                }
                break;
            }
            case EventKind::MeasureDetect: {
                if (params.p_meas > 0) {
                    for (int q : ev.targets) {
                        if (rng.bernoulli(params.p_meas)) {
                            out.push_back({i, single_pauli(n, q, 'X'), FaultSource::Meas});
                        }
                    }
                }
                uint32_t detected = 0;
                for (int q : ev.targets) detected |= 1u << q;
                uint32_t hidden = data_mask & ~detected;
                for (int q = 0; q < n; ++q) {
                    if (!((hidden >> q) & 1)) continue;
                    if (params.p_midcirc_x > 0 && rng.bernoulli(params.p_midcirc_x)) {
                        out.push_back({i, single_pauli(n, q, 'X'), FaultSource::Midcirc});
                    }
                    if (params.p_midcirc_y > 0 && rng.bernoulli(params.p_midcirc_y)) {
                        out.push_back({i, single_pauli(n, q, 'Y'), FaultSource::Midcirc});
                    }
                    if (params.p_midcirc_z > 0 && rng.bernoulli(params.p_midcirc_z)) {
                        out.push_back({i, single_pauli(n, q, 'Z'), FaultSource::Midcirc});
                    }
                }
                break;
            }
            case EventKind::Reset: {
                if (params.p_init > 0) {
                    for (int q : ev.targets) {
                        if (rng.bernoulli(params.p_init)) {
                            out.push_back({i, single_pauli(n, q, 'X'), FaultSource::Init});
                        }
                    }
                }
                break;
            }
            case EventKind::ClassicalNote: break;
        }
    }
    return out;
}

NoiseParams reduce_model(const NoiseParams& params, const std::set<FaultSource>& keep) {
    NoiseParams out = params;
    if (!keep.count(FaultSource::Gate1q)) out.p1 = 0;
    if (!keep.count(FaultSource::Gate2q)) out.p2 = 0;
    if (!keep.count(FaultSource::Init)) out.p_init = 0;
    if (!keep.count(FaultSource::Meas)) out.p_meas = 0;
    if (!keep.count(FaultSource::Idle)) out.T2 = std::numeric_limits<double>::infinity();
    if (!keep.count(FaultSource::Midcirc)) {
        out.p_midcirc_x = out.p_midcirc_y = out.p_midcirc_z = 0;
    }
    return out;
}

NoiseParams scale_idle_midcirc(const NoiseParams& params, double factor) {
    if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
    NoiseParams out = params;
    out.T2 = params.T2 / factor;  // p_idle ~ t/(2 T2), so T2/factor scales it by factor
    out.p_midcirc_x *= factor;
    out.p_midcirc_y *= factor;
    out.p_midcirc_z *= factor;
    return out;
}

}  // namespace switchsim
