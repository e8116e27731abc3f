#include "switchsim/circuit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace switchsim {

int Circuit::add_gate(const GateKind& g, std::string label) {
    CircuitEvent ev;
    ev.kind = EventKind::Gate;
    ev.gate = g;
    ev.duration_us = g.arity() >= 2 ? kDur2qUs : kDur1qUs;
    for (int i = 0; i < g.arity(); ++i) {
        if (g.q[i] < 0 || g.q[i] >= n_) throw std::invalid_argument("gate target out of range");
        ev.targets.push_back(g.q[i]);
    }
    ev.label = std::move(label);
    events_.push_back(std::move(ev));
    if (g.arity() >= 2) ++metadata_.two_qubit_gates;
    return static_cast<int>(events_.size()) - 1;
}

int Circuit::add_detect(std::vector<int> targets, std::string label) {
    for (int q : targets) {
        if (q < 0 || q >= n_) throw std::invalid_argument("detect target out of range");
    }
    CircuitEvent ev;
    ev.kind = EventKind::MeasureDetect;
    ev.targets = std::move(targets);
    ev.label = std::move(label);
    events_.push_back(std::move(ev));
    return static_cast<int>(events_.size()) - 1;
}

int Circuit::add_reset(std::vector<int> targets, std::string label) {
    for (int q : targets) {
        if (q < 0 || q >= n_) throw std::invalid_argument("reset target out of range");
    }
    CircuitEvent ev;
    ev.kind = EventKind::Reset;
    ev.targets = std::move(targets);
    ev.label = std::move(label);
    events_.push_back(std::move(ev));
    return static_cast<int>(events_.size()) - 1;
}

int Circuit::add_note(std::string label) {
    CircuitEvent ev;
    ev.kind = EventKind::ClassicalNote;
    ev.label = std::move(label);
    events_.push_back(std::move(ev));
    return static_cast<int>(events_.size()) - 1;
}

void Circuit::append(const Circuit& other) {
    if (other.n_ > n_) throw std::invalid_argument("appended circuit is wider");
    for (const auto& ev : other.events_) events_.push_back(ev);
    metadata_.two_qubit_gates += other.metadata_.two_qubit_gates;
    metadata_.midcirc_detections += other.metadata_.midcirc_detections;
}

ResourceCounts count_resources(const Circuit& c) {
    ResourceCounts out;
    const auto& evs = c.events();
    int last_real_event = -1;
    for (int i = 0; i < static_cast<int>(evs.size()); ++i) {
        if (evs[i].kind != EventKind::ClassicalNote) last_real_event = i;
    }
    for (int i = 0; i < static_cast<int>(evs.size()); ++i) {
        const auto& ev = evs[i];
        if (ev.kind == EventKind::Gate && ev.gate.arity() >= 2) ++out.two_qubit_gates;
        if (ev.kind == EventKind::MeasureDetect && i != last_real_event) ++out.midcirc_detections;
    }
    return out;
}

std::vector<TimelineSlot> schedule(const Circuit& c) {
    std::vector<TimelineSlot> out;
    const auto& evs = c.events();
    for (int i = 0; i < static_cast<int>(evs.size()); ++i) {
        const auto& ev = evs[i];
        if (ev.kind == EventKind::ClassicalNote) continue;
        TimelineSlot slot;
        slot.event_index = i;
        slot.active = ev.targets;
        slot.duration_us = ev.duration_us;
        std::vector<bool> is_active(c.n_qubits(), false);
        for (int q : ev.targets) is_active[q] = true;
        for (int q = 0; q < c.n_qubits(); ++q) {
            if (!is_active[q]) slot.idle.push_back(q);
        }
        out.push_back(std::move(slot));
    }
    return out;
}

namespace {

std::string gate_token(const GateKind& g) {
    std::string tok = gate_name(g.gate);
    if (g.gate == Gate::RX || g.gate == Gate::RY) {
        std::ostringstream os;
        os << tok << "(" << g.theta << ")";
        tok = os.str();
    }
    return tok;
}

Gate gate_from_token(const std::string& tok, double* theta) {
    auto paren = tok.find('(');
    std::string name = tok.substr(0, paren);
    if (paren != std::string::npos) {
        *theta = std::stod(tok.substr(paren + 1, tok.size() - paren - 2));
    }
    for (Gate g : {Gate::X, Gate::Y, Gate::Z, Gate::H, Gate::S, Gate::Sdag, Gate::T, Gate::Tdag,
                   Gate::RX, Gate::RY, Gate::CNOT, Gate::CZ, Gate::CCZ}) {
        if (name == gate_name(g)) return g;
    }
    throw std::invalid_argument("unknown gate token: " + tok);
}

}  // namespace

std::string Circuit::to_text() const {
    std::ostringstream os;
    os << "CIRCUIT " << (name_.empty() ? "unnamed" : name_) << " " << n_ << "\n";
    for (const auto& ev : events_) {
        switch (ev.kind) {
            case EventKind::Gate: {
                os << "GATE " << gate_token(ev.gate);
                for (int q : ev.targets) os << " " << (q + 1);
                break;
            }
            case EventKind::MeasureDetect: {
                os << "MDETECT";
                for (int q : ev.targets) os << " " << (q + 1);
                break;
            }
            case EventKind::Reset: {
                os << "RESET";
                for (int q : ev.targets) os << " " << (q + 1);
                break;
            }
            case EventKind::ClassicalNote: os << "NOTE"; break;
        }
        if (!ev.label.empty()) os << " ; " << ev.label;
        os << "\n";
    }
    return os.str();
}

Circuit Circuit::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Circuit out;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::string label;
        if (auto sep = line.find(" ; "); sep != std::string::npos) {
            label = line.substr(sep + 3);
            line = line.substr(0, sep);
        }
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "CIRCUIT") {
            std::string name;
            int n = 0;
            ls >> name >> n;
            out = Circuit(n, name);
            have_header = true;
            continue;
        }
        if (!have_header) throw std::invalid_argument("circuit text missing CIRCUIT header");
        std::vector<int> qubits;
        if (word == "GATE") {
            std::string tok;
            ls >> tok;
            double theta = 0;
            Gate g = gate_from_token(tok, &theta);
            int q;
            while (ls >> q) qubits.push_back(q - 1);
            GateKind gk;
            gk.gate = g;
            gk.theta = theta;
            if (static_cast<int>(qubits.size()) != gate_arity(g)) {
                throw std::invalid_argument("wrong target count for gate: " + tok);
            }
            for (size_t i = 0; i < qubits.size(); ++i) gk.q[i] = static_cast<int16_t>(qubits[i]);
            out.add_gate(gk, label);
        } else if (word == "MDETECT" || word == "RESET") {
            int q;
            while (ls >> q) qubits.push_back(q - 1);
            if (word == "MDETECT") out.add_detect(qubits, label);
            else out.add_reset(qubits, label);
        } else if (word == "NOTE") {
            out.add_note(label);
        } else {
            throw std::invalid_argument("unknown circuit line: " + word);
        }
    }
    out.refresh_metadata();
    return out;
}

}  // namespace switchsim
