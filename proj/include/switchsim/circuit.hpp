#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "switchsim/statevec.hpp"

namespace switchsim {

inline constexpr double kDur1qUs = 25.0;
inline constexpr double kDur2qUs = 322.5;

enum class EventKind { Gate, MeasureDetect, Reset, ClassicalNote };

/// One timed record: a gate, a detection of a qubit subset, a
/// reinitialization, or a classical marker. Labels use fixed prefixes
/// ("stab:", "flag:", "verify:", "midcirc:") that the post-processing
/// logic keys off.
struct CircuitEvent {
    EventKind kind = EventKind::Gate;
    GateKind gate{};
    std::vector<int> targets;
    double duration_us = 0;
    std::string label;
};

struct ResourceCounts {
    int two_qubit_gates = 0;
    int midcirc_detections = 0;
    bool operator==(const ResourceCounts&) const = default;
};

class Circuit;

/// Recounted from the event list. A detection is mid-circuit when any gate,
/// detection or reset event follows it.
ResourceCounts count_resources(const Circuit& c);

class Circuit {
  public:
    Circuit() = default;
    Circuit(int n_qubits, std::string name) : n_(n_qubits), name_(std::move(name)) {}

    int n_qubits() const { return n_; }
    const std::string& name() const { return name_; }
    const std::vector<CircuitEvent>& events() const { return events_; }

    int add_gate(const GateKind& g, std::string label = "");
    /// Detection of `targets` while every other qubit stays hidden.
    int add_detect(std::vector<int> targets, std::string label = "");
    int add_reset(std::vector<int> targets, std::string label = "");
    int add_note(std::string label);
    void append(const Circuit& other);

    /// Stored metadata, fixed at build time.
    ResourceCounts metadata() const { return metadata_; }
    void set_metadata(ResourceCounts counts) { metadata_ = counts; }
    void refresh_metadata() { metadata_ = count_resources(*this); }

    std::string to_text() const;
    static Circuit from_text(const std::string& text);

  private:
    int n_ = 0;
    std::string name_;
    std::vector<CircuitEvent> events_;
    ResourceCounts metadata_{};
};

struct TimelineSlot {
    int event_index = -1;
    std::vector<int> active;
    std::vector<int> idle;
    double duration_us = 0;
};

/// Strictly serial timeline: one event at a time, idle = all other qubits.
std::vector<TimelineSlot> schedule(const Circuit& c);

}  // namespace switchsim
