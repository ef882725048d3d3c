#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "linklogic/gates/evaluate.hpp"
#include "linklogic/gates/simulator.hpp"

namespace linklogic::sequential {

enum class EventKind { kInputSet, kInputClear, kRaise, kLower };

struct Event {
  double t = 0.0;  // cycles
  EventKind kind = EventKind::kRaise;
  int phase = -1;  // raise/lower only
};

std::string describe(const Event& e);

// Ten events per cycle. Quarter q at time c + q/4 lowers phase q+2 and then
// raises phase q; inputs are applied before quarter 0 and withdrawn before
// quarter 1.
std::vector<Event> cycle_events(long cycle);
Event schedule_event(std::size_t index);

constexpr std::size_t kEventsPerCycle = 10;

struct Frame {
  double t = 0.0;
  std::string label;
  gates::SimState state;
};

struct Trace {
  std::shared_ptr<const gates::Topology> topology;
  std::vector<Frame> frames;
};

struct Sample {
  double t = 0.0;  // time of the raise that produced it
  gates::DualRailValue value;
};

// Exact, comparable snapshot of a pipeline.
struct PipelineState {
  gates::SimState sim;
  std::size_t events = 0;
  std::size_t stream_pos = 0;
  std::vector<std::vector<gates::DualRailValue>> sinks;
  std::vector<std::size_t> sample_counts;

  friend bool operator==(const PipelineState&, const PipelineState&) = default;
};

// Runs a clocked netlist on the fixed event schedule. Input port i reads
// stream value c during cycle c (Blank past the end). Each output port is
// sampled when the phase driving it rises.
//
// Reversal replays the schedule backwards. A re-raised stage rebuilds its
// value from the downstream stage that still holds it; output ports keep the
// values they passed on in a sink so the last stage can be rebuilt too, and
// withdrawn inputs are recovered from which input rail is still free.
class Pipeline {
 public:
  Pipeline(const gates::Netlist& netlist, gates::BlankPolicy policy);
  Pipeline(std::shared_ptr<const gates::Topology> topology, gates::BlankPolicy policy);

  // Appends one cycle of input values; missing ports get Blank.
  void push_inputs(const gates::PortValues& values);
  void set_stream(const std::string& port, const std::vector<gates::DualRailValue>& values);

  void step();
  void unstep();
  void run_events(std::size_t n);
  void run_cycles(std::size_t n) { run_events(n * kEventsPerCycle); }

  std::size_t events() const { return history_.size(); }
  double time() const;
  const gates::Simulator& sim() const { return sim_; }
  const gates::Netlist& netlist() const { return sim_.netlist(); }

  int output_phase(std::size_t port) const { return out_phase_.at(port); }
  const std::vector<Sample>& samples(std::size_t port) const { return samples_.at(port); }
  const std::vector<Sample>& samples(const std::string& port) const;

  // Values recovered for withdrawn inputs during reversal, newest last.
  const std::vector<gates::PortValues>& recovered() const { return recovered_; }

  PipelineState snapshot() const;

  void set_tracing(bool on) { tracing_ = on; }
  const std::vector<Frame>& frames() const { return frames_; }
  Trace trace() const { return {sim_.topology(), frames_}; }

 private:
  void record(const Event& e, bool reverse);

  gates::Simulator sim_;
  std::vector<std::vector<gates::DualRailValue>> streams_;
  std::size_t stream_pos_ = 0;
  std::vector<int> out_phase_;
  std::vector<std::vector<Sample>> samples_;
  std::vector<std::vector<gates::DualRailValue>> sinks_;
  std::vector<Event> history_;
  std::vector<bool> lowered_up_;  // per event: a Lower found its phase raised
  std::vector<gates::PortValues> recovered_;
  bool tracing_ = false;
  std::vector<Frame> frames_;
};

}  // namespace linklogic::sequential
