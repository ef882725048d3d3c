#include "linklogic/sequential/pipeline.hpp"

#include <fmt/format.h>

#include <stdexcept>

#include "linklogic/error.hpp"

namespace linklogic::sequential {

using gates::DualRailValue;

std::string describe(const Event& e) {
  switch (e.kind) {
    case EventKind::kInputSet: return "input-set";
    case EventKind::kInputClear: return "input-clear";
    case EventKind::kRaise: return fmt::format("raise-{}", e.phase);
    case EventKind::kLower: return fmt::format("lower-{}", e.phase);
  }
  return "?";
}

Event schedule_event(std::size_t index) {
  struct Slot {
    int quarter;
    EventKind kind;
    int phase;
  };
  static constexpr Slot kSlots[kEventsPerCycle] = {
      {0, EventKind::kInputSet, -1}, {0, EventKind::kLower, 2},   {0, EventKind::kRaise, 0},
      {1, EventKind::kInputClear, -1}, {1, EventKind::kLower, 3}, {1, EventKind::kRaise, 1},
      {2, EventKind::kLower, 0},     {2, EventKind::kRaise, 2},   {3, EventKind::kLower, 1},
      {3, EventKind::kRaise, 3},
  };
  const auto cycle = static_cast<double>(index / kEventsPerCycle);
  const Slot& s = kSlots[index % kEventsPerCycle];
  return Event{cycle + s.quarter / 4.0, s.kind, s.phase};
}

std::vector<Event> cycle_events(long cycle) {
  if (cycle < 0) throw std::invalid_argument("cycle_events: negative cycle");
  std::vector<Event> out;
  for (std::size_t k = 0; k < kEventsPerCycle; ++k)
    out.push_back(schedule_event(static_cast<std::size_t>(cycle) * kEventsPerCycle + k));
  return out;
}

Pipeline::Pipeline(const gates::Netlist& netlist, gates::BlankPolicy policy)
    : Pipeline(std::make_shared<const gates::Topology>(netlist), policy) {}

Pipeline::Pipeline(std::shared_ptr<const gates::Topology> topology, gates::BlankPolicy policy)
    : sim_(std::move(topology), policy) {
  const auto& n = sim_.netlist();
  streams_.resize(n.inputs().size());
  const auto phases = n.rail_phases();
  for (const auto& p : n.outputs()) {
    const int ph = phases[p.rails.r0];
    if (ph < 0) throw ValidationError(fmt::format("output '{}' is not driven by a clocked element", p.name));
    out_phase_.push_back(ph);
  }
  samples_.resize(n.outputs().size());
  sinks_.resize(n.outputs().size());
}

void Pipeline::push_inputs(const gates::PortValues& values) {
  const auto& ins = sim_.netlist().inputs();
  for (const auto& [name, _] : values) sim_.netlist().input(name);
  // Streams are kept the same length so cycle c lines up across ports.
  std::size_t len = 0;
  for (const auto& s : streams_) len = std::max(len, s.size());
  for (std::size_t i = 0; i < ins.size(); ++i) {
    streams_[i].resize(len, DualRailValue::blank());
    auto it = values.find(ins[i].name);
    streams_[i].push_back(it == values.end() ? DualRailValue::blank() : it->second);
  }
}

void Pipeline::set_stream(const std::string& port, const std::vector<DualRailValue>& values) {
  const auto& ins = sim_.netlist().inputs();
  for (std::size_t i = 0; i < ins.size(); ++i)
    if (ins[i].name == port) {
      streams_[i] = values;
      return;
    }
  throw UnknownName(fmt::format("unknown input port '{}'", port));
}

const std::vector<Sample>& Pipeline::samples(const std::string& port) const {
  const auto& outs = sim_.netlist().outputs();
  for (std::size_t i = 0; i < outs.size(); ++i)
    if (outs[i].name == port) return samples_[i];
  throw UnknownName(fmt::format("unknown output port '{}'", port));
}

double Pipeline::time() const { return history_.empty() ? 0.0 : history_.back().t; }

void Pipeline::step() {
  const Event e = schedule_event(history_.size());
  bool was_up = false;
  const auto nin = streams_.size();
  const auto nout = out_phase_.size();
  switch (e.kind) {
    case EventKind::kInputSet:
      for (std::size_t i = 0; i < nin; ++i) {
        const auto& s = streams_[i];
        sim_.set_input(i, stream_pos_ < s.size() ? s[stream_pos_] : DualRailValue::blank());
      }
      ++stream_pos_;
      break;
    case EventKind::kInputClear:
      for (std::size_t i = 0; i < nin; ++i) sim_.clear_input(i);
      break;
    case EventKind::kRaise:
      sim_.raise(e.phase);
      for (std::size_t j = 0; j < nout; ++j)
        if (out_phase_[j] == e.phase) samples_[j].push_back({e.t, sim_.output(j)});
      break;
    case EventKind::kLower:
      for (std::size_t j = 0; j < nout; ++j)
        if (out_phase_[j] == e.phase) sinks_[j].push_back(sim_.output(j));
      was_up = sim_.raised(e.phase);
      sim_.lower(e.phase);
      break;
  }
  history_.push_back(e);
  lowered_up_.push_back(was_up);
  record(e, false);
}

void Pipeline::unstep() {
  if (history_.empty()) throw std::logic_error("nothing to reverse");
  const Event e = history_.back();
  const auto nin = streams_.size();
  const auto nout = out_phase_.size();
  const auto& outs = sim_.netlist().outputs();
  switch (e.kind) {
    case EventKind::kInputSet:
      for (std::size_t i = 0; i < nin; ++i) sim_.clear_input(i);
      --stream_pos_;
      break;
    case EventKind::kInputClear: {
      gates::PortValues rec;
      std::vector<DualRailValue> vals;
      for (std::size_t i = 0; i < nin; ++i) vals.push_back(sim_.recover_input(i));
      for (std::size_t i = 0; i < nin; ++i) {
        sim_.set_input(i, vals[i]);
        rec[sim_.netlist().inputs()[i].name] = vals[i];
      }
      recovered_.push_back(std::move(rec));
      break;
    }
    case EventKind::kRaise:
      for (std::size_t j = 0; j < nout; ++j)
        if (out_phase_[j] == e.phase) samples_[j].pop_back();
      sim_.lower(e.phase);
      break;
    case EventKind::kLower: {
      std::vector<gates::RailId> held;
      for (std::size_t j = 0; j < nout; ++j) {
        if (out_phase_[j] != e.phase) continue;
        const DualRailValue v = sinks_[j].back();
        sinks_[j].pop_back();
        if (v.is_blank()) continue;
        // The sink resists the complement rail, so the stage re-forms v.
        const auto r = v == DualRailValue::zero() ? outs[j].rails.r1 : outs[j].rails.r0;
        sim_.block(r);
        held.push_back(r);
      }
      if (lowered_up_.back()) sim_.raise(e.phase);
      for (auto r : held) sim_.block(r, false);
      break;
    }
  }
  history_.pop_back();
  lowered_up_.pop_back();
  record(e, true);
}

void Pipeline::run_events(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) step();
}

PipelineState Pipeline::snapshot() const {
  PipelineState s;
  s.sim = sim_.state();
  s.events = history_.size();
  s.stream_pos = stream_pos_;
  s.sinks = sinks_;
  for (const auto& v : samples_) s.sample_counts.push_back(v.size());
  return s;
}

void Pipeline::record(const Event& e, bool reverse) {
  if (!tracing_) return;
  frames_.push_back({e.t, reverse ? "undo " + describe(e) : describe(e), sim_.state()});
}

}  // namespace linklogic::sequential
