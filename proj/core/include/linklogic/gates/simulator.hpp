#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "linklogic/gates/dual_rail.hpp"
#include "linklogic/gates/netlist.hpp"

namespace linklogic::gates {

// kStrict rejects any balance actuated with both sides free. kBubble lets a
// balance fed straight from a clock rail stay put when its data is Blank.
enum class BlankPolicy { kStrict, kBubble };

// Precomputed connectivity and per-cone evaluation orders. Shared by every
// simulator over the same netlist.
class Topology {
 public:
  explicit Topology(Netlist netlist);

  const Netlist& netlist() const { return netlist_; }

  struct LockAttach {
    std::uint32_t lock;
    std::uint8_t half;
  };

  const std::vector<ElementRef>& consumers(RailId r) const { return consumers_[r]; }
  const std::vector<ElementRef>& drivers(RailId r) const { return drivers_[r]; }
  const std::vector<LockAttach>& locks_at(RailId r) const { return locks_at_[r]; }
  const std::vector<RailId>& clock_rails(int phase) const { return clock_rails_[phase]; }
  const std::vector<ElementRef>& phase_order(int phase) const { return phase_order_[phase]; }
  const std::vector<ElementRef>& input_order(std::size_t port) const { return input_order_[port]; }
  bool is_clock(RailId r) const { return netlist_.clock_phase(r) >= 0; }
  bool is_input(RailId r) const { return is_input_[r] != 0; }

 private:
  void check_phase_cycles() const;
  std::vector<ElementRef> cone_order(const std::vector<RailId>& seeds) const;

  Netlist netlist_;
  std::vector<std::vector<ElementRef>> consumers_;
  std::vector<std::vector<ElementRef>> drivers_;
  std::vector<std::vector<LockAttach>> locks_at_;
  std::array<std::vector<RailId>, 4> clock_rails_;
  std::array<std::vector<ElementRef>, 4> phase_order_;
  std::vector<std::vector<ElementRef>> input_order_;
  std::vector<std::uint8_t> is_input_;
};

// Complete mutable state of a simulation; equality is exact.
struct SimState {
  std::vector<std::uint8_t> external;  // rail driven from outside (ports, clocks)
  std::vector<std::uint8_t> blocked;   // rail held still from outside
  std::vector<std::int8_t> balance_side;  // -1 idle, else actuated side
  std::vector<std::uint8_t> route_out;    // two slots per route
  std::vector<std::uint16_t> drive;       // active drivers per rail
  std::array<bool, 4> raised{};

  friend bool operator==(const SimState&, const SimState&) = default;
};

// Quasi-static event simulator. Each event re-evaluates the cone of elements
// reachable from the rails it touches, in dependency order. Binding and
// steering failures surface as ScheduleViolation; the state after a thrown
// error is unspecified.
class Simulator {
 public:
  explicit Simulator(const Netlist& netlist, BlankPolicy policy = BlankPolicy::kStrict);
  Simulator(std::shared_ptr<const Topology> topology, BlankPolicy policy);

  const Netlist& netlist() const { return topo_->netlist(); }
  const std::shared_ptr<const Topology>& topology() const { return topo_; }
  BlankPolicy policy() const { return policy_; }

  void reset();

  void set_input(std::size_t port, DualRailValue v);
  void set_input(const std::string& port, DualRailValue v);
  void clear_input(std::size_t port);
  DualRailValue input_value(std::size_t port) const;

  void raise(int phase);
  void lower(int phase);
  bool raised(int phase) const { return state_.raised[phase]; }

  // Value an input port would take if pushed from outside: the rail that is
  // still free to move. Blank when both are free; ScheduleViolation when none.
  DualRailValue recover_input(std::size_t port) const;

  void block(RailId r, bool on = true);
  bool movable(RailId r) const;

  bool rail(RailId r) const { return state_.drive[r] != 0; }
  DualRailValue read(const DualRailPort& p) const;
  DualRailValue output(std::size_t port) const;
  DualRailValue output(const std::string& port) const;

  int balance_side(std::uint32_t b) const { return state_.balance_side[b]; }
  bool all_rails_idle() const;

  const SimState& state() const { return state_; }
  void restore(const SimState& s) { state_ = s; }

  // Human-readable state of each lock and balance, in netlist order.
  std::string element_state(ElementRef e) const;

 private:
  void propagate(const std::vector<ElementRef>& order);
  void eval_route(std::uint32_t i);
  void eval_balance(std::uint32_t i);
  void check_lock(std::uint32_t i) const;
  void add_drive(RailId r, int delta);
  bool movable_rec(RailId r) const;

  std::shared_ptr<const Topology> topo_;
  BlankPolicy policy_;
  SimState state_;

  mutable std::vector<std::uint32_t> stamp_;
  mutable std::vector<std::int8_t> memo_;
  mutable std::uint32_t epoch_ = 0;
};

}  // namespace linklogic::gates
