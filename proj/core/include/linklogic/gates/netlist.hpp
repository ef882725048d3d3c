#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace linklogic::gates {

using RailId = std::uint32_t;

struct DualRailPort {
  RailId r0 = 0;
  RailId r1 = 0;

  RailId operator[](int i) const { return i == 0 ? r0 : r1; }
  friend bool operator==(const DualRailPort&, const DualRailPort&) = default;
};

enum class RouteKind { kCopy, kJoin, kSwap, kLink };

struct LockElement {
  std::string name;
  RailId half[2];
  int cell = -1;
};

struct BalanceElement {
  std::string name;
  RailId input;
  RailId side[2];
  int cell = -1;
};

// copy: in[0] -> out[0], out[1]; join: in[0] | in[1] -> out[0];
// swap: in[0] -> out[1], in[1] -> out[0]; link: in[0] -> out[0].
struct RouteElement {
  std::string name;
  RouteKind kind;
  std::vector<RailId> in;
  std::vector<RailId> out;
  int cell = -1;
};

struct Port {
  std::string name;
  DualRailPort rails;
};

enum class ElementKind : std::uint8_t { kLock, kBalance, kRoute };

struct ElementRef {
  ElementKind kind;
  std::uint32_t index;

  friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

std::string_view to_string(RouteKind k);
std::optional<RouteKind> parse_route_kind(std::string_view s);

// Rails, locks, balances and routing elements. Clock rails are ordinary rails
// tagged with a phase; every clock_rail() call makes a fresh one.
class Netlist {
 public:
  RailId add_rail(const std::string& name);
  DualRailPort add_dualrail(const std::string& name);  // rails name.0 and name.1
  RailId clock_rail(int phase);

  std::optional<RailId> find_rail(const std::string& name) const;
  RailId rail(const std::string& name) const;  // throws UnknownName
  DualRailPort dualrail(const std::string& name) const;
  const std::string& rail_name(RailId id) const { return rail_names_.at(id); }
  std::size_t rail_count() const { return rail_names_.size(); }

  // -1 when the rail is not a clock rail.
  int clock_phase(RailId id) const { return clock_phase_.at(id); }
  std::vector<int> phases() const;  // sorted, distinct phases with clock rails

  void add_lock(const std::string& name, RailId half0, RailId half1, int cell = -1);
  void add_balance(const std::string& name, RailId input, RailId side0, RailId side1,
                   int cell = -1);
  void add_route(const std::string& name, RouteKind kind, std::vector<RailId> in,
                 std::vector<RailId> out, int cell = -1);

  void add_input(const std::string& name, DualRailPort rails);
  void add_output(const std::string& name, DualRailPort rails);

  // Copies `sub` with element and internal rail names prefixed. Sub ports are
  // joined to `bindings`; unbound sub ports become prefixed dual rails. Clock
  // phases are shifted by `phase`. cell >= 0 overrides every element's cell.
  void instantiate(const Netlist& sub, const std::string& prefix,
                   const std::map<std::string, DualRailPort>& bindings, int phase = 0,
                   int cell = -1);

  const std::vector<LockElement>& locks() const { return locks_; }
  const std::vector<BalanceElement>& balances() const { return balances_; }
  const std::vector<RouteElement>& routes() const { return routes_; }
  const std::vector<Port>& inputs() const { return inputs_; }
  const std::vector<Port>& outputs() const { return outputs_; }
  const Port& input(const std::string& name) const;
  const Port& output(const std::string& name) const;

  std::size_t element_count() const { return locks_.size() + balances_.size() + routes_.size(); }
  const std::string& element_name(ElementRef e) const;
  int element_cell(ElementRef e) const;
  std::optional<ElementRef> find_element(const std::string& name) const;

  // Phase whose clock ultimately drives each rail; -1 for data rails.
  std::vector<int> rail_phases() const;

  // Checks port distinctness and single driving per phase. Throws
  // ForbiddenWiring or ValidationError.
  void validate() const;

 private:
  void claim_element_name(const std::string& name, ElementRef ref);

  std::vector<std::string> rail_names_;
  std::vector<int> clock_phase_;
  std::unordered_map<std::string, RailId> rail_index_;
  std::unordered_map<std::string, ElementRef> element_index_;
  std::vector<LockElement> locks_;
  std::vector<BalanceElement> balances_;
  std::vector<RouteElement> routes_;
  std::vector<Port> inputs_;
  std::vector<Port> outputs_;
  int clock_serial_ = 0;
};

}  // namespace linklogic::gates
