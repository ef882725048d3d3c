#include "linklogic/gates/netlist.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "linklogic/error.hpp"

namespace linklogic::gates {

std::string_view to_string(RouteKind k) {
  switch (k) {
    case RouteKind::kCopy: return "copy";
    case RouteKind::kJoin: return "join";
    case RouteKind::kSwap: return "swap";
    case RouteKind::kLink: return "link";
  }
  return "?";
}

std::optional<RouteKind> parse_route_kind(std::string_view s) {
  if (s == "copy") return RouteKind::kCopy;
  if (s == "join") return RouteKind::kJoin;
  if (s == "swap") return RouteKind::kSwap;
  if (s == "link") return RouteKind::kLink;
  return std::nullopt;
}

RailId Netlist::add_rail(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("rail name is empty");
  const auto id = static_cast<RailId>(rail_names_.size());
  if (!rail_index_.emplace(name, id).second)
    throw DuplicateName(fmt::format("rail '{}' already declared", name));
  rail_names_.push_back(name);
  clock_phase_.push_back(-1);
  return id;
}

DualRailPort Netlist::add_dualrail(const std::string& name) {
  return {add_rail(name + ".0"), add_rail(name + ".1")};
}

RailId Netlist::clock_rail(int phase) {
  if (phase < 0 || phase > 3) throw std::invalid_argument(fmt::format("clock phase {} outside 0..3", phase));
  std::string name;
  do {
    name = fmt::format("clk{}~{}", phase, clock_serial_++);
  } while (rail_index_.count(name));
  const RailId id = add_rail(name);
  clock_phase_[id] = phase;
  return id;
}

std::optional<RailId> Netlist::find_rail(const std::string& name) const {
  auto it = rail_index_.find(name);
  if (it == rail_index_.end()) return std::nullopt;
  return it->second;
}

RailId Netlist::rail(const std::string& name) const {
  if (auto r = find_rail(name)) return *r;
  throw UnknownName(fmt::format("unknown rail '{}'", name));
}

DualRailPort Netlist::dualrail(const std::string& name) const {
  return {rail(name + ".0"), rail(name + ".1")};
}

std::vector<int> Netlist::phases() const {
  std::set<int> p;
  for (int ph : clock_phase_)
    if (ph >= 0) p.insert(ph);
  return {p.begin(), p.end()};
}

void Netlist::claim_element_name(const std::string& name, ElementRef ref) {
  if (name.empty()) throw std::invalid_argument("element name is empty");
  if (!element_index_.emplace(name, ref).second)
    throw DuplicateName(fmt::format("element '{}' already declared", name));
}

namespace {

void check_rail(const Netlist& n, RailId r) {
  if (r >= n.rail_count()) throw std::invalid_argument(fmt::format("rail id {} out of range", r));
}

}  // namespace

void Netlist::add_lock(const std::string& name, RailId half0, RailId half1, int cell) {
  check_rail(*this, half0);
  check_rail(*this, half1);
  if (half0 == half1) throw ValidationError(fmt::format("lock '{}' has both halves on one rail", name));
  claim_element_name(name, {ElementKind::kLock, static_cast<std::uint32_t>(locks_.size())});
  locks_.push_back({name, {half0, half1}, cell});
}

void Netlist::add_balance(const std::string& name, RailId input, RailId side0, RailId side1,
                          int cell) {
  for (RailId r : {input, side0, side1}) check_rail(*this, r);
  if (input == side0 || input == side1 || side0 == side1)
    throw ValidationError(fmt::format("balance '{}' reuses a rail between pins", name));
  claim_element_name(name, {ElementKind::kBalance, static_cast<std::uint32_t>(balances_.size())});
  balances_.push_back({name, input, {side0, side1}, cell});
}

void Netlist::add_route(const std::string& name, RouteKind kind, std::vector<RailId> in,
                        std::vector<RailId> out, int cell) {
  std::size_t want_in = 1, want_out = 1;
  switch (kind) {
    case RouteKind::kCopy: want_out = 2; break;
    case RouteKind::kJoin: want_in = 2; break;
    case RouteKind::kSwap: want_in = want_out = 2; break;
    case RouteKind::kLink: break;
  }
  if (in.size() != want_in || out.size() != want_out)
    throw ValidationError(fmt::format("route '{}' ({}) needs {} input and {} output rails", name,
                                      to_string(kind), want_in, want_out));
  std::set<RailId> seen;
  for (RailId r : in) check_rail(*this, r), seen.insert(r);
  for (RailId r : out) check_rail(*this, r), seen.insert(r);
  if (seen.size() != in.size() + out.size())
    throw ValidationError(fmt::format("route '{}' reuses a rail between pins", name));
  claim_element_name(name, {ElementKind::kRoute, static_cast<std::uint32_t>(routes_.size())});
  routes_.push_back({name, kind, std::move(in), std::move(out), cell});
}

void Netlist::add_input(const std::string& name, DualRailPort rails) {
  for (const auto& p : inputs_)
    if (p.name == name) throw DuplicateName(fmt::format("input port '{}' already declared", name));
  check_rail(*this, rails.r0);
  check_rail(*this, rails.r1);
  inputs_.push_back({name, rails});
}

void Netlist::add_output(const std::string& name, DualRailPort rails) {
  for (const auto& p : outputs_)
    if (p.name == name) throw DuplicateName(fmt::format("output port '{}' already declared", name));
  check_rail(*this, rails.r0);
  check_rail(*this, rails.r1);
  outputs_.push_back({name, rails});
}

const Port& Netlist::input(const std::string& name) const {
  for (const auto& p : inputs_)
    if (p.name == name) return p;
  throw UnknownName(fmt::format("unknown input port '{}'", name));
}

const Port& Netlist::output(const std::string& name) const {
  for (const auto& p : outputs_)
    if (p.name == name) return p;
  throw UnknownName(fmt::format("unknown output port '{}'", name));
}

const std::string& Netlist::element_name(ElementRef e) const {
  switch (e.kind) {
    case ElementKind::kLock: return locks_.at(e.index).name;
    case ElementKind::kBalance: return balances_.at(e.index).name;
    case ElementKind::kRoute: return routes_.at(e.index).name;
  }
  throw std::logic_error("bad element kind");
}

int Netlist::element_cell(ElementRef e) const {
  switch (e.kind) {
    case ElementKind::kLock: return locks_.at(e.index).cell;
    case ElementKind::kBalance: return balances_.at(e.index).cell;
    case ElementKind::kRoute: return routes_.at(e.index).cell;
  }
  return -1;
}

std::optional<ElementRef> Netlist::find_element(const std::string& name) const {
  auto it = element_index_.find(name);
  if (it == element_index_.end()) return std::nullopt;
  return it->second;
}

void Netlist::instantiate(const Netlist& sub, const std::string& prefix,
                          const std::map<std::string, DualRailPort>& bindings, int phase,
                          int cell) {
  for (const auto& [name, _] : bindings) {
    bool found = false;
    for (const auto& p : sub.inputs_) found |= p.name == name;
    for (const auto& p : sub.outputs_) found |= p.name == name;
    if (!found) throw UnknownName(fmt::format("sub-netlist has no port '{}'", name));
  }

  std::vector<std::optional<RailId>> map(sub.rail_count());
  auto bind_ports = [&](const std::vector<Port>& ports) {
    for (const auto& p : ports) {
      auto it = bindings.find(p.name);
      if (it == bindings.end()) continue;
      map[p.rails.r0] = it->second.r0;
      map[p.rails.r1] = it->second.r1;
    }
  };
  bind_ports(sub.inputs_);
  bind_ports(sub.outputs_);
  for (RailId r = 0; r < sub.rail_count(); ++r) {
    if (map[r]) continue;
    const int ph = sub.clock_phase_[r];
    map[r] = ph >= 0 ? clock_rail((ph + phase) % 4) : add_rail(prefix + sub.rail_names_[r]);
  }
  auto m = [&](RailId r) { return *map[r]; };
  auto c = [&](int own) { return cell >= 0 ? cell : own; };

  for (const auto& l : sub.locks_) add_lock(prefix + l.name, m(l.half[0]), m(l.half[1]), c(l.cell));
  for (const auto& b : sub.balances_)
    add_balance(prefix + b.name, m(b.input), m(b.side[0]), m(b.side[1]), c(b.cell));
  for (const auto& r : sub.routes_) {
    std::vector<RailId> in, out;
    for (RailId x : r.in) in.push_back(m(x));
    for (RailId x : r.out) out.push_back(m(x));
    add_route(prefix + r.name, r.kind, std::move(in), std::move(out), c(r.cell));
  }
}

namespace {


std::vector<std::vector<ElementRef>> rail_drivers(const Netlist& n) {
  std::vector<std::vector<ElementRef>> d(n.rail_count());
  for (std::uint32_t i = 0; i < n.balances().size(); ++i)
    for (RailId s : n.balances()[i].side) d[s].push_back({ElementKind::kBalance, i});
  for (std::uint32_t i = 0; i < n.routes().size(); ++i)
    for (RailId o : n.routes()[i].out) d[o].push_back({ElementKind::kRoute, i});
  return d;
}

}  // namespace

std::vector<int> Netlist::rail_phases() const {
  const auto drivers = rail_drivers(*this);
  constexpr int kUnset = -2, kBusy = -3;
  std::vector<int> memo(rail_count(), kUnset);

  auto element_phase = [&](auto&& self_rail, ElementRef e) -> int {
    if (e.kind == ElementKind::kBalance) return self_rail(self_rail, balances_[e.index].input);
    int ph = -1;
    for (RailId r : routes_[e.index].in) ph = std::max(ph, self_rail(self_rail, r));
    return ph;
  };
  auto rail_phase = [&](auto&& self, RailId r) -> int {
    if (clock_phase_[r] >= 0) return clock_phase_[r];
    if (memo[r] == kBusy) return -1;
    if (memo[r] != kUnset) return memo[r];
    memo[r] = kBusy;
    int ph = -1;
    for (const auto& e : drivers[r]) ph = std::max(ph, element_phase(self, e));
    memo[r] = ph;
    return ph;
  };
  std::vector<int> out(rail_count());
  for (RailId r = 0; r < rail_count(); ++r) out[r] = rail_phase(rail_phase, r);
  return out;
}

void Netlist::validate() const {
  std::set<RailId> port_rails;
  for (const auto* ports : {&inputs_, &outputs_})
    for (const auto& p : *ports)
      for (RailId r : {p.rails.r0, p.rails.r1})
        if (!port_rails.insert(r).second)
          throw ValidationError(fmt::format("rail '{}' is used by more than one port", rail_names_[r]));

  const auto drivers = rail_drivers(*this);
  const auto phase = rail_phases();
  auto element_phase = [&](ElementRef e) {
    if (e.kind == ElementKind::kBalance) return phase[balances_[e.index].input];
    int ph = -1;
    for (RailId r : routes_[e.index].in) ph = std::max(ph, phase[r]);
    return ph;
  };

  for (RailId r = 0; r < rail_count(); ++r) {
    const auto& ds = drivers[r];
    if (ds.empty()) continue;
    if (clock_phase_[r] >= 0)
      throw ForbiddenWiring(fmt::format("clock rail '{}' is driven by '{}'", rail_names_[r],
                                        element_name(ds[0])));
    for (const auto& p : inputs_)
      if (p.rails.r0 == r || p.rails.r1 == r)
        throw ForbiddenWiring(fmt::format("input rail '{}' is driven by '{}'", rail_names_[r],
                                          element_name(ds[0])));
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (element_phase(ds[i]) == element_phase(ds[j]))
          throw ForbiddenWiring(fmt::format("rail '{}' is driven by '{}' and '{}' in phase {}",
                                            rail_names_[r], element_name(ds[j]),
                                            element_name(ds[i]), element_phase(ds[i])));
  }
}

}  // namespace linklogic::gates
