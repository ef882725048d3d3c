#include "linklogic/gates/simulator.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "linklogic/error.hpp"

namespace linklogic::gates {

namespace {

std::uint64_t key(ElementRef e) {
  return (static_cast<std::uint64_t>(e.kind) << 32) | e.index;
}

}  // namespace

Topology::Topology(Netlist netlist) : netlist_(std::move(netlist)) {
  netlist_.validate();
  const auto& n = netlist_;
  const auto rails = n.rail_count();
  consumers_.resize(rails);
  drivers_.resize(rails);
  locks_at_.resize(rails);
  is_input_.assign(rails, 0);

  for (std::uint32_t i = 0; i < n.locks().size(); ++i)
    for (std::uint8_t h = 0; h < 2; ++h) locks_at_[n.locks()[i].half[h]].push_back({i, h});
  for (std::uint32_t i = 0; i < n.balances().size(); ++i) {
    const auto& b = n.balances()[i];
    consumers_[b.input].push_back({ElementKind::kBalance, i});
    for (RailId s : b.side) drivers_[s].push_back({ElementKind::kBalance, i});
  }
  for (std::uint32_t i = 0; i < n.routes().size(); ++i) {
    const auto& r = n.routes()[i];
    for (RailId x : r.in) consumers_[x].push_back({ElementKind::kRoute, i});
    for (RailId x : r.out) drivers_[x].push_back({ElementKind::kRoute, i});
  }
  for (RailId r = 0; r < rails; ++r) {
    const int ph = n.clock_phase(r);
    if (ph >= 0) clock_rails_[ph].push_back(r);
  }
  for (const auto& p : n.inputs()) is_input_[p.rails.r0] = is_input_[p.rails.r1] = 1;

  check_phase_cycles();
  for (int ph = 0; ph < 4; ++ph) {
    try {
      phase_order_[ph] = cone_order(clock_rails_[ph]);
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("phase {}: {}", ph, e.what()));
    }
  }
  for (const auto& p : n.inputs()) {
    try {
      input_order_.push_back(cone_order({p.rails.r0, p.rails.r1}));
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("input '{}': {}", p.name, e.what()));
    }
  }
}

void Topology::check_phase_cycles() const {
  // Data edges between elements of one phase; rails no clock reaches count as
  // their own phase, so a free-standing loop is caught too.
  const auto& n = netlist_;
  const auto phase = n.rail_phases();
  const std::size_t nb = n.balances().size(), m = nb + n.routes().size();
  auto element_phase = [&](std::size_t i) {
    if (i < nb) return phase[n.balances()[i].input];
    int ph = -1;
    for (RailId r : n.routes()[i - nb].in) ph = std::max(ph, phase[r]);
    return ph;
  };
  auto index = [&](ElementRef e) { return e.kind == ElementKind::kBalance ? e.index : nb + e.index; };
  std::vector<std::vector<std::size_t>> succ(m);
  std::vector<std::size_t> indeg(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<RailId> outs;
    if (i < nb)
      outs = {n.balances()[i].side[0], n.balances()[i].side[1]};
    else
      outs = n.routes()[i - nb].out;
    for (RailId o : outs)
      for (const auto& c : consumers_[o]) {
        const std::size_t j = index(c);
        if (element_phase(i) != element_phase(j)) continue;
        succ[i].push_back(j);
        ++indeg[j];
      }
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < m; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::size_t done = 0;
  while (!ready.empty()) {
    const auto i = ready.back();
    ready.pop_back();
    ++done;
    for (auto j : succ[i])
      if (--indeg[j] == 0) ready.push_back(j);
  }
  if (done == m) return;
  for (std::size_t i = 0; i < m; ++i)
    if (indeg[i] != 0) {
      const ElementRef e = i < nb ? ElementRef{ElementKind::kBalance, static_cast<std::uint32_t>(i)}
                                  : ElementRef{ElementKind::kRoute, static_cast<std::uint32_t>(i - nb)};
      throw ValidationError(fmt::format("evaluation cycle through '{}' within phase {}", n.element_name(e),
                                        element_phase(i)));
    }
}

std::vector<ElementRef> Topology::cone_order(const std::vector<RailId>& seeds) const {
  const auto& n = netlist_;
  auto outputs_of = [&](ElementRef e) -> std::vector<RailId> {
    if (e.kind == ElementKind::kBalance) {
      const auto& b = n.balances()[e.index];
      return {b.side[0], b.side[1]};
    }
    return n.routes()[e.index].out;
  };

  std::vector<std::uint8_t> rail_seen(n.rail_count(), 0);
  std::vector<ElementRef> members;
  std::unordered_map<std::uint64_t, std::size_t> slot;
  std::queue<RailId> q;
  for (RailId r : seeds)
    if (!rail_seen[r]) rail_seen[r] = 1, q.push(r);
  while (!q.empty()) {
    RailId r = q.front();
    q.pop();
    for (const auto& e : consumers_[r]) {
      if (slot.count(key(e))) continue;
      slot.emplace(key(e), members.size());
      members.push_back(e);
      for (RailId o : outputs_of(e))
        if (!rail_seen[o]) rail_seen[o] = 1, q.push(o);
    }
  }

  const std::size_t m = members.size();
  std::vector<std::vector<std::size_t>> succ(m);
  std::vector<std::size_t> indeg(m, 0);
  auto edge = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    succ[a].push_back(b);
    ++indeg[b];
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (RailId o : outputs_of(members[i]))
      for (const auto& c : consumers_[o])
        if (auto it = slot.find(key(c)); it != slot.end()) edge(i, it->second);
    if (members[i].kind != ElementKind::kBalance) continue;
    // A balance decides only after the rails steering its own locks settle.
    for (RailId s : n.balances()[members[i].index].side)
      for (const auto& la : locks_at_[s]) {
        RailId partner = n.locks()[la.lock].half[1 - la.half];
        for (const auto& d : drivers_[partner])
          if (auto it = slot.find(key(d)); it != slot.end()) edge(it->second, i);
      }
  }

  using Item = std::pair<std::uint64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::size_t i = 0; i < m; ++i)
    if (indeg[i] == 0) ready.push({key(members[i]), i});
  std::vector<ElementRef> order;
  while (!ready.empty()) {
    auto [_, i] = ready.top();
    ready.pop();
    order.push_back(members[i]);
    for (auto j : succ[i])
      if (--indeg[j] == 0) ready.push({key(members[j]), j});
  }
  if (order.size() != m) {
    for (std::size_t i = 0; i < m; ++i)
      if (indeg[i] != 0)
        throw ValidationError(
            fmt::format("evaluation cycle through '{}'", n.element_name(members[i])));
  }

  // Locks touched by the cone are checked last.
  std::vector<std::uint8_t> lock_seen(n.locks().size(), 0);
  for (RailId r = 0; r < n.rail_count(); ++r) {
    if (!rail_seen[r]) continue;
    for (const auto& la : locks_at_[r])
      if (!lock_seen[la.lock]) lock_seen[la.lock] = 1;
  }
  for (std::uint32_t i = 0; i < lock_seen.size(); ++i)
    if (lock_seen[i]) order.push_back({ElementKind::kLock, i});
  return order;
}

Simulator::Simulator(const Netlist& netlist, BlankPolicy policy)
    : Simulator(std::make_shared<const Topology>(netlist), policy) {}

Simulator::Simulator(std::shared_ptr<const Topology> topology, BlankPolicy policy)
    : topo_(std::move(topology)), policy_(policy) {
  reset();
}

void Simulator::reset() {
  const auto& n = topo_->netlist();
  state_ = SimState{};
  state_.external.assign(n.rail_count(), 0);
  state_.blocked.assign(n.rail_count(), 0);
  state_.drive.assign(n.rail_count(), 0);
  state_.balance_side.assign(n.balances().size(), -1);
  state_.route_out.assign(2 * n.routes().size(), 0);
  stamp_.assign(n.rail_count(), 0);
  memo_.assign(n.rail_count(), 0);
  epoch_ = 0;
}

void Simulator::add_drive(RailId r, int delta) {
  state_.drive[r] = static_cast<std::uint16_t>(state_.drive[r] + delta);
}

DualRailValue Simulator::input_value(std::size_t port) const {
  const auto& p = topo_->netlist().inputs().at(port).rails;
  return DualRailValue::from_rails(state_.external[p.r0], state_.external[p.r1]);
}

void Simulator::set_input(const std::string& port, DualRailValue v) {
  const auto& ins = topo_->netlist().inputs();
  for (std::size_t i = 0; i < ins.size(); ++i)
    if (ins[i].name == port) return set_input(i, v);
  throw UnknownName(fmt::format("unknown input port '{}'", port));
}

void Simulator::set_input(std::size_t port, DualRailValue v) {
  const auto& p = topo_->netlist().inputs().at(port);
  const DualRailValue cur = input_value(port);
  if (cur == v) return;
  if (!cur.is_blank()) clear_input(port);
  if (v.is_blank()) return;
  const RailId r = v == DualRailValue::zero() ? p.rails.r0 : p.rails.r1;
  if (!movable(r))
    throw ScheduleViolation(fmt::format("input '{}' cannot move to {}: rail '{}' is locked",
                                        p.name, v.symbol(), topo_->netlist().rail_name(r)));
  state_.external[r] = 1;
  add_drive(r, +1);
  propagate(topo_->input_order(port));
}

void Simulator::clear_input(std::size_t port) {
  const auto& p = topo_->netlist().inputs().at(port);
  bool changed = false;
  for (RailId r : {p.rails.r0, p.rails.r1})
    if (state_.external[r]) {
      state_.external[r] = 0;
      add_drive(r, -1);
      changed = true;
    }
  if (changed) propagate(topo_->input_order(port));
}

void Simulator::raise(int phase) {
  if (phase < 0 || phase > 3) throw std::invalid_argument("phase outside 0..3");
  if (state_.raised[phase]) return;
  state_.raised[phase] = true;
  for (RailId r : topo_->clock_rails(phase)) {
    state_.external[r] = 1;
    add_drive(r, +1);
  }
  propagate(topo_->phase_order(phase));
}

void Simulator::lower(int phase) {
  if (phase < 0 || phase > 3) throw std::invalid_argument("phase outside 0..3");
  if (!state_.raised[phase]) return;
  state_.raised[phase] = false;
  for (RailId r : topo_->clock_rails(phase)) {
    state_.external[r] = 0;
    add_drive(r, -1);
  }
  propagate(topo_->phase_order(phase));
}

void Simulator::block(RailId r, bool on) { state_.blocked.at(r) = on ? 1 : 0; }

DualRailValue Simulator::recover_input(std::size_t port) const {
  const auto& p = topo_->netlist().inputs().at(port);
  const bool m0 = movable(p.rails.r0);
  const bool m1 = movable(p.rails.r1);
  if (m0 && m1) return DualRailValue::blank();
  if (m0) return DualRailValue::zero();
  if (m1) return DualRailValue::one();
  throw ScheduleViolation(fmt::format("input '{}' is locked on both rails", p.name));
}

void Simulator::propagate(const std::vector<ElementRef>& order) {
  for (const auto& e : order) {
    switch (e.kind) {
      case ElementKind::kRoute: eval_route(e.index); break;
      case ElementKind::kBalance: eval_balance(e.index); break;
      case ElementKind::kLock: check_lock(e.index); break;
    }
  }
}

void Simulator::eval_route(std::uint32_t i) {
  const auto& r = topo_->netlist().routes()[i];
  std::uint8_t o0 = 0, o1 = 0;
  const bool a = rail(r.in[0]);
  switch (r.kind) {
    case RouteKind::kCopy: o0 = o1 = a; break;
    case RouteKind::kLink: o0 = a; break;
    case RouteKind::kJoin: o0 = a || rail(r.in[1]); break;
    case RouteKind::kSwap:
      o0 = rail(r.in[1]);
      o1 = a;
      break;
  }
  auto& s0 = state_.route_out[2 * i];
  auto& s1 = state_.route_out[2 * i + 1];
  if (s0 != o0) add_drive(r.out[0], o0 ? +1 : -1), s0 = o0;
  if (r.out.size() > 1 && s1 != o1) add_drive(r.out[1], o1 ? +1 : -1), s1 = o1;
}

void Simulator::eval_balance(std::uint32_t i) {
  const auto& b = topo_->netlist().balances()[i];
  auto& side = state_.balance_side[i];
  if (!rail(b.input)) {
    if (side >= 0) {
      add_drive(b.side[side], -1);
      side = -1;
    }
    return;
  }
  if (side >= 0) return;
  const bool m0 = movable(b.side[0]);
  const bool m1 = movable(b.side[1]);
  if (m0 && m1) {
    if (policy_ == BlankPolicy::kBubble && topo_->is_clock(b.input)) return;
    throw ScheduleViolation(fmt::format("balance '{}': BothSidesFree", b.name));
  }
  if (!m0 && !m1) throw ScheduleViolation(fmt::format("balance '{}': BothSidesLocked", b.name));
  side = m0 ? 0 : 1;
  add_drive(b.side[side], +1);
}

void Simulator::check_lock(std::uint32_t i) const {
  const auto& l = topo_->netlist().locks()[i];
  if (rail(l.half[0]) && rail(l.half[1]))
    throw ScheduleViolation(fmt::format("lock '{}': BindingViolation, both halves raised", l.name));
}

bool Simulator::movable(RailId r) const {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  return movable_rec(r);
}

bool Simulator::movable_rec(RailId r) const {
  constexpr std::int8_t kBusy = 2;
  if (stamp_[r] == epoch_) return memo_[r] != 0;
  stamp_[r] = epoch_;
  memo_[r] = kBusy;

  const auto& n = topo_->netlist();
  bool ok = !state_.blocked[r] && !rail(r);
  if (ok)
    for (const auto& la : topo_->locks_at(r))
      if (rail(n.locks()[la.lock].half[1 - la.half])) {
        ok = false;
        break;
      }
  if (ok) {
    for (const auto& c : topo_->consumers(r)) {
      if (c.kind == ElementKind::kBalance) {
        const auto& b = n.balances()[c.index];
        ok = movable_rec(b.side[0]) || movable_rec(b.side[1]);
      } else {
        const auto& rt = n.routes()[c.index];
        switch (rt.kind) {
          case RouteKind::kCopy: ok = movable_rec(rt.out[0]) && movable_rec(rt.out[1]); break;
          case RouteKind::kLink:
          case RouteKind::kJoin: ok = movable_rec(rt.out[0]); break;
          case RouteKind::kSwap: ok = movable_rec(rt.out[rt.in[0] == r ? 1 : 0]); break;
        }
      }
      if (!ok) break;
    }
  }
  memo_[r] = ok ? 1 : 0;
  return ok;
}

DualRailValue Simulator::read(const DualRailPort& p) const {
  return DualRailValue::from_rails(rail(p.r0), rail(p.r1));
}

DualRailValue Simulator::output(std::size_t port) const {
  return read(topo_->netlist().outputs().at(port).rails);
}

DualRailValue Simulator::output(const std::string& port) const {
  return read(topo_->netlist().output(port).rails);
}

bool Simulator::all_rails_idle() const {
  for (auto d : state_.drive)
    if (d) return false;
  return true;
}

std::string Simulator::element_state(ElementRef e) const {
  const auto& n = topo_->netlist();
  switch (e.kind) {
    case ElementKind::kLock: {
      const auto& l = n.locks()[e.index];
      return fmt::format("({},{})", int(rail(l.half[0])), int(rail(l.half[1])));
    }
    case ElementKind::kBalance: {
      const auto& b = n.balances()[e.index];
      const int side = state_.balance_side[e.index];
      return fmt::format("in={} out=({},{})", int(rail(b.input)), int(side == 0), int(side == 1));
    }
    case ElementKind::kRoute: {
      const auto& r = n.routes()[e.index];
      return r.out.size() > 1 ? fmt::format("out=({},{})", int(rail(r.out[0])), int(rail(r.out[1])))
                              : fmt::format("out={}", int(rail(r.out[0])));
    }
  }
  return {};
}

}  // namespace linklogic::gates
