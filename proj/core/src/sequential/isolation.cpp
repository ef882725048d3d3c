#include "linklogic/sequential/isolation.hpp"

#include <numeric>
#include <set>

namespace linklogic::sequential {

int force_isolation(const gates::Simulator& sim) {
  const auto& topo = *sim.topology();
  const auto& n = sim.netlist();
  const auto rails = n.rail_count();

  std::vector<std::uint8_t> stop(rails, 0);
  for (gates::RailId r = 0; r < rails; ++r) {
    if (topo.is_clock(r) || topo.is_input(r)) {
      stop[r] = 1;
      continue;
    }
    for (const auto& la : topo.locks_at(r))
      if (sim.rail(n.locks()[la.lock].half[1 - la.half])) stop[r] = 1;
  }

  // Union rails coupled by balances and routes.
  std::vector<gates::RailId> parent(rails);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](gates::RailId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](gates::RailId a, gates::RailId b) {
    if (stop[a] || stop[b]) return;
    parent[find(a)] = find(b);
  };
  for (const auto& b : n.balances()) {
    unite(b.input, b.side[0]);
    unite(b.input, b.side[1]);
    unite(b.side[0], b.side[1]);
  }
  for (const auto& r : n.routes()) {
    std::vector<gates::RailId> all(r.in);
    all.insert(all.end(), r.out.begin(), r.out.end());
    for (std::size_t i = 1; i < all.size(); ++i) unite(all[0], all[i]);
  }

  std::vector<std::set<int>> cells(rails);
  auto touch = [&](gates::RailId r, int cell) {
    if (!stop[r]) cells[find(r)].insert(cell);
  };
  for (const auto& l : n.locks())
    for (auto r : l.half) touch(r, l.cell);
  for (const auto& b : n.balances()) {
    touch(b.input, b.cell);
    for (auto r : b.side) touch(r, b.cell);
  }
  for (const auto& r : n.routes()) {
    for (auto x : r.in) touch(x, r.cell);
    for (auto x : r.out) touch(x, r.cell);
  }
  std::size_t best = 0;
  for (const auto& s : cells) best = std::max(best, s.size());
  return static_cast<int>(best);
}

int max_force_isolation(const Trace& trace) {
  if (trace.frames.empty()) return 0;
  gates::Simulator sim(trace.topology, gates::BlankPolicy::kStrict);
  int best = 0;
  for (const auto& f : trace.frames) {
    sim.restore(f.state);
    best = std::max(best, force_isolation(sim));
  }
  return best;
}

}  // namespace linklogic::sequential
