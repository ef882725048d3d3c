#include "linklogic/gates/library.hpp"

#include <fmt/format.h>

#include <array>
#include <map>
#include <memory>
#include <stdexcept>

namespace linklogic::gates {

const std::vector<GateKind>& library_kinds() {
  static const std::vector<GateKind> kinds{GateKind::kNand, GateKind::kNor,  GateKind::kXor,
                                           GateKind::kOr,   GateKind::kAnd,  GateKind::kXnor,
                                           GateKind::kNot,  GateKind::kFredkin,
                                           GateKind::kFullAdder};
  return kinds;
}

std::string_view to_string(GateKind k) {
  switch (k) {
    case GateKind::kNand: return "nand";
    case GateKind::kNor: return "nor";
    case GateKind::kXor: return "xor";
    case GateKind::kOr: return "or";
    case GateKind::kAnd: return "and";
    case GateKind::kXnor: return "xnor";
    case GateKind::kNot: return "not";
    case GateKind::kBuf: return "buf";
    case GateKind::kFredkin: return "fredkin";
    case GateKind::kFullAdder: return "full_adder";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view s) {
  for (GateKind k : {GateKind::kNand, GateKind::kNor, GateKind::kXor, GateKind::kOr,
                     GateKind::kAnd, GateKind::kXnor, GateKind::kNot, GateKind::kBuf,
                     GateKind::kFredkin, GateKind::kFullAdder})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

const std::vector<std::string>& gate_inputs(GateKind k) {
  static const std::vector<std::string> binary{"a", "b"}, unary{"a"}, fredkin{"c", "a", "b"},
      adder{"a", "b", "cin"};
  switch (k) {
    case GateKind::kNot:
    case GateKind::kBuf: return unary;
    case GateKind::kFredkin: return fredkin;
    case GateKind::kFullAdder: return adder;
    default: return binary;
  }
}

const std::vector<std::string>& gate_outputs(GateKind k) {
  static const std::vector<std::string> single{"x"}, fredkin{"co", "ao", "bo"},
      adder{"sum", "cout"};
  switch (k) {
    case GateKind::kFredkin: return fredkin;
    case GateKind::kFullAdder: return adder;
    default: return single;
  }
}

std::vector<bool> gate_function(GateKind k, const std::vector<bool>& in) {
  if (in.size() != gate_inputs(k).size())
    throw std::invalid_argument(fmt::format("{} takes {} inputs", to_string(k), gate_inputs(k).size()));
  switch (k) {
    case GateKind::kNand: return {!(in[0] && in[1])};
    case GateKind::kNor: return {!(in[0] || in[1])};
    case GateKind::kXor: return {in[0] != in[1]};
    case GateKind::kOr: return {in[0] || in[1]};
    case GateKind::kAnd: return {in[0] && in[1]};
    case GateKind::kXnor: return {in[0] == in[1]};
    case GateKind::kNot: return {!in[0]};
    case GateKind::kBuf: return {in[0]};
    case GateKind::kFredkin:
      return in[0] ? std::vector<bool>{true, in[2], in[1]} : std::vector<bool>{false, in[1], in[2]};
    case GateKind::kFullAdder: {
      const int s = int(in[0]) + int(in[1]) + int(in[2]);
      return {(s & 1) != 0, s >= 2};
    }
  }
  return {};
}

namespace {

struct Node {
  int var = -1;   // -1 for a leaf
  bool value = false;
  std::unique_ptr<Node> lo, hi;
};

// `table` holds the output over the remaining inputs [var, n), first input as MSB.
std::unique_ptr<Node> build_tree(const std::vector<bool>& table, int var, int n) {
  auto node = std::make_unique<Node>();
  bool all_same = true;
  for (bool v : table) all_same &= v == table[0];
  if (all_same) {
    node->value = table[0];
    return node;
  }
  const std::size_t half = table.size() / 2;
  std::vector<bool> lo(table.begin(), table.begin() + static_cast<long>(half));
  std::vector<bool> hi(table.begin() + static_cast<long>(half), table.end());
  if (lo == hi) return build_tree(lo, var + 1, n);
  node->var = var;
  node->lo = build_tree(lo, var + 1, n);
  node->hi = build_tree(hi, var + 1, n);
  return node;
}

void count_uses(const Node& node, std::vector<int>& uses) {
  if (node.var < 0) return;
  ++uses[static_cast<std::size_t>(node.var)];
  count_uses(*node.lo, uses);
  count_uses(*node.hi, uses);
}

// Hands out one private copy of a data rail per lock that needs it.
class FanOut {
 public:
  FanOut(Netlist& n, std::string base, RailId src, int count)
      : n_(n), base_(std::move(base)), next_(src), left_(count) {}

  RailId take() {
    if (left_ <= 0) throw std::logic_error("fan-out exhausted");
    if (left_ == 1) {
      --left_;
      return next_;
    }
    const RailId tap = n_.add_rail(fmt::format("{}~{}", base_, serial_));
    const RailId rest = n_.add_rail(fmt::format("{}~{}r", base_, serial_));
    n_.add_route(fmt::format("{}.copy{}", base_, serial_), RouteKind::kCopy, {next_}, {tap, rest});
    ++serial_;
    next_ = rest;
    --left_;
    return tap;
  }

 private:
  Netlist& n_;
  std::string base_;
  RailId next_;
  int left_;
  int serial_ = 0;
};

struct Emitter {
  Netlist& net;
  std::vector<std::array<std::unique_ptr<FanOut>, 2>>& data;
  const std::string& tag;
  std::array<std::vector<RailId>, 2> leaves;
  int serial = 0;

  void emit(const Node& node, RailId in) {
    if (node.var < 0) {
      leaves[node.value].push_back(in);
      return;
    }
    const int id = serial++;
    const RailId s0 = net.add_rail(fmt::format("{}/n{}.s0", tag, id));
    const RailId s1 = net.add_rail(fmt::format("{}/n{}.s1", tag, id));
    net.add_balance(fmt::format("{}/n{}", tag, id), in, s0, s1);
    auto& d = data[static_cast<std::size_t>(node.var)];
    // Data 0 raises rail .0, which must pin side 1 so that side 0 moves.
    net.add_lock(fmt::format("{}/n{}.k0", tag, id), d[0]->take(), s1);
    net.add_lock(fmt::format("{}/n{}.k1", tag, id), d[1]->take(), s0);
    emit(*node.lo, s0);
    emit(*node.hi, s1);
  }
};

void merge(Netlist& net, const std::string& tag, const std::vector<RailId>& leaves, RailId out) {
  if (leaves.empty()) return;
  if (leaves.size() == 1) {
    net.add_route(tag + ".link", RouteKind::kLink, {leaves[0]}, {out});
    return;
  }
  RailId acc = leaves[0];
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    const bool last = i + 1 == leaves.size();
    const RailId dst = last ? out : net.add_rail(fmt::format("{}.j{}", tag, i));
    net.add_route(fmt::format("{}.join{}", tag, i), RouteKind::kJoin, {acc, leaves[i]}, {dst});
    acc = dst;
  }
}

}  // namespace

Netlist synthesize(const std::vector<std::string>& inputs, const std::vector<std::string>& outputs,
                   const BoolFunction& f, const SynthesisOptions& opt) {
  const int n = static_cast<int>(inputs.size());
  if (n > 16) throw std::invalid_argument("synthesize: at most 16 inputs");
  const std::size_t rows = std::size_t{1} << n;

  std::vector<std::vector<bool>> tables(outputs.size(), std::vector<bool>(rows));
  for (std::size_t row = 0; row < rows; ++row) {
    std::vector<bool> in(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) in[static_cast<std::size_t>(i)] = (row >> (n - 1 - i)) & 1U;
    const auto out = f(in);
    if (out.size() != outputs.size()) throw std::invalid_argument("synthesize: output arity mismatch");
    for (std::size_t j = 0; j < out.size(); ++j) tables[j][row] = out[j];
  }

  std::vector<std::unique_ptr<Node>> trees;
  std::vector<int> uses(static_cast<std::size_t>(n), 0);
  for (const auto& t : tables) {
    trees.push_back(build_tree(t, 0, n));
    count_uses(*trees.back(), uses);
  }

  Netlist net;
  std::vector<std::array<std::unique_ptr<FanOut>, 2>> data(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& name = inputs[static_cast<std::size_t>(i)];
    const DualRailPort p = net.add_dualrail(name);
    net.add_input(name, p);
    for (int r = 0; r < 2; ++r)
      data[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] =
          std::make_unique<FanOut>(net, fmt::format("{}.{}", name, r), p[r],
                                   uses[static_cast<std::size_t>(i)]);
  }

  for (std::size_t j = 0; j < outputs.size(); ++j) {
    const auto& name = outputs[j];
    const DualRailPort port = net.add_dualrail(name);
    net.add_output(name, port);
    const DualRailPort tree_out = opt.swap_outputs ? net.add_dualrail(name + "~") : port;
    Emitter em{net, data, name, {}, 0};
    em.emit(*trees[j], net.clock_rail(opt.phase));
    merge(net, name + "~0", em.leaves[0], tree_out.r0);
    merge(net, name + "~1", em.leaves[1], tree_out.r1);
    net.add_lock(name + "/out", tree_out.r0, tree_out.r1);
    if (opt.swap_outputs)
      net.add_route(name + "/swap", RouteKind::kSwap, {tree_out.r0, tree_out.r1},
                    {port.r0, port.r1});
  }
  return net;
}

Netlist build_gate(GateKind kind) {
  GateKind base = kind;
  bool swap = false;
  switch (kind) {
    case GateKind::kOr: base = GateKind::kNor, swap = true; break;
    case GateKind::kAnd: base = GateKind::kNand, swap = true; break;
    case GateKind::kXnor: base = GateKind::kXor, swap = true; break;
    case GateKind::kNot: base = GateKind::kBuf, swap = true; break;
    default: break;
  }
  return synthesize(gate_inputs(kind), gate_outputs(kind),
                    [base](const std::vector<bool>& in) { return gate_function(base, in); },
                    SynthesisOptions{0, swap});
}

}  // namespace linklogic::gates
