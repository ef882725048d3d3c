#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linklogic/gates/netlist.hpp"

namespace linklogic::gates {

enum class GateKind { kNand, kNor, kXor, kOr, kAnd, kXnor, kNot, kBuf, kFredkin, kFullAdder };

// The nine kinds of the public gate library (kBuf is internal plumbing).
const std::vector<GateKind>& library_kinds();

std::string_view to_string(GateKind k);
std::optional<GateKind> parse_gate_kind(std::string_view s);

// Port names in order. Binary gates: a, b -> x. NOT/BUF: a -> x.
// FREDKIN: c, a, b -> co, ao, bo. FULL_ADDER: a, b, cin -> sum, cout.
const std::vector<std::string>& gate_inputs(GateKind k);
const std::vector<std::string>& gate_outputs(GateKind k);

// Reference boolean behaviour, inputs and outputs in port order.
std::vector<bool> gate_function(GateKind k, const std::vector<bool>& in);

using BoolFunction = std::function<std::vector<bool>(const std::vector<bool>&)>;

struct SynthesisOptions {
  int phase = 0;
  // Route each output through a rail swap (inverts the logical value).
  bool swap_outputs = false;
};

// Builds a lock/balance netlist for `f`: one decision tree of balances per
// output, steered by locks on copies of the input rails. The first input is
// tested first; inputs a subtree does not depend on are skipped.
Netlist synthesize(const std::vector<std::string>& inputs,
                   const std::vector<std::string>& outputs, const BoolFunction& f,
                   const SynthesisOptions& opt = {});

// OR, AND, XNOR and NOT are NOR, NAND, XOR and BUF with swapped output rails.
Netlist build_gate(GateKind kind);

}  // namespace linklogic::gates
