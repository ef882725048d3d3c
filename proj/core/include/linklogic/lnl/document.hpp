#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "linklogic/gates/dual_rail.hpp"
#include "linklogic/gates/netlist.hpp"

namespace linklogic::lnl {

struct RailDecl {
  std::string name;
  friend bool operator==(const RailDecl&, const RailDecl&) = default;
};

enum class PortRole { kNone, kIn, kOut };

struct DualRailDecl {
  std::string name;
  PortRole role = PortRole::kNone;
  friend bool operator==(const DualRailDecl&, const DualRailDecl&) = default;
};

struct LockDecl {
  std::string name, half0, half1;
  std::optional<int> cell;
  friend bool operator==(const LockDecl&, const LockDecl&) = default;
};

// `in` may be clk<N>, which makes a fresh clock rail on phase N.
struct BalanceDecl {
  std::string name, in, side0, side1;
  std::optional<int> cell;
  friend bool operator==(const BalanceDecl&, const BalanceDecl&) = default;
};

struct RouteDecl {
  gates::RouteKind kind = gates::RouteKind::kLink;
  std::string name;
  std::vector<std::string> in, out;
  std::optional<int> cell;
  friend bool operator==(const RouteDecl&, const RouteDecl&) = default;
};

// Pins bind gate ports to dual rails, in the order written.
struct GateDecl {
  std::string kind;
  std::string name;
  std::vector<std::pair<std::string, std::string>> pins;
  int clock = 0;
  std::optional<int> cell;
  friend bool operator==(const GateDecl&, const GateDecl&) = default;
};

struct CellDecl {
  std::string name, in, out;
  int clock = 0;
  friend bool operator==(const CellDecl&, const CellDecl&) = default;
};

struct ChainDecl {
  std::string name, in, out;
  int cells = 1;
  int phase = 0;
  friend bool operator==(const ChainDecl&, const ChainDecl&) = default;
};

struct ClockDecl {
  int phases = 4;
  double rise = 0.1, high = 0.45, fall = 0.1, low = 0.35;
  friend bool operator==(const ClockDecl&, const ClockDecl&) = default;
};

struct VectorDecl {
  std::string name;
  std::vector<std::pair<std::string, std::vector<gates::DualRailValue>>> values;
  friend bool operator==(const VectorDecl&, const VectorDecl&) = default;
};

// r defaults to L.
struct GeometryDecl {
  double L = 1.0, k = 1.0, theta_on = 0.7853981633974483;
  std::optional<double> r;
  friend bool operator==(const GeometryDecl&, const GeometryDecl&) = default;
};

using Decl = std::variant<RailDecl, DualRailDecl, LockDecl, BalanceDecl, RouteDecl, GateDecl,
                          CellDecl, ChainDecl, ClockDecl, VectorDecl, GeometryDecl>;

struct Statement {
  Decl decl;
  int line = 0;
  int col = 0;
  std::vector<std::pair<std::string, int>> key_cols;  // column of each key=value

  int col_of(const std::string& key) const;

  // Location is not part of the value.
  friend bool operator==(const Statement& a, const Statement& b) { return a.decl == b.decl; }
};

struct NetlistDocument {
  std::vector<Statement> statements;
  friend bool operator==(const NetlistDocument&, const NetlistDocument&) = default;
};

// Grammar only; see build() for name resolution. Throws SyntaxError.
NetlistDocument parse_syntax(std::string_view text);

// parse_syntax followed by build(), so name and wiring errors surface here
// with their locations.
NetlistDocument parse(std::string_view text);

// Canonical text: one statement per line, no comments.
std::string serialize(const NetlistDocument& doc);
std::string serialize(const Statement& st);

}  // namespace linklogic::lnl
