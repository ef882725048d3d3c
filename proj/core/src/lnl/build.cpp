#include "linklogic/lnl/build.hpp"

#include <fmt/format.h>

#include <charconv>
#include <set>

#include "linklogic/error.hpp"
#include "linklogic/gates/library.hpp"
#include "linklogic/gates/simulator.hpp"
#include "linklogic/sequential/shift_cell.hpp"

namespace linklogic::lnl {

const Streams& BuiltDocument::vector(const std::string& name) const {
  for (const auto& [n, s] : vectors)
    if (n == name) return s;
  throw UnknownName(fmt::format("no vector named '{}'", name));
}

namespace {

[[noreturn]] void rethrow_at(const Error& e, int line, int col) {
  const std::string msg = e.what();
  switch (e.kind()) {
    case ErrorKind::SyntaxError: throw SyntaxError(msg, line, col);
    case ErrorKind::UnknownName: throw UnknownName(msg, line, col);
    case ErrorKind::DuplicateName: throw DuplicateName(msg, line, col);
    case ErrorKind::ForbiddenWiring: throw ForbiddenWiring(msg, line, col);
    case ErrorKind::Validation: throw ValidationError(msg, line, col);
    default: throw Error(e.kind(), msg, line, col);
  }
}

std::optional<int> clock_input(const std::string& s) {
  if (s.size() < 4 || s.compare(0, 3, "clk") != 0) return std::nullopt;
  int phase = 0;
  auto [ptr, ec] = std::from_chars(s.data() + 3, s.data() + s.size(), phase);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return phase;
}

class Builder {
 public:
  BuiltDocument run(const NetlistDocument& doc) {
    for (const auto& st : doc.statements) {
      st_ = &st;
      try {
        std::visit(*this, st.decl);
      } catch (const Error& e) {
        if (e.line() != 0) throw;
        rethrow_at(e, st.line, st.col);
      } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what(), st.line, st.col);
      }
    }
    if (has_sequential_ && !out_.clock)
      throw ValidationError(fmt::format("cells need a clock declaration (first at line {})", first_seq_line_),
                            first_seq_line_, 1);
    out_.sequential = out_.clock.has_value();
    try {
      gates::Topology topo(out_.netlist);
    } catch (const Error& e) {
      throw ValidationError(e.what());
    }
    return std::move(out_);
  }

  void operator()(const RailDecl& d) { out_.netlist.add_rail(d.name); }

  void operator()(const DualRailDecl& d) {
    const auto port = out_.netlist.add_dualrail(d.name);
    if (d.role == PortRole::kIn) out_.netlist.add_input(d.name, port);
    if (d.role == PortRole::kOut) out_.netlist.add_output(d.name, port);
  }

  void operator()(const LockDecl& d) {
    out_.netlist.add_lock(d.name, rail(d.half0, "half0"), rail(d.half1, "half1"), d.cell.value_or(-1));
    revalidate();
  }

  void operator()(const BalanceDecl& d) {
    gates::RailId in;
    if (auto phase = clock_input(d.in)) {
      check_phase(*phase, "in");
      in = out_.netlist.clock_rail(*phase);
    } else {
      in = rail(d.in, "in");
    }
    out_.netlist.add_balance(d.name, in, rail(d.side0, "side0"), rail(d.side1, "side1"), d.cell.value_or(-1));
    revalidate();
  }

  void operator()(const RouteDecl& d) {
    std::vector<gates::RailId> in, out;
    for (const auto& r : d.in) in.push_back(rail(r, "in"));
    for (const auto& r : d.out) out.push_back(rail(r, "out"));
    out_.netlist.add_route(d.name, d.kind, std::move(in), std::move(out), d.cell.value_or(-1));
    revalidate();
  }

  void operator()(const GateDecl& d) {
    const auto kind = *gates::parse_gate_kind(d.kind);
    check_phase(d.clock, "clock");
    std::set<std::string> ports;
    for (const auto& p : gates::gate_inputs(kind)) ports.insert(p);
    for (const auto& p : gates::gate_outputs(kind)) ports.insert(p);
    std::map<std::string, gates::DualRailPort> bindings;
    for (const auto& [pin, name] : d.pins) {
      if (!ports.count(pin))
        throw SyntaxError(fmt::format("gate {} has no pin '{}'", d.kind, pin), st_->line, st_->col_of(pin));
      bindings[pin] = dualrail(name, pin);
    }
    for (const auto& p : ports)
      if (!bindings.count(p))
        throw SyntaxError(fmt::format("gate {} '{}': pin {} is not bound", d.kind, d.name, p), st_->line, st_->col);
    out_.netlist.instantiate(gates::build_gate(kind), d.name + "/", bindings, d.clock,
                             d.cell.value_or(next_cell_++));
    revalidate();
  }

  void operator()(const CellDecl& d) {
    check_phase(d.clock, "clock");
    mark_sequential();
    sequential::add_shift_cell(out_.netlist, d.name, dualrail(d.in, "in"), dualrail(d.out, "out"), d.clock,
                               next_cell_++);
    revalidate();
  }

  void operator()(const ChainDecl& d) {
    if (d.cells < 1) throw ValidationError("chain needs at least one cell", st_->line, st_->col_of("cells"));
    check_phase(d.phase, "phase");
    mark_sequential();
    auto prev = dualrail(d.in, "in");
    const auto last = dualrail(d.out, "out");
    for (int k = 0; k < d.cells; ++k) {
      const auto next = k + 1 == d.cells ? last : out_.netlist.add_dualrail(fmt::format("{}.{}", d.name, k));
      sequential::add_shift_cell(out_.netlist, fmt::format("{}/c{}", d.name, k), prev, next, (d.phase + k) % 4,
                                 next_cell_++);
      prev = next;
    }
    revalidate();
  }

  void operator()(const ClockDecl& d) {
    if (out_.clock) throw ValidationError("more than one clock declaration", st_->line, st_->col);
    if (d.phases != 4)
      throw ValidationError(fmt::format("clock must have 4 phases, got {}", d.phases), st_->line,
                            st_->col_of("phases"));
    sequential::ClockProgram prog;
    prog.rise = d.rise;
    prog.high = d.high;
    prog.fall = d.fall;
    prog.low = d.low;
    prog.validate();
    out_.clock = prog;
    out_.clock_line = st_->line;
  }

  void operator()(const VectorDecl& d) {
    for (const auto& [n, s] : out_.vectors)
      if (n == d.name) throw DuplicateName(fmt::format("vector '{}' declared twice", d.name), st_->line, st_->col);
    Streams streams;
    for (const auto& [port, values] : d.values) {
      bool known = false;
      for (const auto& p : out_.netlist.inputs()) known = known || p.name == port;
      if (!known)
        throw UnknownName(fmt::format("vector '{}': no input port '{}'", d.name, port), st_->line,
                          st_->col_of(port));
      streams[port] = values;
    }
    out_.vectors.emplace_back(d.name, std::move(streams));
  }

  void operator()(const GeometryDecl& d) {
    kinematics::LockGeometry g;
    g.L = d.L;
    g.k = d.k;
    g.r = d.r.value_or(d.L);
    g.theta_on = d.theta_on;
    g.validate();
    out_.geometry = g;
  }

 private:
  gates::RailId rail(const std::string& name, const std::string& key) const {
    if (auto id = out_.netlist.find_rail(name)) return *id;
    throw UnknownName(fmt::format("undeclared rail '{}'", name), st_->line, st_->col_of(key));
  }

  gates::DualRailPort dualrail(const std::string& name, const std::string& key) const {
    auto r0 = out_.netlist.find_rail(name + ".0");
    auto r1 = out_.netlist.find_rail(name + ".1");
    if (!r0 || !r1) throw UnknownName(fmt::format("undeclared dual rail '{}'", name), st_->line, st_->col_of(key));
    return {*r0, *r1};
  }

  void check_phase(int phase, const std::string& key) const {
    if (phase < 0 || phase > 3)
      throw ValidationError(fmt::format("clock phase {} out of range 0..3", phase), st_->line, st_->col_of(key));
  }

  void mark_sequential() {
    if (!has_sequential_) first_seq_line_ = st_->line;
    has_sequential_ = true;
  }

  void revalidate() const {
    try {
      out_.netlist.validate();
    } catch (const ForbiddenWiring& e) {
      throw ForbiddenWiring(e.what(), st_->line, st_->col);
    } catch (const ValidationError&) {
      // Port sharing is checked once the document is complete.
    }
  }

  BuiltDocument out_;
  const Statement* st_ = nullptr;
  int next_cell_ = 0;
  bool has_sequential_ = false;
  int first_seq_line_ = 0;
};

}  // namespace

BuiltDocument build(const NetlistDocument& doc) {
  Builder b;
  BuiltDocument built = b.run(doc);
  built.netlist.validate();
  return built;
}

}  // namespace linklogic::lnl
