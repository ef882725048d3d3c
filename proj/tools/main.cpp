// linklogic command-line front end.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "linklogic/energy/energy.hpp"
#include "linklogic/error.hpp"
#include "linklogic/gates/evaluate.hpp"
#include "linklogic/lnl/build.hpp"
#include "linklogic/lnl/document.hpp"
#include "linklogic/lnl/render.hpp"
#include "linklogic/lnl/run.hpp"
#include "linklogic/lnl/trace_io.hpp"
#include "linklogic/sequential/isolation.hpp"

namespace {

using namespace linklogic;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kParse = 2, kValidation = 3, kSimulation = 4, kIo = 5 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownName:
    case ErrorKind::DuplicateName:
    case ErrorKind::ForbiddenWiring:
      return kParse;
    case ErrorKind::Validation:
    case ErrorKind::NonPeriodicProfile:
    case ErrorKind::CrosscheckFailed:
      return kValidation;
    case ErrorKind::IoFailure:
      return kIo;
    default:
      return kSimulation;
  }
}

int diagnose(std::string_view kind, int line, int col, const std::string& msg, int code) {
  // The message is JSON-quoted so the line splits cleanly on spaces outside quotes.
  fmt::print(stderr, "error: kind={} line={} col={} msg={}\n", kind, line, col, json(msg).dump());
  return code;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoFailure(fmt::format("cannot read {}", path));
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

lnl::BuiltDocument load(const std::string& path) { return lnl::build(lnl::parse(read_file(path))); }

lnl::Streams pick_vector(const lnl::BuiltDocument& doc, const std::string& name) {
  if (!name.empty()) return doc.vector(name);
  if (!doc.vectors.empty()) return doc.vectors.front().second;
  lnl::Streams zeros;
  for (const auto& p : doc.netlist.inputs()) zeros[p.name] = {gates::DualRailValue::zero()};
  return zeros;
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

void print_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "  " : "") + (i + 1 < r.size() ? pad(r[i], w[i]) : r[i]);
    fmt::print("{}\n", s);
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string sym(gates::DualRailValue v) { return std::string(v.symbol()); }

void write_trace(const sequential::Trace& trace, const std::string& path) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoFailure(fmt::format("cannot write {}", path));
  lnl::write_trace_jsonl(f, trace);
  if (!f) throw IoFailure(fmt::format("cannot write {}", path));
}

struct Common {
  std::string file;
  std::string vector;
  std::size_t cycles = 4;
  bool json_lines = false;
};

int cmd_run(const Common& c, const std::string& trace_path) {
  const auto doc = load(c.file);
  const auto res = lnl::run(doc, pick_vector(doc, c.vector), c.cycles);
  if (!res.sequential) {
    const auto vec = pick_vector(doc, c.vector);
    std::vector<std::string> header{"row"};
    for (const auto& p : doc.netlist.inputs()) header.push_back(p.name);
    for (const auto& o : res.outputs) header.push_back(o);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
      if (c.json_lines) {
        json rec;
        rec["row"] = i;
        for (const auto& p : doc.netlist.inputs()) rec["inputs"][p.name] = sym(vec.at(p.name).at(i));
        for (const auto& o : res.outputs) rec["outputs"][o] = sym(res.rows[i].at(o));
        fmt::print("{}\n", rec.dump());
        continue;
      }
      std::vector<std::string> r{std::to_string(i)};
      for (const auto& p : doc.netlist.inputs()) r.push_back(sym(vec.at(p.name).at(i)));
      for (const auto& o : res.outputs) r.push_back(sym(res.rows[i].at(o)));
      rows.push_back(std::move(r));
    }
    if (!c.json_lines) print_table(header, rows);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& o : res.outputs)
      for (const auto& s : res.samples.at(o)) {
        if (c.json_lines) {
          json rec;
          rec["t"] = s.t;
          rec["port"] = o;
          rec["value"] = sym(s.value);
          fmt::print("{}\n", rec.dump());
        } else {
          rows.push_back({fmt::format("{:.2f}", s.t), o, sym(s.value)});
        }
      }
    if (!c.json_lines) print_table({"t", "port", "value"}, rows);
  }
  write_trace(res.trace, trace_path);
  return kOk;
}

int cmd_truth_table(const Common& c) {
  const auto doc = load(c.file);
  const auto t = gates::truth_table(doc.netlist);
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : t.rows) {
    if (c.json_lines) {
      json rec;
      for (std::size_t i = 0; i < t.inputs.size(); ++i) rec["inputs"][t.inputs[i]] = int(r.in[i]);
      for (std::size_t i = 0; i < t.outputs.size(); ++i) rec["outputs"][t.outputs[i]] = int(r.out[i]);
      fmt::print("{}\n", rec.dump());
      continue;
    }
    std::vector<std::string> row;
    for (bool b : r.in) row.push_back(b ? "1" : "0");
    for (bool b : r.out) row.push_back(b ? "1" : "0");
    rows.push_back(std::move(row));
  }
  if (!c.json_lines) {
    std::vector<std::string> header = t.inputs;
    header.insert(header.end(), t.outputs.begin(), t.outputs.end());
    print_table(header, rows);
  }
  return kOk;
}

int cmd_check(const Common& c, int bound) {
  const auto doc = load(c.file);
  json rec;
  bool ok = true;
  if (doc.clock) {
    const auto rep = sequential::validate_clock(*doc.clock);
    rec["clock"] = rep.pass ? "PASS" : "FAIL";
    rec["overlap"] = rep.overlap;
    rec["dwell"] = rep.dwell;
    ok = ok && rep.pass;
  }
  rec["elements"] = doc.netlist.element_count();
  rec["rails"] = doc.netlist.rail_count();
  int iso = -1;
  if (ok) {
    const auto res = lnl::run(doc, pick_vector(doc, c.vector), c.cycles);
    iso = sequential::max_force_isolation(res.trace);
    rec["isolation"] = iso;
    rec["bound"] = bound;
    ok = iso <= bound;
  }
  rec["result"] = ok ? "PASS" : "FAIL";
  if (c.json_lines) {
    fmt::print("{}\n", rec.dump());
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : rec.items()) rows.push_back({k, v.is_string()           ? v.get<std::string>()
                              : v.is_number_float() ? fmt::format("{:.6g}", v.get<double>())
                                                    : v.dump()});
    print_table({"check", "value"}, rows);
  }
  if (!ok) {
    const std::string why = iso > bound ? fmt::format("force isolation {} exceeds {}", iso, bound) : "clock program rejected";
    return diagnose("Validation", doc.clock_line, 0, why, kValidation);
  }
  return kOk;
}

gates::PortValues parse_assignments(const std::vector<std::string>& items) {
  gates::PortValues out;
  for (const auto& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos) throw SyntaxError(fmt::format("expected port=value, got '{}'", it));
    const auto v = it.substr(eq + 1);
    if (v != "0" && v != "1") throw SyntaxError(fmt::format("expected 0 or 1 for {}, got '{}'", it.substr(0, eq), v));
    out[it.substr(0, eq)] = gates::DualRailValue::parse(v);
  }
  return out;
}

int cmd_reverse(const Common& c, const std::vector<std::string>& outputs) {
  const auto doc = load(c.file);
  const auto in = gates::evaluate_reverse(doc.netlist, parse_assignments(outputs));
  if (c.json_lines) {
    json rec;
    for (const auto& p : doc.netlist.inputs()) rec["inputs"][p.name] = sym(in.at(p.name));
    fmt::print("{}\n", rec.dump());
  } else {
    std::vector<std::string> header, row;
    for (const auto& p : doc.netlist.inputs()) {
      header.push_back(p.name);
      row.push_back(sym(in.at(p.name)));
    }
    print_table(header, {row});
  }
  return kOk;
}

void print_quantities(const std::vector<std::pair<std::string, double>>& q, bool jl) {
  if (jl) {
    json rec;
    for (const auto& [k, v] : q) rec[k] = v;
    fmt::print("{}\n", rec.dump());
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& [k, v] : q) rows.push_back({k, fmt::format("{:.6g}", v)});
  print_table({"quantity", "value"}, rows);
}

int cmd_render(const Common& c, const std::string& out_dir, bool reverse, const std::string& lock) {
  if (!lock.empty()) {
    if (lock.size() != 2 || (lock[0] != '0' && lock[0] != '1') || (lock[1] != '0' && lock[1] != '1'))
      throw SyntaxError(fmt::format("--lock expects 00, 10 or 01, got '{}'", lock));
    if (lock == "11") throw BindingViolation("lock state (1,1) cannot be assembled");
    kinematics::LockGeometry g;
    if (!c.file.empty()) g = load(c.file).geometry;
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const auto path = std::filesystem::path(out_dir) / fmt::format("lock_{}.svg", lock);
    std::ofstream f(path, std::ios::binary);
    f << lnl::render_lock_svg(g, lock[0] == '1', lock[1] == '1');
    if (!f) throw IoFailure(fmt::format("cannot write {}", path.string()));
    fmt::print("{}\n", path.string());
    return kOk;
  }
  if (c.file.empty()) throw ValidationError("render needs a netlist file or --lock");
  const auto doc = load(c.file);
  const auto vec = pick_vector(doc, c.vector);
  const auto res = reverse ? lnl::run_and_reverse(doc, vec, c.cycles) : lnl::run(doc, vec, c.cycles);
  const auto paths = lnl::render(res.trace, doc.geometry, out_dir);
  fmt::print("{} frames in {}\n", paths.size(), out_dir);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link-and-joint mechanical logic simulator"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* sub, bool file_required = true) {
    auto* opt = sub->add_option("file", c.file, "netlist (.lnl)");
    if (file_required) opt->required();
    sub->add_flag("--json-lines", c.json_lines, "one JSON record per line");
  };

  std::string trace_path;
  auto* run = app.add_subcommand("run", "simulate a netlist on one of its vectors");
  add_common(run);
  run->add_option("--vector", c.vector, "vector name (default: first declared)");
  run->add_option("--cycles", c.cycles, "clock cycles for clocked netlists")->capture_default_str();
  run->add_option("--trace", trace_path, "write JSON-lines element states to this file");

  auto* tt = app.add_subcommand("truth-table", "enumerate every input combination");
  add_common(tt);

  int bound = 2;
  auto* check = app.add_subcommand("check", "clock, wiring and force-isolation checks");
  add_common(check);
  check->add_option("--vector", c.vector, "vector to exercise");
  check->add_option("--cycles", c.cycles)->capture_default_str();
  check->add_option("--bound", bound, "largest allowed influence distance in cells")->capture_default_str();

  std::vector<std::string> outputs;
  auto* rev = app.add_subcommand("reverse", "recover inputs of a reversible netlist");
  add_common(rev);
  rev->add_option("--outputs", outputs, "port=value ...")->required()->delimiter(',');

  auto* energy = app.add_subcommand("energy", "dissipation, inertia and density estimates");
  energy->require_subcommand(1);
  energy::DragModel drag;
  double freq = 100e6;
  auto* e_drag = energy->add_subcommand("drag", "rotary drag per joint and per operation");
  e_drag->add_flag("--json-lines", c.json_lines, "one JSON record per line");
  e_drag->add_option("--k-rd", drag.k_rd, "J s rad^-2")->capture_default_str();
  e_drag->add_option("--joints", drag.joints_per_op)->capture_default_str();
  e_drag->add_option("--phi", drag.phi, "rad per operation")->capture_default_str();
  e_drag->add_option("--freq", freq, "Hz")->capture_default_str();
  energy::InertialModel inert;
  auto* e_inert = energy->add_subcommand("inertia", "sinusoidal motion of a moving mass");
  e_inert->add_flag("--json-lines", c.json_lines, "one JSON record per line");
  e_inert->add_option("--mass", inert.m, "kg")->capture_default_str();
  e_inert->add_option("--amplitude", inert.A, "m")->capture_default_str();
  e_inert->add_option("--freq", inert.f, "Hz")->capture_default_str();
  e_inert->add_option("--k-lateral", inert.k_lateral, "N/m")->capture_default_str();
  double temperature = 300.0;
  auto* e_land = energy->add_subcommand("landauer", "thermal energy scale");
  e_land->add_flag("--json-lines", c.json_lines, "one JSON record per line");
  e_land->add_option("--temperature", temperature, "K")->capture_default_str();
  double die = 0.028, cell_w = 640e-6, cell_h = 1070e-6;
  long long per_cell = 2;
  auto* e_mems = energy->add_subcommand("mems", "flexure cells per die");
  e_mems->add_flag("--json-lines", c.json_lines, "one JSON record per line");
  e_mems->add_option("--die", die, "die side, m")->capture_default_str();
  e_mems->add_option("--cell-w", cell_w, "m")->capture_default_str();
  e_mems->add_option("--cell-h", cell_h, "m")->capture_default_str();
  e_mems->add_option("--per-cell", per_cell, "transistor equivalents per cell")->capture_default_str();

  std::string out_dir = "frames";
  bool reverse = false;
  std::string lock;
  auto* render = app.add_subcommand("render", "write one SVG per trace event");
  add_common(render, false);
  render->add_option("--out", out_dir, "output directory")->capture_default_str();
  render->add_option("--vector", c.vector);
  render->add_option("--cycles", c.cycles)->capture_default_str();
  render->add_flag("--reverse", reverse, "append the reversed run");
  render->add_option("--lock", lock, "render a single lock state: 00, 10 or 01");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return diagnose("Usage", 0, 0, e.what(), kParse);
  }

  try {
    if (*run) return cmd_run(c, trace_path);
    if (*tt) return cmd_truth_table(c);
    if (*check) return cmd_check(c, bound);
    if (*rev) return cmd_reverse(c, outputs);
    if (*render) return cmd_render(c, out_dir, reverse, lock);
    if (*e_drag) {
      print_quantities({{"energy_per_joint_J", energy::drag_energy_per_joint(drag, freq)},
                        {"energy_per_op_J", energy::drag_energy_per_op(drag, freq)},
                        {"energy_time_Js", energy::energy_time_product(drag)}},
                       c.json_lines);
    } else if (*e_inert) {
      const auto r = energy::inertial_analysis(inert);
      print_quantities({{"v_max_m_s", r.v_max}, {"a_max_m_s2", r.a_max}, {"f_max_N", r.f_max},
                        {"deflection_m", r.deflection}},
                       c.json_lines);
    } else if (*e_land) {
      const auto r = energy::landauer_context(temperature);
      print_quantities({{"kT_J", r.kT}, {"kT_ln2_J", r.kT_ln2}}, c.json_lines);
    } else if (*e_mems) {
      const auto n = energy::mems_density(die, cell_w, cell_h, per_cell);
      print_quantities({{"transistor_equivalents", static_cast<double>(n)}}, c.json_lines);
    }
    return kOk;
  } catch (const Error& e) {
    return diagnose(to_string(e.kind()), e.line(), e.col(), e.what(), exit_code(e.kind()));
  } catch (const std::invalid_argument& e) {
    return diagnose("Validation", 0, 0, e.what(), kValidation);
  } catch (const std::exception& e) {
    return diagnose("Internal", 0, 0, e.what(), kSimulation);
  }
}
