#include "linklogic/lnl/document.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "linklogic/error.hpp"
#include "linklogic/gates/library.hpp"
#include "linklogic/lnl/build.hpp"

namespace linklogic::lnl {

int Statement::col_of(const std::string& key) const {
  for (const auto& [k, c] : key_cols)
    if (k == key) return c;
  return col;
}

namespace {

struct Token {
  std::string_view text;
  int col;
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '/' || c == '-'))
      return false;
  return true;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int line) : toks_(std::move(toks)), line_(line) {}

  [[noreturn]] void fail(int col, const std::string& msg) const { throw SyntaxError(msg, line_, col); }

  const Token& keyword() const { return toks_[0]; }

  // Positional word at index i.
  std::string word(std::size_t i, const char* what) {
    if (i >= toks_.size()) fail(end_col(), fmt::format("expected {}", what));
    const auto& t = toks_[i];
    if (t.text.find('=') != std::string_view::npos) fail(t.col, fmt::format("expected {}, got '{}'", what, t.text));
    if (!valid_name(t.text)) fail(t.col, fmt::format("invalid {} '{}'", what, t.text));
    used_ = std::max(used_, i + 1);
    return std::string(t.text);
  }

  bool has(std::size_t i) const { return i < toks_.size(); }
  const Token& at(std::size_t i) const { return toks_[i]; }

  // key=value pairs from index `from` on.
  void collect_pairs(std::size_t from) {
    for (std::size_t i = from; i < toks_.size(); ++i) {
      const auto& t = toks_[i];
      const auto eq = t.text.find('=');
      if (eq == std::string_view::npos || eq == 0 || eq + 1 == t.text.size())
        fail(t.col, fmt::format("expected key=value, got '{}'", t.text));
      std::string key(t.text.substr(0, eq));
      for (const auto& p : pairs_)
        if (p.key == key) fail(t.col, fmt::format("duplicate key '{}'", key));
      pairs_.push_back({key, std::string(t.text.substr(eq + 1)), t.col, static_cast<int>(t.col + eq + 1)});
    }
  }

  struct Pair {
    std::string key, value;
    int col, value_col;
  };
  const std::vector<Pair>& pairs() const { return pairs_; }

  const Pair* find(const std::string& key) {
    for (const auto& p : pairs_)
      if (p.key == key) {
        taken_.insert(key);
        return &p;
      }
    return nullptr;
  }

  const Pair& need(const std::string& key) {
    if (const Pair* p = find(key)) return *p;
    fail(end_col(), fmt::format("missing {}=", key));
  }

  std::string name_value(const Pair& p) const {
    if (!valid_name(p.value)) fail(p.value_col, fmt::format("invalid name '{}'", p.value));
    return p.value;
  }

  std::vector<std::string> name_list(const Pair& p) const {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
      auto comma = p.value.find(',', start);
      auto part = p.value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!valid_name(part)) fail(p.value_col + static_cast<int>(start), fmt::format("invalid name '{}'", part));
      out.push_back(part);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }

  int int_value(const Pair& p) const {
    int v = 0;
    auto [ptr, ec] = std::from_chars(p.value.data(), p.value.data() + p.value.size(), v);
    if (ec != std::errc{} || ptr != p.value.data() + p.value.size())
      fail(p.value_col, fmt::format("expected an integer for {}, got '{}'", p.key, p.value));
    return v;
  }

  double real_value(const Pair& p) const {
    double v = 0;
    auto [ptr, ec] = std::from_chars(p.value.data(), p.value.data() + p.value.size(), v);
    if (ec != std::errc{} || ptr != p.value.data() + p.value.size())
      fail(p.value_col, fmt::format("expected a number for {}, got '{}'", p.key, p.value));
    return v;
  }

  void no_extra_words(std::size_t from) const {
    if (from < toks_.size() && toks_[from].text.find('=') == std::string_view::npos)
      fail(toks_[from].col, fmt::format("unexpected '{}'", toks_[from].text));
  }

  void no_unknown_keys() const {
    for (const auto& p : pairs_)
      if (!taken_.count(p.key)) fail(p.col, fmt::format("unknown key '{}'", p.key));
  }

  int end_col() const {
    const auto& t = toks_.back();
    return t.col + static_cast<int>(t.text.size());
  }

  std::vector<std::pair<std::string, int>> key_cols() const {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& p : pairs_) out.emplace_back(p.key, p.col);
    return out;
  }

 private:
  std::vector<Token> toks_;
  int line_;
  std::size_t used_ = 1;
  std::vector<Pair> pairs_;
  std::set<std::string> taken_;
};

std::optional<int> opt_int(LineParser& lp, const std::string& key) {
  if (const auto* p = lp.find(key)) return lp.int_value(*p);
  return std::nullopt;
}

Decl parse_line(LineParser& lp) {
  const std::string kw(lp.keyword().text);
  if (kw == "rail") {
    RailDecl d{lp.word(1, "rail name")};
    lp.no_extra_words(2);
    lp.collect_pairs(2);
    lp.no_unknown_keys();
    return d;
  }
  if (kw == "dualrail") {
    DualRailDecl d{lp.word(1, "dual-rail name")};
    std::size_t next = 2;
    if (lp.has(2) && lp.at(2).text.find('=') == std::string_view::npos) {
      const auto role = lp.at(2).text;
      if (role == "in") d.role = PortRole::kIn;
      else if (role == "out") d.role = PortRole::kOut;
      else lp.fail(lp.at(2).col, fmt::format("expected 'in' or 'out', got '{}'", role));
      next = 3;
    }
    lp.no_extra_words(next);
    lp.collect_pairs(next);
    lp.no_unknown_keys();
    return d;
  }
  if (kw == "lock") {
    LockDecl d;
    d.name = lp.word(1, "lock name");
    lp.no_extra_words(2);
    lp.collect_pairs(2);
    d.half0 = lp.name_value(lp.need("half0"));
    d.half1 = lp.name_value(lp.need("half1"));
    d.cell = opt_int(lp, "cell");
    lp.no_unknown_keys();
    return d;
  }
  if (kw == "balance") {
    BalanceDecl d;
    d.name = lp.word(1, "balance name");
    lp.no_extra_words(2);
    lp.collect_pairs(2);
    d.in = lp.name_value(lp.need("in"));
    d.side0 = lp.name_value(lp.need("side0"));
    d.side1 = lp.name_value(lp.need("side1"));
    d.cell = opt_int(lp, "cell");
    lp.no_unknown_keys();
    return d;
  }
  if (kw == "route") {
    RouteDecl d;
    const std::string kind = lp.word(1, "route kind");
    auto k = gates::parse_route_kind(kind);
    if (!k) lp.fail(lp.at(1).col, fmt::format("unknown route kind '{}'", kind));
    d.kind = *k;
    d.name = lp.word(2, "route name");
    lp.no_extra_words(3);
    lp.collect_pairs(3);
    d.in = lp.name_list(lp.need("in"));
    d.out = lp.name_list(lp.need("out"));
    d.cell = opt_int(lp, "cell");
    lp.no_unknown_keys();
    return d;
  }
  if (kw == "gate") {
    GateDecl d;
    d.kind = lp.word(1, "gate kind");
    if (!gates::parse_gate_kind(d.kind)) lp.fail(lp.at(1).col, fmt::format("unknown gate kind '{}'", d.kind));
    d.name = lp.word(2, "gate name");
    lp.no_extra_words(3);
    lp.collect_pairs(3);
    d.clock = lp.int_value(lp.need("clock"));
    d.cell = opt_int(lp, "cell");
    for (const auto& p : lp.pairs()) {
      if (p.key == "clock" || p.key == "cell") continue;
      lp.find(p.key);
      d.pins.emplace_back(p.key, lp.name_value(p));
    }
    return d;
  }
  if (kw == "cell") {
    CellDecl d;
    d.name = lp.word(1, "cell name");
    lp.no_extra_words(2);
    lp.collect_pairs(2);
    d.in = lp.name_value(lp.need("in"));
    d.out = lp.name_value(lp.need("out"));
    d.clock = lp.int_value(lp.need("clock"));
    lp.no_unknown_keys();
    return d;
  }
  if (kw == "chain") {
    ChainDecl d;
    d.name = lp.word(1, "chain name");
    lp.no_extra_words(2);
    lp.collect_pairs(2);
    d.in = lp.name_value(lp.need("in"));
    d.out = lp.name_value(lp.need("out"));
    d.cells = lp.int_value(lp.need("cells"));
    d.phase = opt_int(lp, "phase").value_or(0);
    lp.no_unknown_keys();
    return d;
  }
  if (kw == "clock") {
    ClockDecl d;
    lp.no_extra_words(1);
    lp.collect_pairs(1);
    d.phases = opt_int(lp, "phases").value_or(4);
    d.rise = lp.real_value(lp.need("rise"));
    d.high = lp.real_value(lp.need("high"));
    d.fall = lp.real_value(lp.need("fall"));
    d.low = lp.real_value(lp.need("low"));
    lp.no_unknown_keys();
    return d;
  }
  if (kw == "vector") {
    VectorDecl d;
    d.name = lp.word(1, "vector name");
    lp.no_extra_words(2);
    lp.collect_pairs(2);
    for (const auto& p : lp.pairs()) {
      lp.find(p.key);
      if (!valid_name(p.key)) lp.fail(p.col, fmt::format("invalid port name '{}'", p.key));
      std::vector<gates::DualRailValue> vals;
      std::size_t start = 0;
      while (true) {
        auto comma = p.value.find(',', start);
        auto part = p.value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (part != "0" && part != "1" && part != "b")
          lp.fail(p.value_col + static_cast<int>(start), fmt::format("expected 0, 1 or b, got '{}'", part));
        vals.push_back(gates::DualRailValue::parse(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      d.values.emplace_back(p.key, std::move(vals));
    }
    if (d.values.empty()) lp.fail(lp.end_col(), "vector assigns no ports");
    return d;
  }
  if (kw == "geometry") {
    GeometryDecl d;
    lp.no_extra_words(1);
    lp.collect_pairs(1);
    if (const auto* p = lp.find("L")) d.L = lp.real_value(*p);
    if (const auto* p = lp.find("k")) d.k = lp.real_value(*p);
    if (const auto* p = lp.find("r")) d.r = lp.real_value(*p);
    if (const auto* p = lp.find("theta_on")) d.theta_on = lp.real_value(*p);
    lp.no_unknown_keys();
    return d;
  }
  lp.fail(lp.keyword().col, fmt::format("unknown statement '{}'", kw));
}

std::string cell_suffix(const std::optional<int>& c) {
  return c ? fmt::format(" cell={}", *c) : std::string{};
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

struct Printer {
  std::string operator()(const RailDecl& d) const { return "rail " + d.name; }
  std::string operator()(const DualRailDecl& d) const {
    return "dualrail " + d.name + (d.role == PortRole::kIn ? " in" : d.role == PortRole::kOut ? " out" : "");
  }
  std::string operator()(const LockDecl& d) const {
    return fmt::format("lock {} half0={} half1={}{}", d.name, d.half0, d.half1, cell_suffix(d.cell));
  }
  std::string operator()(const BalanceDecl& d) const {
    return fmt::format("balance {} in={} side0={} side1={}{}", d.name, d.in, d.side0, d.side1,
                       cell_suffix(d.cell));
  }
  std::string operator()(const RouteDecl& d) const {
    return fmt::format("route {} {} in={} out={}{}", gates::to_string(d.kind), d.name, join(d.in),
                       join(d.out), cell_suffix(d.cell));
  }
  std::string operator()(const GateDecl& d) const {
    std::string s = fmt::format("gate {} {}", d.kind, d.name);
    for (const auto& [pin, rail] : d.pins) s += fmt::format(" {}={}", pin, rail);
    return s + fmt::format(" clock={}{}", d.clock, cell_suffix(d.cell));
  }
  std::string operator()(const CellDecl& d) const {
    return fmt::format("cell {} in={} out={} clock={}", d.name, d.in, d.out, d.clock);
  }
  std::string operator()(const ChainDecl& d) const {
    return fmt::format("chain {} in={} out={} cells={} phase={}", d.name, d.in, d.out, d.cells, d.phase);
  }
  std::string operator()(const ClockDecl& d) const {
    return fmt::format("clock phases={} rise={} high={} fall={} low={}", d.phases, d.rise, d.high, d.fall, d.low);
  }
  std::string operator()(const VectorDecl& d) const {
    std::string s = "vector " + d.name;
    for (const auto& [port, vals] : d.values) {
      s += " " + port + "=";
      for (std::size_t i = 0; i < vals.size(); ++i) s += (i ? "," : "") + std::string(vals[i].symbol());
    }
    return s;
  }
  std::string operator()(const GeometryDecl& d) const {
    return fmt::format("geometry L={} k={}{} theta_on={}", d.L, d.k, d.r ? fmt::format(" r={}", *d.r) : "",
                       d.theta_on);
  }
};

}  // namespace

NetlistDocument parse_syntax(std::string_view text) {
  NetlistDocument doc;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = tokenize(line);
    if (!toks.empty()) {
      LineParser lp(std::move(toks), line_no);
      Statement st;
      st.decl = parse_line(lp);
      st.line = line_no;
      st.col = lp.keyword().col;
      st.key_cols = lp.key_cols();
      doc.statements.push_back(std::move(st));
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return doc;
}

NetlistDocument parse(std::string_view text) {
  NetlistDocument doc = parse_syntax(text);
  build(doc);
  return doc;
}

std::string serialize(const Statement& st) { return std::visit(Printer{}, st.decl); }

std::string serialize(const NetlistDocument& doc) {
  std::string out;
  for (const auto& st : doc.statements) out += serialize(st) + "\n";
  return out;
}

}  // namespace linklogic::lnl
