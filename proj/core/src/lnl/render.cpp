#include "linklogic/lnl/render.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <map>
#include <optional>

#include "linklogic/error.hpp"
#include "linklogic/kinematics/linkages.hpp"
#include "linklogic/kinematics/solver.hpp"

namespace linklogic::lnl {

namespace {

using kinematics::Vec2;

constexpr double kScale = 100.0;

// Maps world coordinates into an SVG canvas with y pointing up.
class Canvas {
 public:
  Canvas(double width, double height) : w_(width), h_(height) {}

  void line(Vec2 a, Vec2 b) {
    body_ += fmt::format("<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"black\" stroke-width=\"4\"/>\n",
                         px(a.x), py(a.y), px(b.x), py(b.y));
  }

  void polygon(const std::vector<Vec2>& pts) {
    std::string p;
    for (const auto& v : pts) p += fmt::format("{}{:.3f},{:.3f}", p.empty() ? "" : " ", px(v.x), py(v.y));
    body_ += fmt::format("<polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"4\"/>\n", p);
  }

  void pin(Vec2 a) {
    body_ += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"6\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n",
                         px(a.x), py(a.y));
  }

  void anchor(Vec2 a) {
    const double x = px(a.x), y = py(a.y);
    body_ += fmt::format("<polygon points=\"{:.3f},{:.3f} {:.3f},{:.3f} {:.3f},{:.3f}\" fill=\"gray\" stroke=\"black\" stroke-width=\"2\"/>\n",
                         x, y, x - 10, y + 18, x + 10, y + 18);
    pin(a);
  }

  void text(Vec2 a, const std::string& s) {
    body_ += fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-family=\"monospace\" font-size=\"14\">{}</text>\n",
                         px(a.x), py(a.y), escape(s));
  }

  std::string str() const {
    const double W = w_ * kScale, H = h_ * kScale;
    return fmt::format(
               "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.3f}\" height=\"{:.3f}\" "
               "viewBox=\"0 0 {:.3f} {:.3f}\">\n"
               "<rect x=\"0\" y=\"0\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"white\"/>\n",
               W, H, W, H, W, H) +
           body_ + "</svg>\n";
  }

  Vec2 origin{};  // world point placed at the canvas bottom-left

 private:
  double px(double x) const { return (x - origin.x) * kScale; }
  double py(double y) const { return (h_ - (y - origin.y)) * kScale; }

  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '<') out += "&lt;";
      else if (c == '>') out += "&gt;";
      else if (c == '&') out += "&amp;";
      else out += c;
    }
    return out;
  }

  double w_, h_;
  std::string body_;
};

// Solved lock configurations, one per input state.
class LockShapes {
 public:
  explicit LockShapes(const kinematics::LockGeometry& g)
      : g_(g), asm_(kinematics::lock_mechanism(g, true)) {}

  const kinematics::Configuration& get(bool a, bool b) {
    auto& slot = cache_[a * 2 + b];
    if (!slot) {
      const auto guess = kinematics::lock_pose(asm_.mechanism, g_, a ? g_.theta_on : 0.0, b ? g_.theta_on : 0.0);
      slot = kinematics::assemble(asm_.mechanism, guess);
    }
    return *slot;
  }

  const kinematics::Mechanism& mechanism() const { return asm_.mechanism; }

 private:
  kinematics::LockGeometry g_;
  kinematics::Assembly asm_;
  std::array<std::optional<kinematics::Configuration>, 4> cache_;
};

// Lock drawing spans x in [-L, 3L] and y in [-L/2, 7L/2] around its anchors.
void draw_lock(Canvas& cv, LockShapes& shapes, const kinematics::LockGeometry& g, bool a, bool b, Vec2 at) {
  const auto& m = shapes.mechanism();
  const auto& c = shapes.get(a, b);
  const Vec2 shift = at + Vec2{g.L, 0.5 * g.L};
  for (std::size_t i = 0; i < m.links().size(); ++i) {
    std::vector<Vec2> pts;
    for (std::size_t k = 0; k < m.links()[i].points.size(); ++k)
      pts.push_back(kinematics::world_point(m, c, i, k) + shift);
    if (pts.size() == 2) cv.line(pts[0], pts[1]);
    else cv.polygon(pts);
  }
  for (const auto& j : m.resolved_joints()) {
    if (j.anchored) cv.anchor(j.ground + shift);
    else cv.pin(kinematics::world_point(m, c, j.a, j.pa) + shift);
  }
}

// A balance is a bar with joints at both sides and its input in the middle;
// each end is lifted by its side rail.
void draw_balance(Canvas& cv, const kinematics::LockGeometry& g, bool in, bool s0, bool s1, Vec2 at) {
  const double L = g.L;
  const Vec2 left = at + Vec2{L, 1.5 * L + (s0 ? L : 0.0)};
  const Vec2 right = at + Vec2{3 * L, 1.5 * L + (s1 ? L : 0.0)};
  const Vec2 mid{0.5 * (left.x + right.x), 0.5 * (left.y + right.y)};
  cv.line(left, right);
  cv.line(mid, at + Vec2{2 * L, 0.5 * L + (in ? L : 0.0)});
  cv.pin(left);
  cv.pin(right);
  cv.pin(mid);
}

}  // namespace

std::string render_lock_svg(const kinematics::LockGeometry& g, bool input0, bool input1) {
  g.validate();
  LockShapes shapes(g);
  Canvas cv(4 * g.L, 4 * g.L);
  cv.origin = {-g.L, -0.5 * g.L};
  draw_lock(cv, shapes, g, input0, input1, cv.origin);
  return cv.str();
}

std::string render_frame_svg(const gates::Topology& topo, const gates::SimState& state,
                             const kinematics::LockGeometry& g) {
  g.validate();
  const auto& net = topo.netlist();
  auto on = [&](gates::RailId r) { return state.drive.at(r) != 0; };

  // Rows keyed by cell; unassigned elements go last.
  std::map<long, std::vector<gates::ElementRef>> rows;
  auto row_key = [](int cell) { return cell < 0 ? std::numeric_limits<long>::max() : long{cell}; };
  for (std::uint32_t i = 0; i < net.locks().size(); ++i)
    rows[row_key(net.locks()[i].cell)].push_back({gates::ElementKind::kLock, i});
  for (std::uint32_t i = 0; i < net.balances().size(); ++i)
    rows[row_key(net.balances()[i].cell)].push_back({gates::ElementKind::kBalance, i});

  std::size_t cols = 1;
  for (const auto& [_, r] : rows) cols = std::max(cols, r.size());
  const double slot = 4 * g.L;
  const double label = 0.3 * g.L;
  const double height = std::max<std::size_t>(rows.size(), 1) * (slot + label);
  Canvas cv(static_cast<double>(cols) * slot, height);

  LockShapes shapes(g);
  double y = height;
  for (const auto& [_, row] : rows) {
    y -= slot + label;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Vec2 at{static_cast<double>(c) * slot, y};
      const auto e = row[c];
      if (e.kind == gates::ElementKind::kLock) {
        const auto& l = net.locks()[e.index];
        draw_lock(cv, shapes, g, on(l.half[0]), on(l.half[1]), at);
      } else {
        const auto& b = net.balances()[e.index];
        draw_balance(cv, g, on(b.input), on(b.side[0]), on(b.side[1]), at);
      }
      cv.text(at + Vec2{0.1 * g.L, slot + 0.05 * g.L}, net.element_name(e));
    }
  }
  return cv.str();
}

std::vector<std::filesystem::path> render(const sequential::Trace& trace, const kinematics::LockGeometry& g,
                                          const std::filesystem::path& out_dir) {
  if (trace.frames.empty()) throw std::invalid_argument("render: empty trace");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoFailure(fmt::format("cannot create {}: {}", out_dir.string(), ec.message()));
  std::vector<std::filesystem::path> paths;
  for (std::size_t i = 0; i < trace.frames.size(); ++i) {
    const auto path = out_dir / fmt::format("frame_{:04d}.svg", i);
    std::ofstream f(path, std::ios::binary);
    f << render_frame_svg(*trace.topology, trace.frames[i].state, g);
    if (!f) throw IoFailure(fmt::format("cannot write {}", path.string()));
    paths.push_back(path);
  }
  return paths;
}

}  // namespace linklogic::lnl
