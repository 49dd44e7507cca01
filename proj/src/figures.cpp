#include "lemoine/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <vector>

namespace lemoine {

namespace {

const char* kStyle =
    ".triangle-side{stroke:#333;stroke-width:0.012;fill:none}"
    ".circumcircle{stroke:#999;stroke-width:0.008;fill:none}"
    ".aux-circle{stroke:#3d8f5f;stroke-width:0.008;fill:none}"
    ".aux-line{stroke:#3d8f5f;stroke-width:0.008;fill:none}"
    ".sixpoint-circle{stroke:#c43b3b;stroke-width:0.012;fill:none}"
    ".brocard-axis{stroke:#3a5fc4;stroke-width:0.008;stroke-dasharray:0.04,0.02;fill:none}"
    ".six-point{fill:#c43b3b;stroke:none}"
    ".center-mark{fill:#3a5fc4;stroke:none}"
    ".cevian-point{fill:#3d8f5f;stroke:none}"
    ".pivot{fill:#111;stroke:none}"
    ".label{font-family:monospace;font-size:0.09px;fill:#111;stroke:none}";

struct Canvas {
  std::vector<std::string> elements;
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;

  // SVG y grows downward; flip at emission.
  double fy(double y) const { return -y; }

  void grow(double x, double y, double pad = 0.0) {
    min_x = std::min(min_x, x - pad);
    max_x = std::max(max_x, x + pad);
    min_y = std::min(min_y, fy(y) - pad);
    max_y = std::max(max_y, fy(y) + pad);
  }

  void add(const char* fmt, ...) __attribute__((format(printf, 2, 3))) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    elements.emplace_back(buf);
  }

  void segment(const char* cls, const Point& p, const Point& q) {
    grow(p.x, p.y);
    grow(q.x, q.y);
    add("<line class=\"%s\" x1=\"%.17g\" y1=\"%.17g\" x2=\"%.17g\" y2=\"%.17g\"/>", cls, p.x,
        fy(p.y), q.x, fy(q.y));
  }

  void circle(const char* cls, const Circle& c) {
    double r = c.radius();
    grow(c.center.x, c.center.y, r);
    add("<circle class=\"%s\" cx=\"%.17g\" cy=\"%.17g\" r=\"%.17g\"/>", cls, c.center.x,
        fy(c.center.y), r);
  }

  void mark(const char* cls, const Point& p, double r) {
    grow(p.x, p.y, r);
    add("<circle class=\"%s\" cx=\"%.17g\" cy=\"%.17g\" r=\"%.17g\"/>", cls, p.x, fy(p.y), r);
  }

  void label(const Point& p, const std::string& text, double offset) {
    grow(p.x, p.y);
    add("<text class=\"label\" x=\"%.17g\" y=\"%.17g\">%s</text>", p.x + offset,
        fy(p.y) - offset, text.c_str());
  }

  std::string finish() const {
    double w = max_x - min_x;
    double h = max_y - min_y;
    double mx = 0.05 * w;
    double my = 0.05 * h;
    char head[320];
    std::snprintf(head, sizeof(head),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
                  "height=\"%.17g\" viewBox=\"%.17g %.17g %.17g %.17g\">",
                  800.0 * (h + 2 * my) / (w + 2 * mx), min_x - mx, min_y - my, w + 2 * mx,
                  h + 2 * my);
    std::string out = head;
    out += "<style>";
    out += kStyle;
    out += "</style>";
    for (const std::string& e : elements) out += e;
    out += "</svg>";
    return out;
  }
};

void draw_triangle(Canvas& cv, const Triangle& t) {
  cv.segment("triangle-side", t.a, t.b);
  cv.segment("triangle-side", t.b, t.c);
  cv.segment("triangle-side", t.c, t.a);
  cv.label(t.a, "A", 0.03);
  cv.label(t.b, "B", 0.03);
  cv.label(t.c, "C", 0.03);
}

void draw_six_points(Canvas& cv, const SixPointConfig& cfg, double dot) {
  for (size_t i = 0; i < cfg.points.size(); ++i) cv.mark("six-point", cfg.points[i], dot);
}

void draw_brocard(Canvas& cv, const TriangleContext& ctx) {
  if (ctx.equilateral_like()) return;
  Point dir = unit(ctx.cd.o - ctx.symmedian);
  double span = 1.6 * ctx.circumradius;
  Point mid = midpoint(ctx.cd.o, ctx.symmedian);
  cv.segment("brocard-axis", mid - span * dir, mid + span * dir);
}

void draw_trace(Canvas& cv, const SixPointConfig& cfg) {
  for (const Circle& c : cfg.trace.circles) cv.circle("aux-circle", c);
  if (!cfg.trace.lines.empty()) {
    // Render the through-pivot lines as the chords between their two points.
    cv.segment("aux-line", cfg.points[kAb], cfg.points[kAc]);
    cv.segment("aux-line", cfg.points[kBc], cfg.points[kBa]);
    cv.segment("aux-line", cfg.points[kCa], cfg.points[kCb]);
  }
  if (cfg.trace.cevian) {
    cv.mark("cevian-point", cfg.trace.cevian->a_p, 0.018);
    cv.mark("cevian-point", cfg.trace.cevian->b_p, 0.018);
    cv.mark("cevian-point", cfg.trace.cevian->c_p, 0.018);
    cv.label(cfg.trace.cevian->a_p, "A'", 0.03);
    cv.label(cfg.trace.cevian->b_p, "B'", 0.03);
    cv.label(cfg.trace.cevian->c_p, "C'", 0.03);
  }
}

std::string construction_figure(const TriangleContext& ctx, CircleKind kind, const Point& pivot,
                                bool with_omega, bool with_trace, bool with_axis) {
  Canvas cv;
  double dot = 0.02 * ctx.circumradius;
  SixPointConfig cfg = six_point_config(ctx, kind, pivot);
  draw_triangle(cv, ctx.tri);
  if (with_omega) cv.circle("circumcircle", ctx.cd.omega);
  if (with_trace) draw_trace(cv, cfg);
  cv.circle("sixpoint-circle", cfg.fitted);
  draw_six_points(cv, cfg, dot);
  if (with_axis) draw_brocard(cv, ctx);
  cv.mark("pivot", pivot, dot * 0.8);
  cv.label(pivot, "P", 0.03);
  cv.mark("center-mark", ctx.cd.o, dot * 0.8);
  cv.label(ctx.cd.o, "O", 0.03);
  return cv.finish();
}

std::string spectrum_figure(const TriangleContext& ctx) {
  if (ctx.equilateral_like())
    fail(ErrorCode::EquilateralDegenerate, "axis figure undefined for equilateral triangles");
  Canvas cv;
  double dot = 0.02 * ctx.circumradius;
  draw_triangle(cv, ctx.tri);
  cv.circle("circumcircle", ctx.cd.omega);
  draw_brocard(cv, ctx);
  cv.mark("pivot", ctx.symmedian, dot);
  cv.label(ctx.symmedian, "L", 0.03);
  cv.mark("center-mark", ctx.cd.o, dot);
  cv.label(ctx.cd.o, "O", 0.03);
  const std::array<std::pair<CircleKind, const char*>, 5> kinds = {{
      {CircleKind::First, "M1"},
      {CircleKind::Second, "M2"},
      {CircleKind::Third, "M3"},
      {CircleKind::Bui, "M4"},
      {CircleKind::New, "M5"},
  }};
  Point m2{}, m3{};
  for (const auto& [kind, name] : kinds) {
    SixPointConfig cfg = six_point_config(ctx, kind, ctx.symmedian);
    cv.mark("center-mark", cfg.fitted.center, dot * 0.8);
    cv.label(cfg.fitted.center, name, 0.025);
    if (kind == CircleKind::Second) m2 = cfg.fitted.center;
    if (kind == CircleKind::Third) m3 = cfg.fitted.center;
  }
  Point slot = midpoint(m2, m3);
  cv.mark("center-mark", slot, dot * 0.5);
  cv.label(slot, "open", 0.025);
  return cv.finish();
}

}  // namespace

std::string svg_figure(const TriangleContext& ctx, int fig_id) {
  const Point l = ctx.symmedian;
  switch (fig_id) {
    case 1: return construction_figure(ctx, CircleKind::First, l, true, true, true);
    case 2: return construction_figure(ctx, CircleKind::Second, l, true, true, true);
    case 3: return construction_figure(ctx, CircleKind::Third, l, true, true, true);
    case 4: return construction_figure(ctx, CircleKind::Bui, l, true, true, true);
    case 5: return construction_figure(ctx, CircleKind::New, l, true, true, true);
    case 6: return construction_figure(ctx, CircleKind::New, l, false, false, false);
    case 7: return construction_figure(ctx, CircleKind::New, ctx.gcenter, true, true, false);
    case 8: return spectrum_figure(ctx);
    default: fail(ErrorCode::InvalidArgument, "figure id must be in 1..8");
  }
}

}  // namespace lemoine
