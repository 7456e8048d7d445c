#include "manakov/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>

#include "manakov/io.hpp"

namespace manakov {

namespace {

constexpr int kMargin = 40;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

const std::array<const char*, 8> kIrrepColors = {"#1f77b4", "#aec7e8", "#d62728", "#ff9896",
                                                 "#2ca02c", "#98df8a", "#9467bd", "#c5b0d5"};

PlotWindow diagram_window(const EMDiagram& d) {
  PlotWindow w{-1.1, 1.1, 0.0, 0.0};
  double lo = 0.0, hi = 0.0;
  for (const auto& p : d.values.points()) {
    lo = std::min(lo, p.y());
    hi = std::max(hi, p.y());
  }
  const double pad = 0.05 * std::max(hi - lo, 1.0);
  w.y0 = lo - pad;
  w.y1 = hi + pad;
  return w;
}

// Segment of a critical line between its anchor and the farthest critical
// value lying on it.
std::vector<Point2> line_segment(const EMDiagram& d, const CriticalLine& l) {
  const Point2 anchor(l.anchor_x, 0.0);
  Point2 far = anchor;
  const double scale = std::max(1.0, d.y_extent());
  for (const auto& p : d.values.points())
    if (std::abs(l.offset(p.x(), p.y())) < 1e-9 * scale && (p - anchor).norm() > (far - anchor).norm())
      far = p;
  return {anchor, far};
}

}  // namespace

SvgPlot::SvgPlot(const PlotWindow& window, int width, int height)
    : w_(window), width_(width), height_(height) {}

Point2 SvgPlot::map(const Point2& p) const {
  const double u = (p.x() - w_.x0) / (w_.x1 - w_.x0);
  const double v = (p.y() - w_.y0) / (w_.y1 - w_.y0);
  return {kMargin + u * (width_ - 2 * kMargin), height_ - kMargin - v * (height_ - 2 * kMargin)};
}

bool SvgPlot::visible(const Point2& p) const {
  return p.x() >= w_.x0 && p.x() <= w_.x1 && p.y() >= w_.y0 && p.y() <= w_.y1;
}

void SvgPlot::polyline(const std::vector<Point2>& pts, const std::string& color, double stroke,
                       bool dashed, bool closed) {
  if (pts.size() < 2) return;
  body_ += closed ? "<polygon points=\"" : "<polyline points=\"";
  for (const auto& p : pts) {
    const Point2 q = map(p);
    body_ += num(q.x()) + "," + num(q.y()) + " ";
  }
  body_ += "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + num(stroke) + "\"";
  if (dashed) body_ += " stroke-dasharray=\"4 3\"";
  body_ += "/>\n";
}

void SvgPlot::scatter(const std::vector<Point2>& pts, const std::string& color, double radius) {
  for (const auto& p : pts) {
    if (!visible(p)) continue;
    const Point2 q = map(p);
    body_ += "<circle cx=\"" + num(q.x()) + "\" cy=\"" + num(q.y()) + "\" r=\"" + num(radius) +
             "\" fill=\"" + color + "\"/>\n";
  }
}

void SvgPlot::text(const Point2& at, const std::string& label, const std::string& color) {
  const Point2 q = map(at);
  body_ += "<text x=\"" + num(q.x() + 4) + "\" y=\"" + num(q.y() - 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" + color + "\">" +
           escape(label) + "</text>\n";
}

std::string SvgPlot::str() const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_) +
                    "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " +
                    std::to_string(width_) + " " + std::to_string(height_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<clipPath id=\"frame\"><rect x=\"" + std::to_string(kMargin) + "\" y=\"" +
         std::to_string(kMargin) + "\" width=\"" + std::to_string(width_ - 2 * kMargin) +
         "\" height=\"" + std::to_string(height_ - 2 * kMargin) + "\"/></clipPath>\n";
  out += "<rect x=\"" + std::to_string(kMargin) + "\" y=\"" + std::to_string(kMargin) +
         "\" width=\"" + std::to_string(width_ - 2 * kMargin) + "\" height=\"" +
         std::to_string(height_ - 2 * kMargin) + "\" fill=\"none\" stroke=\"#888\"/>\n";
  if (!title_.empty())
    out += "<text x=\"" + std::to_string(kMargin) + "\" y=\"24\" font-family=\"sans-serif\" "
           "font-size=\"14\">" + escape(title_) + "</text>\n";
  const std::string axes = "x [" + format_double(w_.x0).substr(0, 8) + ", " +
                           format_double(w_.x1).substr(0, 8) + "]  y [" +
                           format_double(w_.y0).substr(0, 8) + ", " +
                           format_double(w_.y1).substr(0, 8) + "]";
  out += "<text x=\"" + std::to_string(kMargin) + "\" y=\"" + std::to_string(height_ - 12) +
         "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555\">" + escape(axes) +
         "</text>\n";
  out += "<g clip-path=\"url(#frame)\">\n" + body_ + "</g>\n</svg>\n";
  return out;
}

namespace {

void draw_diagram(SvgPlot& plot, const EMDiagram& d) {
  for (const auto& l : d.lines.all()) {
    const auto seg = line_segment(d, l);
    plot.polyline(seg, "#444", 1.2);
  }
  std::vector<Point2> arc;
  for (std::size_t i = 0; i < d.arc.x.size(); ++i) arc.emplace_back(d.arc.x[i], d.arc.y[i]);
  plot.polyline(arc, "#444", 1.2);
  const auto names = CriticalValues::names();
  const auto pts = d.values.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    plot.scatter({pts[i]}, "#000", 3.0);
    plot.text(pts[i], std::string(1, names[i]));
  }
  if (!d.arc.empty()) {
    plot.text(d.arc.left(), "K", "#555");
    plot.text(d.arc.right(), "L", "#555");
  }
}

}  // namespace

std::string diagram_svg(const EMDiagram& d) {
  SvgPlot plot(diagram_window(d));
  plot.title("Energy-momentum diagram, a=" + format_double(d.a) + ", b=" + format_double(d.b));
  draw_diagram(plot, d);
  if (d.canonical.in_chamber && !d.arc.empty()) {
    for (Region r : {Region::I, Region::II, Region::III, Region::IV}) {
      Point2 c;
      if (r == Region::II) {
        const Point2 f = d.chamber_values.F;
        c = {f.x(), (f.y() + *d.arc(f.x())) / 2.0};
      } else {
        const auto poly = d.polygon(r);
        c = Point2::Zero();
        for (const auto& p : poly) c += p;
        c /= static_cast<double>(poly.size());
      }
      plot.text(c, region_name(r), "#a00");
    }
  }
  return plot.str();
}

std::string spectrum_svg(const EMDiagram& d, const std::vector<JointEigenvalue>& entries,
                         const std::optional<PlotWindow>& window) {
  SvgPlot plot(window ? *window : diagram_window(d));
  plot.title("Joint spectrum over the classical diagram, a=" + format_double(d.a) +
             ", b=" + format_double(d.b));
  draw_diagram(plot, d);
  std::array<std::vector<Point2>, 8> by_irrep;
  for (const auto& e : entries) by_irrep[e.irrep.index()].emplace_back(e.x, e.y);
  for (int i = 0; i < 8; ++i) plot.scatter(by_irrep[i], kIrrepColors[i], window ? 2.5 : 1.6);
  return plot.str();
}

std::string lattice_svg(const JointLattice& lattice, const MonodromyResult* result,
                        const std::string& title) {
  PlotWindow w{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
               std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& p : lattice.points) {
    w.x0 = std::min(w.x0, p.x());
    w.x1 = std::max(w.x1, p.x());
    w.y0 = std::min(w.y0, p.y());
    w.y1 = std::max(w.y1, p.y());
  }
  const double px = 0.05 * std::max(w.x1 - w.x0, 1e-9);
  const double py = 0.05 * std::max(w.y1 - w.y0, 1e-9);
  w = {w.x0 - px, w.x1 + px, w.y0 - py, w.y1 + py};
  SvgPlot plot(w);
  plot.title(title);
  plot.scatter(lattice.points, "#1f77b4", 1.8);
  if (result) {
    plot.polyline(result->path, "#888", 1.0, true);
    const auto cell_poly = [&](const LatticeCell& c) {
      const Point2 a = lattice.points[c.anchor];
      const Point2 p1 = lattice.points[c.p1];
      const Point2 p2 = lattice.points[c.p2];
      return std::vector<Point2>{a, p1, p1 + p2 - a, p2};
    };
    plot.polyline(cell_poly(result->initial), "#2ca02c", 2.0, false, true);
    plot.polyline(cell_poly(result->final), "#d62728", 2.0, true, true);
    plot.text(lattice.points[result->initial.anchor], "start", "#2ca02c");
  }
  return plot.str();
}

}  // namespace manakov
