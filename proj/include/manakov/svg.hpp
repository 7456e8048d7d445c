#pragma once

// Minimal direct SVG emission for the diagrams: scatter, polylines, labels.

#include <optional>
#include <string>
#include <vector>

#include "manakov/classical_em.hpp"
#include "manakov/joint_spectrum.hpp"
#include "manakov/monodromy.hpp"

namespace manakov {

struct PlotWindow {
  double x0, x1, y0, y1;
};

class SvgPlot {
 public:
  SvgPlot(const PlotWindow& window, int width = 800, int height = 600);

  void polyline(const std::vector<Point2>& pts, const std::string& color, double stroke = 1.5,
                bool dashed = false, bool closed = false);
  void scatter(const std::vector<Point2>& pts, const std::string& color, double radius = 2.0);
  void text(const Point2& at, const std::string& label, const std::string& color = "#000");
  void title(const std::string& t) { title_ = t; }
  std::string str() const;

 private:
  Point2 map(const Point2& p) const;
  bool visible(const Point2& p) const;

  PlotWindow w_;
  int width_, height_;
  std::string title_;
  std::string body_;
};

/// Critical lines (clipped to the diagram), parabola arc, critical values and region labels.
std::string diagram_svg(const EMDiagram& diagram);

/// Classical diagram overlaid with joint-spectrum points colored by irrep.
std::string spectrum_svg(const EMDiagram& diagram, const std::vector<JointEigenvalue>& entries,
                         const std::optional<PlotWindow>& window = std::nullopt);

/// Lattice points with the transport path and the initial and final cells.
std::string lattice_svg(const JointLattice& lattice, const MonodromyResult* result,
                        const std::string& title);

}  // namespace manakov
