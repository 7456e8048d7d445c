#pragma once

// Classical energy-momentum geometry: critical values, critical lines, torus
// critical curves, the parabola arc and region classification.

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace manakov {

using Point2 = Eigen::Vector2d;

/// Classical values of X and Y at (s, t) on S^2 x S^2.
Point2 classical_xy(double a, double b, const Eigen::Vector3d& s, const Eigen::Vector3d& t);

struct CriticalValues {
  Point2 A, B, C, D, E, F;

  std::array<Point2, 6> points() const { return {A, B, C, D, E, F}; }
  static std::array<char, 6> names() { return {'A', 'B', 'C', 'D', 'E', 'F'}; }
  const Point2& operator[](char name) const;
  /// Largest pairwise distance among the six points.
  double diameter() const;
};

/// Throws ValidationError when |1-a-b| <= 1e-9.
CriticalValues critical_values(double a, double b);

/// Y = slope * (X - anchor_x), anchored at (+1, 0) or (-1, 0).
struct CriticalLine {
  std::string name;
  double slope = 0.0;
  double anchor_x = 0.0;

  double operator()(double x) const { return slope * (x - anchor_x); }
  /// Signed vertical offset y - line(x).
  double offset(double x, double y) const { return y - (*this)(x); }
};

struct CriticalLines {
  CriticalLine L1, L5, L6, L7;

  std::array<CriticalLine, 4> all() const { return {L1, L5, L6, L7}; }
};

CriticalLines critical_lines(double a, double b);

/// Torus T_i (i = 1, 2, 3): s_i = t_i = 0, s_j = cos(phi_s), s_k = sin(phi_s)
/// with j < k, and the same for t.
struct TorusChart {
  int index = 1;

  std::pair<Eigen::Vector3d, Eigen::Vector3d> point(double phi_s, double phi_t) const;
};

Point2 restrict_to_torus(const TorusChart& chart, double a, double b, double phi_s, double phi_t);

/// Jacobian determinant of (X, Y) with respect to (phi_s, phi_t) on the torus,
/// evaluated in closed form. Zero exactly on critical points of the chart.
double rank_determinant(const TorusChart& chart, double a, double b, double phi_s, double phi_t);

struct TorusCurve {
  int torus = 1;
  int branch = 1;  // sign in front of the square root
  std::vector<Point2> angles;  // (phi_s, phi_t)
  std::vector<Point2> image;   // (x, y)
};

/// Critical curves s = tan(phi_s/2) as functions of t = tan(phi_t/2) on
/// torus i, sampled at n values of phi_t in (-pi, pi]. Branches without a
/// real range are omitted, so an empty result is valid.
std::vector<TorusCurve> torus_critical_curves(double a, double b, int torus, int n = 4096);

/// Parameters mapped into the chamber a >= b >= 1 by (a,b)->(b,a) and
/// (a,b)->(1-a,1-b); both maps preserve the critical-value set.
struct CanonicalParams {
  double a = 0.0;
  double b = 0.0;
  bool swapped = false;
  bool reflected = false;
  bool in_chamber = false;
};

CanonicalParams canonicalize(double a, double b);

/// Upper boundary of region II, sampled on a uniform x grid.
struct ParabolaArc {
  std::vector<double> x;
  std::vector<double> y;

  bool empty() const { return x.empty(); }
  Point2 left() const { return {x.front(), y.front()}; }   // K
  Point2 right() const { return {x.back(), y.back()}; }    // L
  /// Linear interpolation; nullopt outside [x.front(), x.back()].
  std::optional<double> operator()(double xv) const;
};

ParabolaArc parabola_arc(double a, double b, int samples = 1024);

enum class Region { I, II, III, IV, boundary, outside };

std::string region_name(Region r);
/// 2 for I/III/IV, 4 for II, 0 outside, nullopt on the boundary.
std::optional<int> component_count(Region r);

struct RegionLabel {
  Region region = Region::outside;
  std::optional<int> component_count;
};

struct EMDiagram {
  double a = 0.0;
  double b = 0.0;
  CanonicalParams canonical;
  CriticalValues values;
  CriticalLines lines;
  /// Values and lines evaluated at the canonical parameters; the point and
  /// line sets agree with `values`/`lines` but the labels follow the chamber.
  CriticalValues chamber_values;
  CriticalLines chamber_lines;
  ParabolaArc arc;

  /// Extents used to normalize the EM plane: u = (x+1)/2, v = (y-ymin)/|ymin|.
  double x_extent() const { return 2.0; }
  double y_extent() const;
  double y_min() const;
  Point2 normalize(const Point2& p) const;

  /// Raw-coordinate polygon of a region (I, II, III, IV).
  std::vector<Point2> polygon(Region r) const;
  /// Diameter of the region polygon in normalized coordinates.
  double normalized_diameter(Region r) const;
  /// Normalized distance from p to the boundary of the region polygon.
  double normalized_boundary_distance(Region r, const Point2& p) const;
  /// Normalized distance from p to the nearest critical line, arc or critical value.
  double normalized_distance_to_critical_set(const Point2& p) const;
};

/// Builds the full diagram. Region predicates need the canonical chamber;
/// outside it the diagram carries values and lines only (arc left empty).
EMDiagram build_diagram(double a, double b);

/// Throws std::domain_error if the diagram's parameters are outside the chamber.
RegionLabel classify_point(const EMDiagram& diagram, double x, double y);

struct ParameterClassification {
  std::vector<std::string> degenerate;  // a or b in {0,1}, a=b, a+b=1
  std::vector<std::string> symmetric;   // b = a +- 1

  bool regular() const { return degenerate.empty() && symmetric.empty(); }
  bool generic() const { return degenerate.empty(); }
  std::vector<std::string> conditions() const;
};

ParameterClassification parameter_classification(double a, double b);

}  // namespace manakov
