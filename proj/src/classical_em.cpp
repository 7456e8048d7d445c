#include "manakov/classical_em.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "manakov/errors.hpp"

namespace manakov {

namespace {

void check_denominator(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw ValidationError("parameters a and b must be finite");
  if (std::abs(1.0 - a - b) <= 1e-9)
    throw ValidationError("singular parameters: 1 - a - b = 0");
}

// Coefficients of X = sum c_m s_m t_m and
// Y = sum alpha_m (s_m^2 + t_m^2) + 2 beta_m s_m t_m.
struct Coefficients {
  std::array<double, 3> c, alpha, beta;
};

Coefficients coefficients(double a, double b) {
  const double d = 1.0 - a - b;
  const double c2 = (a - b - 1.0) / d;
  const double c3 = (b - a - 1.0) / d;
  Coefficients k;
  k.c = {1.0, c2, c3};
  k.alpha = {0.0, b * (1.0 - a), a * (1.0 - b)};
  k.beta = {0.0, b * (1.0 - a) * c3, a * (1.0 - b) * c2};
  return k;
}

double segment_distance(const Point2& p, const Point2& a, const Point2& b) {
  const Point2 ab = b - a;
  const double len2 = ab.squaredNorm();
  double t = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

double polygon_boundary_distance(const std::vector<Point2>& poly, const Point2& p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i)
    best = std::min(best, segment_distance(p, poly[i], poly[(i + 1) % poly.size()]));
  return best;
}

}  // namespace

Point2 classical_xy(double a, double b, const Eigen::Vector3d& s, const Eigen::Vector3d& t) {
  check_denominator(a, b);
  const Coefficients k = coefficients(a, b);
  double x = 0.0, y = 0.0;
  for (int m = 0; m < 3; ++m) {
    x += k.c[m] * s(m) * t(m);
    y += k.alpha[m] * (s(m) * s(m) + t(m) * t(m)) + 2.0 * k.beta[m] * s(m) * t(m);
  }
  return {x, y};
}

const Point2& CriticalValues::operator[](char name) const {
  switch (name) {
    case 'A': return A;
    case 'B': return B;
    case 'C': return C;
    case 'D': return D;
    case 'E': return E;
    case 'F': return F;
    default: throw std::out_of_range(std::string("no critical value named ") + name);
  }
}

double CriticalValues::diameter() const {
  const auto pts = points();
  double best = 0.0;
  for (const auto& p : pts)
    for (const auto& q : pts) best = std::max(best, (p - q).norm());
  return best;
}

CriticalValues critical_values(double a, double b) {
  check_denominator(a, b);
  const double d = 1.0 - a - b;
  CriticalValues v;
  v.B = {1.0, 0.0};
  v.C = {-1.0, 0.0};
  v.E = {(a - b - 1.0) / d, -4.0 * a * b * (1.0 - a) / d};
  v.F = {-(a - b - 1.0) / d, 4.0 * b * (1.0 - a) * (1.0 - b) / d};
  v.A = {(b - a - 1.0) / d, -4.0 * a * b * (1.0 - b) / d};
  v.D = {-(b - a - 1.0) / d, 4.0 * a * (1.0 - a) * (1.0 - b) / d};
  return v;
}

CriticalLines critical_lines(double a, double b) {
  check_denominator(a, b);
  CriticalLines l;
  l.L1 = {"L1", 2.0 * a * b, 1.0};
  l.L5 = {"L5", 2.0 * (1.0 - a) * (1.0 - b), 1.0};
  l.L6 = {"L6", 2.0 * a * (1.0 - a), -1.0};
  l.L7 = {"L7", 2.0 * b * (1.0 - b), -1.0};
  return l;
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> TorusChart::point(double phi_s, double phi_t) const {
  if (index < 1 || index > 3) throw ValidationError("torus index must be 1, 2 or 3");
  const int i = index - 1;
  const int j = i == 0 ? 1 : 0;
  const int k = i == 2 ? 1 : 2;
  Eigen::Vector3d s = Eigen::Vector3d::Zero(), t = Eigen::Vector3d::Zero();
  s(j) = std::cos(phi_s);
  s(k) = std::sin(phi_s);
  t(j) = std::cos(phi_t);
  t(k) = std::sin(phi_t);
  return {s, t};
}

Point2 restrict_to_torus(const TorusChart& chart, double a, double b, double phi_s,
                         double phi_t) {
  const auto [s, t] = chart.point(phi_s, phi_t);
  return classical_xy(a, b, s, t);
}

double rank_determinant(const TorusChart& chart, double a, double b, double phi_s,
                        double phi_t) {
  check_denominator(a, b);
  const auto [s, t] = chart.point(phi_s, phi_t);
  const auto [ds, dt] = chart.point(phi_s + std::numbers::pi / 2, phi_t + std::numbers::pi / 2);
  // ds, dt are the phi-derivatives of s, t: rotating (cos, sin) by pi/2.
  const Coefficients k = coefficients(a, b);
  double xs = 0.0, xt = 0.0, ys = 0.0, yt = 0.0;
  for (int m = 0; m < 3; ++m) {
    xs += k.c[m] * ds(m) * t(m);
    xt += k.c[m] * s(m) * dt(m);
    ys += 2.0 * k.alpha[m] * s(m) * ds(m) + 2.0 * k.beta[m] * ds(m) * t(m);
    yt += 2.0 * k.alpha[m] * t(m) * dt(m) + 2.0 * k.beta[m] * s(m) * dt(m);
  }
  return xs * yt - xt * ys;
}

std::vector<TorusCurve> torus_critical_curves(double a, double b, int torus, int n) {
  check_denominator(a, b);
  if (torus < 1 || torus > 3) throw ValidationError("torus index must be 1, 2 or 3");
  if (n < 2) throw ValidationError("need at least two samples per curve");
  const TorusChart chart{torus};
  std::vector<TorusCurve> out;
  for (int branch : {1, -1}) {
    TorusCurve curve;
    curve.torus = torus;
    curve.branch = branch;
    for (int q = 1; q <= n; ++q) {
      const double phi_t = -std::numbers::pi + 2.0 * std::numbers::pi * q / n;
      const double t = std::tan(phi_t / 2.0);
      const double t2 = t * t;
      const double t4p1 = t2 * t2 + 1.0;
      double disc, num, den;
      if (torus == 1) {
        disc = a * (1.0 - b) * t4p1 + 2.0 * (2.0 * b - a * (1.0 + b)) * t2;
        num = (a - b - 1.0) * t;
        den = a * t2 + b - 1.0;
      } else if (torus == 2) {
        disc = (a - b) * t4p1 + 2.0 * (b * (a - 1.0) + a * (b - 1.0)) * t2;
        num = (a + b - 1.0) * t;
        den = -t2 + a - b;
      } else {
        disc = (b - a) * t4p1 + 2.0 * (b * (a - 1.0) + a * (b - 1.0)) * t2;
        num = (1.0 - a - b) * t;
        den = t2 + a - b;
      }
      if (!std::isfinite(t) || disc < 0.0 || std::abs(den) < 1e-12) continue;
      const double s = (num + branch * std::sqrt(disc)) / den;
      const double phi_s = 2.0 * std::atan(s);
      curve.angles.emplace_back(phi_s, phi_t);
      curve.image.push_back(restrict_to_torus(chart, a, b, phi_s, phi_t));
    }
    if (!curve.angles.empty()) out.push_back(std::move(curve));
  }
  return out;
}

CanonicalParams canonicalize(double a, double b) {
  const std::array<std::pair<bool, bool>, 4> moves = {
      std::pair{false, false}, std::pair{true, false}, std::pair{false, true},
      std::pair{true, true}};
  constexpr double slack = 1e-12;
  for (const auto& [swapped, reflected] : moves) {
    double ca = swapped ? b : a;
    double cb = swapped ? a : b;
    if (reflected) {
      ca = 1.0 - ca;
      cb = 1.0 - cb;
    }
    if (ca >= cb - slack && cb >= 1.0 - slack) return {ca, cb, swapped, reflected, true};
  }
  return {a, b, false, false, false};
}

std::optional<double> ParabolaArc::operator()(double xv) const {
  if (x.empty() || xv < x.front() || xv > x.back()) return std::nullopt;
  const auto it = std::upper_bound(x.begin(), x.end(), xv);
  if (it == x.end()) return y.back();
  const std::size_t hi = static_cast<std::size_t>(it - x.begin());
  if (hi == 0) return y.front();
  const std::size_t lo = hi - 1;
  const double w = (xv - x[lo]) / (x[hi] - x[lo]);
  return y[lo] + w * (y[hi] - y[lo]);
}

ParabolaArc parabola_arc(double a, double b, int samples) {
  std::vector<Point2> pts;
  for (int torus : {2, 3})
    for (const auto& curve : torus_critical_curves(a, b, torus, 40000))
      pts.insert(pts.end(), curve.image.begin(), curve.image.end());
  ParabolaArc arc;
  if (pts.size() < 2 || samples < 2) return arc;
  std::sort(pts.begin(), pts.end(),
            [](const Point2& p, const Point2& q) { return p.x() < q.x() || (p.x() == q.x() && p.y() < q.y()); });
  const double x0 = pts.front().x();
  const double x1 = pts.back().x();
  if (!(x1 > x0)) return arc;
  std::vector<double> sx, sy;
  for (const auto& p : pts) {
    if (!sx.empty() && p.x() == sx.back()) {
      sy.back() = std::max(sy.back(), p.y());
      continue;
    }
    sx.push_back(p.x());
    sy.push_back(p.y());
  }
  ParabolaArc raw{sx, sy};
  arc.x.resize(samples);
  arc.y.resize(samples);
  for (int i = 0; i < samples; ++i) {
    const double xv = i + 1 == samples ? x1 : x0 + (x1 - x0) * i / (samples - 1);
    arc.x[i] = xv;
    arc.y[i] = *raw(xv);
  }
  return arc;
}

std::string region_name(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
    case Region::boundary: return "boundary";
    case Region::outside: return "outside";
  }
  return "outside";
}

std::optional<int> component_count(Region r) {
  switch (r) {
    case Region::I:
    case Region::III:
    case Region::IV: return 2;
    case Region::II: return 4;
    case Region::outside: return 0;
    case Region::boundary: return std::nullopt;
  }
  return std::nullopt;
}

double EMDiagram::y_min() const {
  double m = 0.0;
  for (const auto& p : values.points()) m = std::min(m, p.y());
  return m;
}

double EMDiagram::y_extent() const {
  const double m = std::abs(y_min());
  return m > 0.0 ? m : 1.0;
}

Point2 EMDiagram::normalize(const Point2& p) const {
  return {(p.x() + 1.0) / x_extent(), (p.y() - y_min()) / y_extent()};
}

std::vector<Point2> EMDiagram::polygon(Region r) const {
  const CriticalValues& v = chamber_values;
  switch (r) {
    case Region::I: return {v.A, v.F, v.D, v.E};
    case Region::III: return {v.C, v.D, v.F};
    case Region::IV: return {v.A, v.F, v.B};
    case Region::II: {
      std::vector<Point2> poly{v.F};
      for (std::size_t i = arc.x.size(); i-- > 0;) poly.emplace_back(arc.x[i], arc.y[i]);
      return poly;
    }
    default: throw std::invalid_argument("no polygon for region " + region_name(r));
  }
}

double EMDiagram::normalized_diameter(Region r) const {
  std::vector<Point2> poly = polygon(r);
  for (auto& p : poly) p = normalize(p);
  double best = 0.0;
  for (const auto& p : poly)
    for (const auto& q : poly) best = std::max(best, (p - q).norm());
  return best;
}

double EMDiagram::normalized_boundary_distance(Region r, const Point2& p) const {
  std::vector<Point2> poly = polygon(r);
  for (auto& q : poly) q = normalize(q);
  return polygon_boundary_distance(poly, normalize(p));
}

double EMDiagram::normalized_distance_to_critical_set(const Point2& p) const {
  const Point2 np = normalize(p);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& line : chamber_lines.all()) {
    const Point2 p0 = normalize({line.anchor_x, 0.0});
    const Point2 p1 = normalize({line.anchor_x + 1.0, line.slope});
    const Point2 dir = (p1 - p0).normalized();
    const Point2 rel = np - p0;
    best = std::min(best, std::abs(rel.x() * dir.y() - rel.y() * dir.x()));
  }
  for (std::size_t i = 0; i + 1 < arc.x.size(); ++i)
    best = std::min(best, segment_distance(np, normalize({arc.x[i], arc.y[i]}),
                                           normalize({arc.x[i + 1], arc.y[i + 1]})));
  for (const auto& q : chamber_values.points()) best = std::min(best, (np - normalize(q)).norm());
  return best;
}

EMDiagram build_diagram(double a, double b) {
  check_denominator(a, b);
  EMDiagram d;
  d.a = a;
  d.b = b;
  d.canonical = canonicalize(a, b);
  d.values = critical_values(a, b);
  d.lines = critical_lines(a, b);
  if (d.canonical.in_chamber) {
    d.chamber_values = critical_values(d.canonical.a, d.canonical.b);
    d.chamber_lines = critical_lines(d.canonical.a, d.canonical.b);
    d.arc = parabola_arc(d.canonical.a, d.canonical.b);
  } else {
    d.chamber_values = d.values;
    d.chamber_lines = d.lines;
  }
  return d;
}

RegionLabel classify_point(const EMDiagram& diagram, double x, double y) {
  if (!diagram.canonical.in_chamber)
    throw std::domain_error("region predicates need parameters that map into a >= b >= 1");
  constexpr double band = 1e-9;
  const CriticalLines& l = diagram.chamber_lines;
  const double f1 = l.L1.offset(x, y);
  const double f5 = l.L5.offset(x, y);
  const double f6 = l.L6.offset(x, y);
  const double f7 = l.L7.offset(x, y);
  const auto label = [](Region r) { return RegionLabel{r, component_count(r)}; };

  if (f1 < -band || f6 < -band) return label(Region::outside);
  if (std::abs(f1) <= band || std::abs(f6) <= band || std::abs(f5) <= band ||
      std::abs(f7) <= band)
    return label(Region::boundary);
  if (f5 < 0 && f7 < 0) return label(Region::I);
  if (f5 > 0 && f7 < 0) return label(Region::III);
  if (f5 < 0 && f7 > 0) return label(Region::IV);
  const auto cap = diagram.arc(x);
  if (!cap) return label(Region::outside);
  if (std::abs(y - *cap) <= band) return label(Region::boundary);
  return label(y < *cap ? Region::II : Region::outside);
}

std::vector<std::string> ParameterClassification::conditions() const {
  std::vector<std::string> all = degenerate;
  all.insert(all.end(), symmetric.begin(), symmetric.end());
  return all;
}

ParameterClassification parameter_classification(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw ValidationError("parameters a and b must be finite");
  constexpr double tol = 1e-9;
  const auto near = [](double u, double v) { return std::abs(u - v) <= tol; };
  ParameterClassification c;
  if (near(a, 0.0)) c.degenerate.push_back("a=0");
  if (near(a, 1.0)) c.degenerate.push_back("a=1");
  if (near(b, 0.0)) c.degenerate.push_back("b=0");
  if (near(b, 1.0)) c.degenerate.push_back("b=1");
  if (near(a, b)) c.degenerate.push_back("a=b");
  if (near(a + b, 1.0)) c.degenerate.push_back("a+b=1");
  if (near(b, a + 1.0)) c.symmetric.push_back("b=a+1");
  if (near(b, a - 1.0)) c.symmetric.push_back("b=a-1");
  return c;
}

}  // namespace manakov
