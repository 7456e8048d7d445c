#include "manakov/monodromy.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "manakov/errors.hpp"

namespace manakov {

namespace {

struct Nearest {
  std::size_t index = 0;
  double best = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
};

Nearest nearest_point(const std::vector<Point2>& pts, const Point2& q, const Eigen::Matrix2d& metric) {
  Nearest n;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = (metric * (pts[i] - q)).norm();
    if (d < n.best) {
      n.second = n.best;
      n.best = d;
      n.index = i;
    } else if (d < n.second) {
      n.second = d;
    }
  }
  return n;
}

std::string format_point(const Point2& p) {
  std::ostringstream s;
  s.precision(6);
  s << "(" << p.x() << ", " << p.y() << ")";
  return s.str();
}

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Counterclockwise convex hull (Andrew's monotone chain).
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& l, const Point2& r) {
    return l.x() < r.x() || (l.x() == r.x() && l.y() < r.y());
  });
  if (pts.size() < 3) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool inside_hull(const std::vector<Point2>& hull, const Point2& p) {
  if (hull.size() < 3) return false;
  for (std::size_t i = 0; i < hull.size(); ++i)
    if (cross(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  return true;
}

}  // namespace

JointLattice limiting_lattice(int S) {
  if (S < 4) throw ValidationError("limiting lattice needs S >= 4, got " + std::to_string(S));
  const auto ops = build_limiting<double>(S);
  const double scale = ops.scale;
  std::map<long, std::vector<Eigen::Index>> rows;
  for (Eigen::Index i = 0; i < ops.Yprime.rows(); ++i) {
    const double m = 2.0 * ops.Yprime(i, i) / scale;
    const long key = std::lround(m);
    if (std::abs(m - static_cast<double>(key)) > 1e-9)
      throw NumericalError("Y' eigenvalue is not on the half-integer grid");
    rows[key].push_back(i);
  }
  JointLattice lattice;
  lattice.source = "limiting (x, y') lattice, S=" + std::to_string(S);
  lattice.params = ModelParams{2.0, 1.0, S};
  for (const auto& [key, idx] : rows) {
    const Eigen::Index n = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd sub(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) sub(r, c) = ops.X(idx[r], idx[c]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sub, Eigen::EigenvaluesOnly);
    for (Eigen::Index q = 0; q < n; ++q)
      lattice.points.emplace_back(es.eigenvalues()(q), static_cast<double>(key) * scale / 2.0);
  }
  return lattice;
}

JointLattice irrep_lattice(const JointSpectrum& spectrum, IrrepLabel irrep) {
  JointLattice lattice;
  lattice.irrep = irrep;
  lattice.params = spectrum.params;
  lattice.source = "joint spectrum, irrep " + irrep.name();
  for (const auto& e : spectrum.entries)
    if (e.irrep == irrep) lattice.points.emplace_back(e.x, e.y);
  return lattice;
}

JointLattice irrep_lattice(const ModelParams& params, IrrepLabel irrep,
                           const JointSpectrumOptions& options) {
  return irrep_lattice(joint_spectrum(params, options), irrep);
}

Eigen::Matrix2d LatticeCell::basis(const JointLattice& lattice) const {
  Eigen::Matrix2d b;
  b.col(0) = lattice.points.at(p1) - lattice.points.at(anchor);
  b.col(1) = lattice.points.at(p2) - lattice.points.at(anchor);
  return b;
}

MonodromyResult transport_cell(const JointLattice& lattice, const std::vector<Point2>& path,
                               const LatticeCell& cell, const TransportOptions& options) {
  const auto& pts = lattice.points;
  if (path.size() < 3) throw ValidationError("transport path needs at least three points");
  if (cell.anchor >= pts.size() || cell.p1 >= pts.size() || cell.p2 >= pts.size())
    throw ValidationError("cell refers to points outside the lattice");
  const Eigen::Matrix2d b0 = cell.basis(lattice);
  if (std::abs(b0.determinant()) <= 1e-12 * b0.col(0).norm() * b0.col(1).norm())
    throw ValidationError("initial cell basis vectors are linearly dependent");
  if ((b0.inverse() * (path.back() - path.front())).norm() > options.max_step)
    throw ValidationError("transport path is not closed");

  const auto where = [&](std::size_t k) {
    std::string s = "path point " + std::to_string(k) + " " + format_point(path[k]);
    if (options.describe) s += " [" + options.describe(path[k]) + "]";
    return s;
  };
  const std::vector<Point2> hull = convex_hull(pts);

  MonodromyResult result;
  result.path = path;
  result.initial = cell;
  LatticeCell current = cell;
  Eigen::Matrix2d basis = b0;

  const auto snap = [&](const Point2& target, const Eigen::Matrix2d& metric, std::size_t k,
                        const char* what) {
    const Nearest n = nearest_point(pts, target, metric);
    if (n.second - n.best < options.tie_tolerance) {
      std::ostringstream msg;
      msg << "snap ambiguity for " << what << " at " << where(k) << ": two lattice points at "
          << n.best << " basis units";
      throw NumericalError(msg.str());
    }
    return n;
  };

  for (std::size_t k = 1; k < path.size(); ++k) {
    const Point2 from = path[k - 1];
    const Point2 delta = path[k] - from;
    const double length = (basis.inverse() * delta).norm();
    const int substeps = std::max(1, static_cast<int>(std::ceil(length / options.max_step)));
    for (int q = 1; q <= substeps; ++q) {
      const Point2 c = from + delta * (static_cast<double>(q) / substeps);
      const Eigen::Matrix2d metric = basis.inverse();
      if (!inside_hull(hull, c))
        throw NumericalError("path leaves the convex support of the lattice at " + where(k));
      for (const auto& f : options.forbidden) {
        const double clearance = (metric * (c - f.location)).norm();
        if (clearance < options.forbidden_margin) {
          std::ostringstream msg;
          msg << "path comes within " << clearance << " cells of forbidden point " << f.name
              << " at " << where(k) << " (margin " << options.forbidden_margin << ")";
          throw NumericalError(msg.str());
        }
      }
      const Nearest anchor = snap(c, metric, k, "anchor");
      const Point2 pa = pts[anchor.index];
      const Nearest q1 = snap(pa + basis.col(0), metric, k, "first basis vector");
      const Nearest q2 = snap(pa + basis.col(1), metric, k, "second basis vector");
      // Per-direction displacement of the snapped endpoints, in units of the
      // current basis vectors.
      const double moved =
          std::max((metric * (pts[q1.index] - pa - basis.col(0))).cwiseAbs().maxCoeff(),
                   (metric * (pts[q2.index] - pa - basis.col(1))).cwiseAbs().maxCoeff());
      if (moved >= 0.5) {
        std::ostringstream msg;
        msg << "basis endpoint moved by " << moved << " of a cell (limit 0.5) at " << where(k);
        throw NumericalError(msg.str());
      }
      LatticeCell next{anchor.index, q1.index, q2.index};
      const Eigen::Matrix2d nb = next.basis(lattice);
      if (next.p1 == next.anchor || next.p2 == next.anchor || next.p1 == next.p2 ||
          std::abs((metric * nb).determinant()) < 0.25)
        throw NumericalError("cell degenerated at " + where(k));
      if (next.anchor != current.anchor || next.p1 != current.p1 || next.p2 != current.p2)
        result.snaps.push_back({k, c, next});
      current = next;
      basis = nb;
    }
  }

  result.final = current;
  result.anchor_returned = current.anchor == cell.anchor;
  result.coefficients = (b0.inverse() * basis).transpose();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double v = result.coefficients(i, j);
      const double r = std::round(v);
      result.max_integrality_error = std::max(result.max_integrality_error, std::abs(v - r));
      result.matrix(i, j) = static_cast<int>(r);
    }
  if (result.max_integrality_error > options.integrality_tolerance) {
    std::ostringstream msg;
    msg << "final cell is not an integral combination of the initial basis (coefficient "
        << "error " << result.max_integrality_error << " > " << options.integrality_tolerance
        << ")";
    throw NumericalError(msg.str());
  }
  if (std::abs(result.matrix.determinant()) != 1)
    throw NumericalError("monodromy matrix has determinant " +
                         std::to_string(result.matrix.determinant()));
  return result;
}

std::vector<Point2> ellipse_path(const Point2& center, double rx, double ry, double start_angle,
                                 bool counterclockwise, int n) {
  if (!(rx > 0.0) || !(ry > 0.0) || n < 8)
    throw ValidationError("ellipse needs positive radii and at least 8 points");
  std::vector<Point2> path;
  path.reserve(static_cast<std::size_t>(n) + 1);
  const double dir = counterclockwise ? 1.0 : -1.0;
  for (int i = 0; i < n; ++i) {
    const double th = start_angle + dir * 2.0 * std::numbers::pi * i / n;
    path.emplace_back(center.x() + rx * std::cos(th), center.y() + ry * std::sin(th));
  }
  path.push_back(path.front());
  return path;
}

LatticeCell limiting_cell(const JointLattice& lattice, const Point2& start, LimitingBasis basis) {
  const auto& pts = lattice.points;
  const int S = lattice.params.spin;
  const double row_step = 1.0 / (2.0 * std::sqrt(static_cast<double>(S) * (S + 1)));
  const double col_step = 2.0 / (2.0 * S + 1.0);
  Eigen::Matrix2d metric = Eigen::Vector2d(1.0 / col_step, 1.0 / row_step).asDiagonal();
  const Nearest a = nearest_point(pts, start, metric);
  if (a.second - a.best < 1e-9) throw NumericalError("ambiguous anchor for the limiting cell");
  const Point2 pa = pts[a.index];

  std::optional<std::size_t> ad, ab;
  double ab_gap = std::numeric_limits<double>::infinity(), ab_second = ab_gap;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double dv = pts[i].y() - pa.y();
    if (std::abs(dv) < 1e-9 && pts[i].x() < pa.x() - 1e-12 &&
        (!ad || pts[i].x() > pts[*ad].x()))
      ad = i;
    if (std::abs(dv - row_step) < 1e-9) {
      const double gap = std::abs(pts[i].x() - pa.x());
      if (gap < ab_gap) {
        ab_second = ab_gap;
        ab_gap = gap;
        ab = i;
      } else if (gap < ab_second) {
        ab_second = gap;
      }
    }
  }
  if (!ad || !ab) throw NumericalError("limiting cell needs a left neighbour and a row above");
  if (ab_second - ab_gap < 1e-9) throw NumericalError("ambiguous upper neighbour for the limiting cell");
  LatticeCell cell{a.index, *ad, *ab};
  if (basis == LimitingBasis::standard) return cell;

  const Eigen::Matrix2d b = cell.basis(lattice);
  const Point2 target = pa + b.col(0) - b.col(1);
  const Nearest n = nearest_point(pts, target, b.inverse());
  if (n.best >= 0.5 || n.second - n.best < 1e-9)
    throw NumericalError("alternate limiting cell has no unambiguous lattice point at ad - ab");
  return LatticeCell{a.index, *ab, n.index};
}

MonodromyResult limiting_monodromy(const JointLattice& lattice, LimitingBasis basis,
                                   const LimitingLoop& loop, const TransportOptions& options) {
  const auto path = ellipse_path(loop.center, loop.rx, loop.ry, loop.start_angle,
                                 loop.counterclockwise);
  MonodromyResult r = limiting_monodromy(lattice, basis, path, options);
  r.basis_convention += loop.counterclockwise ? "; loop counterclockwise" : "; loop clockwise";
  return r;
}

MonodromyResult limiting_monodromy(const JointLattice& lattice, LimitingBasis basis,
                                   const std::vector<Point2>& path,
                                   const TransportOptions& options) {
  if (path.empty()) throw ValidationError("transport path is empty");
  const LatticeCell cell = limiting_cell(lattice, path.front(), basis);
  TransportOptions opts = options;
  if (opts.forbidden.empty()) opts.forbidden.push_back({"O", Point2::Zero()});
  MonodromyResult r = transport_cell(lattice, path, cell, opts);
  r.basis_convention =
      basis == LimitingBasis::standard
          ? "(ad, ab): ad = left neighbour in the same y' row, ab = nearest point in the row above"
          : "(ab, ad - ab) built from the standard (ad, ab) cell";
  return r;
}

MonodromyResult limiting_monodromy(int S, LimitingBasis basis, const LimitingLoop& loop,
                                   const TransportOptions& options) {
  return limiting_monodromy(limiting_lattice(S), basis, loop, options);
}

LatticeCell local_cell(const JointLattice& lattice, std::size_t anchor, const EMDiagram& diagram) {
  const auto& pts = lattice.points;
  const Point2 origin = diagram.normalize(pts.at(anchor));
  std::vector<std::pair<double, std::size_t>> order;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != anchor) order.emplace_back((diagram.normalize(pts[i]) - origin).norm(), i);
  std::sort(order.begin(), order.end());
  if (order.size() < 2) throw NumericalError("lattice too small for a local cell");
  const std::size_t i1 = order[0].second;
  const Point2 u = diagram.normalize(pts[i1]) - origin;
  for (std::size_t k = 1; k < order.size(); ++k) {
    const Point2 w = diagram.normalize(pts[order[k].second]) - origin;
    const double s = std::abs(u.x() * w.y() - u.y() * w.x()) / (u.norm() * w.norm());
    if (s > 0.5) return LatticeCell{anchor, i1, order[k].second};
  }
  throw NumericalError("no independent neighbour pair around the anchor");
}

std::vector<Point2> generic_loop_path(const EMDiagram& diagram, const GenericLoop& loop) {
  const CriticalValues& v = diagram.chamber_values;
  const auto cap = diagram.arc(v.F.x());
  if (!cap) throw std::domain_error("no arc above F; the generic loop needs a > b > 1");
  const double dx = std::min(v.F.x() - v.D.x(), v.A.x() - v.F.x());
  const double dy = *cap - v.F.y();
  if (!(dx > 0.0) || !(dy > 0.0)) throw std::domain_error("degenerate region geometry around F");
  return ellipse_path(v.F, loop.x_fraction * dx, loop.y_fraction * dy,
                      -std::numbers::pi / 2 + loop.start_offset, false, loop.points);
}

MonodromyResult generic_monodromy(const JointSpectrum& spectrum, const EMDiagram& diagram,
                                  IrrepLabel irrep, const GenericLoop& loop,
                                  const TransportOptions& options) {
  TransportOptions opts = options;
  opts.forbidden_margin = loop.forbidden_margin;
  MonodromyResult r =
      generic_monodromy(spectrum, diagram, irrep, generic_loop_path(diagram, loop), opts);
  r.basis_convention += "; loop clockwise I -> III -> II -> IV -> I around F";
  return r;
}

MonodromyResult generic_monodromy(const JointSpectrum& spectrum, const EMDiagram& diagram,
                                  IrrepLabel irrep, const std::vector<Point2>& path,
                                  const TransportOptions& options) {
  if (path.empty()) throw ValidationError("transport path is empty");
  const JointLattice lattice = irrep_lattice(spectrum, irrep);
  const Point2 start = diagram.normalize(path.front());
  std::size_t anchor = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const double d = (diagram.normalize(lattice.points[i]) - start).norm();
    if (d < best) {
      best = d;
      anchor = i;
    }
  }
  LatticeCell cell = local_cell(lattice, anchor, diagram);
  // Re-anchor in the cell's own metric, which is what transport snaps with.
  for (int iter = 0; iter < 5; ++iter) {
    const Nearest n = nearest_point(lattice.points, path.front(), cell.basis(lattice).inverse());
    if (n.index == cell.anchor) break;
    cell = local_cell(lattice, n.index, diagram);
  }

  TransportOptions opts = options;
  if (opts.forbidden.empty()) {
    const CriticalValues& v = diagram.chamber_values;
    opts.forbidden = {{"A", v.A}, {"D", v.D}, {"F", v.F},
                      {"K", diagram.arc.left()}, {"L", diagram.arc.right()}};
  }
  if (!opts.describe)
    opts.describe = [&diagram](const Point2& p) {
      return "region " + region_name(classify_point(diagram, p.x(), p.y()).region);
    };
  MonodromyResult r = transport_cell(lattice, path, cell, opts);
  r.basis_convention = "irrep " + irrep.name() +
                       " sublattice; anchor nearest the path start, basis = two shortest "
                       "independent neighbours in the normalized EM plane";
  return r;
}

MonodromyResult generic_monodromy(const ModelParams& params, IrrepLabel irrep,
                                  const JointSpectrumOptions& spectrum_options,
                                  const GenericLoop& loop, const TransportOptions& options) {
  params.validate();
  const ParameterClassification cls = parameter_classification(params.a, params.b);
  if (!cls.generic()) {
    std::string why;
    for (const auto& c : cls.degenerate) why += (why.empty() ? "" : ", ") + c;
    throw ValidationError("generic monodromy needs a non-degenerate diagram; parameters satisfy " +
                          why);
  }
  const CanonicalParams canon = canonicalize(params.a, params.b);
  if (!canon.in_chamber || !(canon.a > canon.b + 1e-9) || !(canon.b > 1.0 + 1e-9))
    throw ValidationError("generic monodromy needs a > b > 1 up to the parameter symmetries");
  if (params.spin < 10)
    throw ValidationError("generic monodromy needs S >= 10 for a dense enough lattice");
  const EMDiagram diagram = build_diagram(params.a, params.b);
  return generic_monodromy(joint_spectrum(params, spectrum_options), diagram, irrep, loop, options);
}

StrataPairingReport strata_pairing_report(const JointSpectrum& spectrum, const EMDiagram& diagram,
                                          double tol) {
  StrataPairingReport report;
  const double t = tol > 0.0 ? tol : default_cluster_tolerance(diagram);
  report.tables = region_cluster_tables(diagram, find_clusters(spectrum.entries, t));
  const auto table = [&](Region r) -> const RegionClusterTable& {
    for (const auto& tb : report.tables)
      if (tb.region == r) return tb;
    throw std::logic_error("missing region table");
  };
  // Patterns of the modal cluster size only; stray clusters near strata are ignored.
  const auto keys = [](const RegionClusterTable& tb) {
    std::set<std::string> k;
    const auto modal = tb.modal_size();
    for (const auto& [p, n] : tb.patterns)
      if (modal && static_cast<int>(std::count(p.begin(), p.end(), '+')) + 1 == *modal)
        k.insert(p);
    return k;
  };
  const std::array<std::tuple<const char*, Region, Region>, 4> strata = {
      std::tuple{"DF", Region::I, Region::III}, std::tuple{"KF", Region::III, Region::II},
      std::tuple{"FL", Region::II, Region::IV}, std::tuple{"AF", Region::IV, Region::I}};
  for (const auto& [name, from, to] : strata)
    report.crossings.push_back({name, from, to, keys(table(from)) != keys(table(to))});
  return report;
}

}  // namespace manakov
