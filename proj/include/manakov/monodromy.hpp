#pragma once

// Joint-spectrum lattices, transport of elementary cells along closed paths
// and the resulting integer monodromy matrices.

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "manakov/classical_em.hpp"
#include "manakov/joint_spectrum.hpp"
#include "manakov/model.hpp"
#include "manakov/symmetry.hpp"

namespace manakov {

struct JointLattice {
  /// Chart coordinates: (x, y') in the limiting case, (x, y) otherwise.
  std::vector<Point2> points;
  std::string source;
  std::optional<IrrepLabel> irrep;
  ModelParams params;

  std::size_t size() const { return points.size(); }
};

/// Points (x, n) where n runs over the exact eigenvalues of Y' and x over the
/// eigenvalues of X restricted to the n-eigenspace. Requires S >= 4.
JointLattice limiting_lattice(int S);

/// Joint spectrum points of one irrep, chart (x, y).
JointLattice irrep_lattice(const JointSpectrum& spectrum, IrrepLabel irrep);
JointLattice irrep_lattice(const ModelParams& params, IrrepLabel irrep,
                           const JointSpectrumOptions& options = {});

/// Anchor plus two lattice points fixing the basis vectors anchor->p1, anchor->p2.
struct LatticeCell {
  std::size_t anchor = 0;
  std::size_t p1 = 0;
  std::size_t p2 = 0;

  Eigen::Matrix2d basis(const JointLattice& lattice) const;
};

struct ForbiddenPoint {
  std::string name;
  Point2 location;
};

struct TransportOptions {
  /// Largest path step between snaps, in units of the current basis.
  double max_step = 0.25;
  /// Two candidate distances closer than this abort the transport.
  double tie_tolerance = 1e-9;
  /// Largest allowed distance of a final basis coefficient from an integer.
  double integrality_tolerance = 0.35;
  /// Required clearance from every forbidden point, in basis units.
  double forbidden_margin = 2.0;
  std::vector<ForbiddenPoint> forbidden;
  /// Optional label for path locations used in error messages.
  std::function<std::string(const Point2&)> describe;
};

struct SnapEvent {
  std::size_t path_index = 0;
  Point2 position = Point2::Zero();
  LatticeCell cell;
};

struct MonodromyResult {
  /// Row i holds the coefficients of the transported basis vector i in the
  /// initial basis: e_i' = sum_j M_ij e_j.
  Eigen::Matrix2i matrix = Eigen::Matrix2i::Identity();
  Eigen::Matrix2d coefficients = Eigen::Matrix2d::Identity();
  std::vector<Point2> path;
  std::string basis_convention;
  LatticeCell initial;
  LatticeCell final;
  bool anchor_returned = false;
  double max_integrality_error = 0.0;
  std::vector<SnapEvent> snaps;

  int determinant() const { return matrix.determinant(); }
};

/// Transports `cell` along the closed polyline `path`. Throws NumericalError
/// on a snap tie, a degenerate cell, a path leaving the lattice's convex hull,
/// a forbidden-point violation or a non-integral final basis.
MonodromyResult transport_cell(const JointLattice& lattice, const std::vector<Point2>& path,
                               const LatticeCell& cell, const TransportOptions& options = {});

/// Closed ellipse traversed from `start_angle`; n + 1 points with the last equal to the first.
std::vector<Point2> ellipse_path(const Point2& center, double rx, double ry, double start_angle,
                                 bool counterclockwise, int n = 2000);

enum class LimitingBasis { standard, alternate };

struct LimitingLoop {
  Point2 center = Point2::Zero();
  double rx = 0.6;
  double ry = 0.25;
  double start_angle = 3.141592653589793;
  bool counterclockwise = true;
};

/// Initial cell at the lattice point nearest to `start`:
///  standard  = (ad, ab): ad the neighbour at smaller x in the same y' row,
///              ab the nearest point of the row above;
///  alternate = (ab, ad - ab).
LatticeCell limiting_cell(const JointLattice& lattice, const Point2& start, LimitingBasis basis);

/// Loop around the isolated singular value (0, 0) of the limiting lattice.
MonodromyResult limiting_monodromy(int S, LimitingBasis basis = LimitingBasis::standard,
                                   const LimitingLoop& loop = {},
                                   const TransportOptions& options = {});
MonodromyResult limiting_monodromy(const JointLattice& lattice, LimitingBasis basis,
                                   const LimitingLoop& loop, const TransportOptions& options = {});
/// Same transport along an arbitrary closed path; the cell is built at path.front().
MonodromyResult limiting_monodromy(const JointLattice& lattice, LimitingBasis basis,
                                   const std::vector<Point2>& path,
                                   const TransportOptions& options = {});

/// Cell from the two shortest independent neighbours of `anchor` in the
/// normalized EM plane (|sin angle| > 0.5).
LatticeCell local_cell(const JointLattice& lattice, std::size_t anchor, const EMDiagram& diagram);

struct GenericLoop {
  /// Semi-axes as fractions of the horizontal distance from F to D/A and of
  /// the vertical distance from F to the arc.
  double x_fraction = 0.7;
  double y_fraction = 0.6;
  /// Offset from straight below F, radians (clockwise traversal).
  double start_offset = 0.1;
  int points = 4000;
  /// Clearance from A, D, F, K, L in basis units. Between F and the arc there
  /// is room for only about four cells at S = 15, so the general 2.0 does not fit.
  double forbidden_margin = 1.5;
};

/// Closed loop around F visiting I -> III -> II -> IV -> I.
std::vector<Point2> generic_loop_path(const EMDiagram& diagram, const GenericLoop& loop = {});

/// Transport of a single-irrep cell along generic_loop_path. Rejects
/// degenerate parameters, parameters outside a > b > 1 after canonicalization
/// and S < 10.
MonodromyResult generic_monodromy(const ModelParams& params, IrrepLabel irrep,
                                  const JointSpectrumOptions& spectrum_options = {},
                                  const GenericLoop& loop = {},
                                  const TransportOptions& options = {});
MonodromyResult generic_monodromy(const JointSpectrum& spectrum, const EMDiagram& diagram,
                                  IrrepLabel irrep, const GenericLoop& loop = {},
                                  const TransportOptions& options = {});
/// Arbitrary closed path in the (x, y) plane. options.forbidden_margin is used as given.
MonodromyResult generic_monodromy(const JointSpectrum& spectrum, const EMDiagram& diagram,
                                  IrrepLabel irrep, const std::vector<Point2>& path,
                                  const TransportOptions& options);

struct StrataCrossing {
  std::string stratum;  // "DF", "KF", "FL", "AF"
  Region from = Region::I;
  Region to = Region::I;
  bool patterns_differ = false;
};

struct StrataPairingReport {
  std::array<RegionClusterTable, 4> tables;
  std::vector<StrataCrossing> crossings;
};

StrataPairingReport strata_pairing_report(const JointSpectrum& spectrum, const EMDiagram& diagram,
                                          double tol);

}  // namespace manakov
