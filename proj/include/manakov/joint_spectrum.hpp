#pragma once

// Labeled joint spectrum of (X, Y), quasi-degenerate clusters and their
// distribution over the regions of the classical diagram.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "manakov/classical_em.hpp"
#include "manakov/model.hpp"
#include "manakov/symmetry.hpp"

namespace manakov {

struct JointEigenvalue {
  double x = 0.0;
  double y = 0.0;
  IrrepLabel irrep;
  /// max(||X v - x v||, ||Y v - y v||) inside the irrep block.
  double residual = 0.0;
};

struct JointSpectrumOptions {
  std::uint64_t seed = 1;
  int max_redraws = 5;
  /// Residuals are checked against this times the spectral norm of each block.
  double residual_tolerance = 1e-8;
};

struct JointSpectrum {
  ModelParams params;
  /// Sorted by irrep, then x, then y.
  std::vector<JointEigenvalue> entries;
  std::array<int, 8> counts{};
  /// Mixing constant finally used per irrep block.
  std::array<double, 8> mixing{};

  double max_residual() const;
  std::vector<JointEigenvalue> filter(IrrepLabel irrep) const;
};

/// Restricts X, Y to each irrep block and diagonalizes X_b + mu Y_b for a
/// random mu in [0.3, 0.7] ||X_b|| / ||Y_b||; throws NumericalError when five
/// redraws of mu all leave a residual above tolerance.
JointSpectrum joint_spectrum(const ModelOperators<double>& model,
                             const std::array<Projector, 8>& projectors,
                             const JointSpectrumOptions& options = {});
JointSpectrum joint_spectrum(const ModelParams& params, const JointSpectrumOptions& options = {});

struct Cluster {
  std::vector<JointEigenvalue> members;
  Point2 centroid = Point2::Zero();
  /// Largest distance from a member to the centroid.
  double spread = 0.0;

  int size() const { return static_cast<int>(members.size()); }
  /// Member irreps in canonical order joined by '+', e.g. "A_s+B2_s".
  std::string pattern() const;
};

/// Single-linkage grouping at Euclidean distance < tol in the (x, y) plane;
/// clusters sorted by centroid (x, then y).
std::vector<Cluster> find_clusters(const std::vector<JointEigenvalue>& spectrum, double tol);

/// 1e-3 times the largest distance between two critical values.
double default_cluster_tolerance(const EMDiagram& diagram);

struct RegionClusterTable {
  Region region = Region::I;
  int clusters = 0;
  std::map<int, int> size_histogram;
  std::map<std::string, int> patterns;

  /// Most frequent size; ties go to the smaller size.
  std::optional<int> modal_size() const;
};

/// Tallies clusters whose centroids sit inside regions I-IV at a normalized
/// distance of at least margin_fraction times the region diameter from the
/// region boundary.
std::array<RegionClusterTable, 4> region_cluster_tables(const EMDiagram& diagram,
                                                        const std::vector<Cluster>& clusters,
                                                        double margin_fraction = 0.05);

struct RegionMultiplicityReport {
  ModelParams params;
  double tolerance = 0.0;
  std::array<RegionClusterTable, 4> tables;

  std::map<std::string, int> modal_sizes() const;
};

/// tol <= 0 selects default_cluster_tolerance.
RegionMultiplicityReport region_multiplicity_report(const ModelParams& params, double tol = 0.0,
                                                    const JointSpectrumOptions& options = {});
RegionMultiplicityReport region_multiplicity_report(const JointSpectrum& spectrum,
                                                    const EMDiagram& diagram, double tol);

}  // namespace manakov
