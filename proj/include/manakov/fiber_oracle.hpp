#pragma once

// Monte Carlo estimate of the number of connected components of a classical
// fiber: sample S^2 x S^2, keep a thin shell around the target (x, y) and
// count clusters of the epsilon-neighbourhood graph.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "manakov/classical_em.hpp"

namespace manakov {

struct FiberOracleOptions {
  std::uint64_t samples = 2'000'000;
  /// Shell half-widths are delta * 2 in x and delta * |y_min| in y.
  double delta = 0.01;
  /// Link radius as a multiple of the median nearest-neighbour distance.
  double eps_multiplier = 4.0;
  /// Absolute link radius in R^6; overrides eps_multiplier when set.
  std::optional<double> eps;
  std::uint64_t seed = 7;
  std::size_t min_retained = 200;
  /// Components smaller than this fraction of the retained points are noise.
  double noise_fraction = 0.01;
  /// Sampling is split into this many independently seeded chunks.
  int chunks = 64;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

enum class OracleStatus { conclusive, inconclusive };

struct FiberOracleResult {
  double x = 0.0;
  double y = 0.0;
  OracleStatus status = OracleStatus::inconclusive;
  int components = 0;
  std::size_t retained = 0;
  double median_nn = 0.0;
  double eps = 0.0;
  /// Sizes of all graph components, largest first.
  std::vector<std::size_t> component_sizes;
};

/// Throws ValidationError if (x, y) lies within 3 delta (normalized units) of
/// the critical set.
FiberOracleResult fiber_component_oracle(const EMDiagram& diagram, double x, double y,
                                         const FiberOracleOptions& options = {});

/// A point well inside the region: the vertex centroid for I, III and IV,
/// the midpoint between F and the arc above it for II.
Point2 interior_probe(const EMDiagram& diagram, Region region);

}  // namespace manakov
