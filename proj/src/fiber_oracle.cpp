#include "manakov/fiber_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "manakov/errors.hpp"
#include "manakov/random.hpp"

namespace manakov {

namespace {

using Point6 = std::array<double, 6>;

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  for (;;) {
    Eigen::Vector3d v(standard_normal(rng), standard_normal(rng), standard_normal(rng));
    const double n = v.norm();
    if (n > 1e-12) return v / n;
  }
}

double dist2(const Point6& p, const Point6& q) {
  double s = 0.0;
  for (int k = 0; k < 6; ++k) s += (p[k] - q[k]) * (p[k] - q[k]);
  return s;
}

// Median over points of the distance to the nearest other point; the points
// are sorted by their first coordinate.
double median_nearest_neighbour(const std::vector<Point6>& pts) {
  const std::size_t n = pts.size();
  std::vector<double> nn(n);
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = pts[j][0] - pts[i][0];
      if (dx * dx >= best) break;
      best = std::min(best, dist2(pts[i], pts[j]));
    }
    for (std::size_t j = i; j-- > 0;) {
      const double dx = pts[i][0] - pts[j][0];
      if (dx * dx >= best) break;
      best = std::min(best, dist2(pts[i], pts[j]));
    }
    nn[i] = std::sqrt(best);
  }
  auto mid = nn.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(nn.begin(), mid, nn.end());
  return *mid;
}

std::vector<std::size_t> component_sizes(const std::vector<Point6>& pts, double eps) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  const double eps2 = eps * eps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n && pts[j][0] - pts[i][0] < eps; ++j)
      if (dist2(pts[i], pts[j]) < eps2) {
        const std::size_t ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
  std::vector<std::size_t> count(n, 0);
  for (std::size_t i = 0; i < n; ++i) ++count[find(i)];
  std::vector<std::size_t> sizes;
  for (std::size_t c : count)
    if (c > 0) sizes.push_back(c);
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace

FiberOracleResult fiber_component_oracle(const EMDiagram& diagram, double x, double y,
                                         const FiberOracleOptions& options) {
  if (!(options.delta > 0.0)) throw ValidationError("oracle shell delta must be positive");
  if (options.eps && !(*options.eps > 0.0)) throw ValidationError("oracle eps must be positive");
  if (!(options.eps_multiplier > 0.0))
    throw ValidationError("oracle eps multiplier must be positive");
  if (options.samples == 0 || options.chunks < 1)
    throw ValidationError("oracle needs a positive sample count and chunk count");
  const double clearance = diagram.normalized_distance_to_critical_set({x, y});
  if (clearance < 3.0 * options.delta) {
    std::ostringstream msg;
    msg << "probe (" << x << ", " << y << ") is not a regular value at this shell width: "
        << "normalized distance " << clearance << " to the critical set is below 3*delta = "
        << 3.0 * options.delta;
    throw ValidationError(msg.str());
  }

  const double hx = options.delta * diagram.x_extent();
  const double hy = options.delta * diagram.y_extent();
  const int chunks = options.chunks;
  std::vector<std::vector<Point6>> kept(chunks);
  const auto run_chunk = [&](int c) {
    const std::uint64_t lo = options.samples * static_cast<std::uint64_t>(c) / chunks;
    const std::uint64_t hi = options.samples * static_cast<std::uint64_t>(c + 1) / chunks;
    std::mt19937_64 rng = make_stream(options.seed, static_cast<std::uint64_t>(c));
    for (std::uint64_t q = lo; q < hi; ++q) {
      const Eigen::Vector3d s = random_unit(rng);
      const Eigen::Vector3d t = random_unit(rng);
      const Point2 v = classical_xy(diagram.a, diagram.b, s, t);
      if (std::abs(v.x() - x) < hx && std::abs(v.y() - y) < hy)
        kept[c].push_back({s(0), s(1), s(2), t(0), t(1), t(2)});
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(chunks));
  if (threads == 1) {
    for (int c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (int c = static_cast<int>(w); c < chunks; c += static_cast<int>(threads)) run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<Point6> pts;
  for (const auto& k : kept) pts.insert(pts.end(), k.begin(), k.end());

  FiberOracleResult result;
  result.x = x;
  result.y = y;
  result.retained = pts.size();
  if (pts.size() < options.min_retained) return result;

  std::sort(pts.begin(), pts.end());
  result.median_nn = median_nearest_neighbour(pts);
  result.eps = options.eps ? *options.eps : options.eps_multiplier * result.median_nn;
  result.component_sizes = component_sizes(pts, result.eps);
  const double floor = options.noise_fraction * static_cast<double>(pts.size());
  result.components = static_cast<int>(
      std::count_if(result.component_sizes.begin(), result.component_sizes.end(),
                    [&](std::size_t s) { return static_cast<double>(s) >= floor; }));
  result.status = OracleStatus::conclusive;
  return result;
}

Point2 interior_probe(const EMDiagram& diagram, Region region) {
  if (region == Region::II) {
    const Point2 f = diagram.chamber_values.F;
    const auto cap = diagram.arc(f.x());
    if (!cap) throw std::domain_error("region II has no arc above F for these parameters");
    return {f.x(), (f.y() + *cap) / 2.0};
  }
  const auto poly = diagram.polygon(region);
  Point2 sum = Point2::Zero();
  for (const auto& p : poly) sum += p;
  return sum / static_cast<double>(poly.size());
}

}  // namespace manakov
