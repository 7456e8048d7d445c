#include "manakov/joint_spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "manakov/errors.hpp"
#include "manakov/random.hpp"

namespace manakov {

double JointSpectrum::max_residual() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.residual);
  return m;
}

std::vector<JointEigenvalue> JointSpectrum::filter(IrrepLabel irrep) const {
  std::vector<JointEigenvalue> out;
  for (const auto& e : entries)
    if (e.irrep == irrep) out.push_back(e);
  return out;
}

namespace {

double spectral_norm(const Eigen::MatrixXd& sym) {
  if (sym.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

JointSpectrum joint_spectrum(const ModelOperators<double>& model,
                             const std::array<Projector, 8>& projectors,
                             const JointSpectrumOptions& options) {
  const Eigen::SparseMatrix<double> xs = sparse_view(model.X);
  const Eigen::SparseMatrix<double> ys = sparse_view(model.Y);

  JointSpectrum out;
  out.params = model.params;
  for (int i = 0; i < 8; ++i) {
    const Projector& projector = projectors[i];
    const Eigen::MatrixXd basis = block_basis(projector);
    const Eigen::MatrixXd xb = basis.transpose() * (xs * basis);
    const Eigen::MatrixXd yb = basis.transpose() * (ys * basis);
    const Eigen::MatrixXd xbs = (xb + xb.transpose()) / 2.0;
    const Eigen::MatrixXd ybs = (yb + yb.transpose()) / 2.0;
    const double nx = spectral_norm(xbs);
    const double ny = spectral_norm(ybs);
    const double ratio = ny > 0.0 ? xbs.norm() / ybs.norm() : 0.0;

    std::mt19937_64 rng = make_stream(options.seed, static_cast<std::uint64_t>(i));
    bool accepted = false;
    double worst = 0.0;
    std::vector<JointEigenvalue> block;
    for (int attempt = 0; attempt < options.max_redraws && !accepted; ++attempt) {
      const double mu = (0.3 + 0.4 * uniform01(rng)) * ratio;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(xbs + mu * ybs);
      block.clear();
      worst = 0.0;
      accepted = true;
      for (Eigen::Index q = 0; q < es.eigenvectors().cols(); ++q) {
        const Eigen::VectorXd v = es.eigenvectors().col(q);
        const Eigen::VectorXd xv = xbs * v;
        const Eigen::VectorXd yv = ybs * v;
        const double x = v.dot(xv);
        const double y = v.dot(yv);
        const double rx = (xv - x * v).norm();
        const double ry = (yv - y * v).norm();
        const double rel = std::max(nx > 0 ? rx / nx : rx, ny > 0 ? ry / ny : ry);
        worst = std::max(worst, rel);
        if (rel > options.residual_tolerance) accepted = false;
        block.push_back({x, y, projector.irrep, std::max(rx, ry)});
      }
      out.mixing[i] = mu;
    }
    if (!accepted) {
      std::ostringstream msg;
      msg << "joint eigenvectors of block " << projector.irrep.name() << " not resolved after "
          << options.max_redraws << " mixing draws (worst relative residual " << worst
          << "); the block likely has an exact joint degeneracy";
      throw NumericalError(msg.str());
    }
    out.counts[i] = static_cast<int>(block.size());
    out.entries.insert(out.entries.end(), block.begin(), block.end());
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const JointEigenvalue& l, const JointEigenvalue& r) {
              if (l.irrep.index() != r.irrep.index()) return l.irrep.index() < r.irrep.index();
              if (l.x != r.x) return l.x < r.x;
              return l.y < r.y;
            });
  return out;
}

JointSpectrum joint_spectrum(const ModelParams& params, const JointSpectrumOptions& options) {
  const auto model = build_xy<double>(params);
  const auto group = build_group(params.spin);
  return joint_spectrum(model, projectors(group), options);
}

std::string Cluster::pattern() const {
  std::vector<int> idx;
  for (const auto& m : members) idx.push_back(m.irrep.index());
  std::sort(idx.begin(), idx.end());
  std::string out;
  for (int i : idx) {
    if (!out.empty()) out += '+';
    out += IrrepLabel::from_index(i).name();
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(std::size_t i, std::size_t j) {
    i = find(i);
    j = find(j);
    if (i != j) parent[std::max(i, j)] = std::min(i, j);
  }
};

}  // namespace

std::vector<Cluster> find_clusters(const std::vector<JointEigenvalue>& spectrum, double tol) {
  if (!(tol > 0.0)) throw ValidationError("cluster tolerance must be positive");
  const std::size_t n = spectrum.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return spectrum[l].x < spectrum[r].x || (spectrum[l].x == spectrum[r].x && l < r);
  });
  UnionFind uf(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto& e = spectrum[order[p]];
    for (std::size_t q = p + 1; q < n; ++q) {
      const auto& f = spectrum[order[q]];
      if (f.x - e.x >= tol) break;
      if (std::hypot(f.x - e.x, f.y - e.y) < tol) uf.unite(order[p], order[q]);
    }
  }
  std::map<std::size_t, Cluster> groups;
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].members.push_back(spectrum[i]);
  std::vector<Cluster> out;
  out.reserve(groups.size());
  for (auto& [root, c] : groups) {
    Point2 sum = Point2::Zero();
    for (const auto& m : c.members) sum += Point2(m.x, m.y);
    c.centroid = sum / static_cast<double>(c.members.size());
    for (const auto& m : c.members)
      c.spread = std::max(c.spread, (Point2(m.x, m.y) - c.centroid).norm());
    std::sort(c.members.begin(), c.members.end(),
              [](const JointEigenvalue& l, const JointEigenvalue& r) {
                return l.irrep.index() < r.irrep.index() ||
                       (l.irrep.index() == r.irrep.index() && l.x < r.x);
              });
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Cluster& l, const Cluster& r) {
    if (l.centroid.x() != r.centroid.x()) return l.centroid.x() < r.centroid.x();
    return l.centroid.y() < r.centroid.y();
  });
  return out;
}

double default_cluster_tolerance(const EMDiagram& diagram) {
  return 1e-3 * diagram.values.diameter();
}

std::optional<int> RegionClusterTable::modal_size() const {
  std::optional<int> best;
  int best_count = 0;
  for (const auto& [size, count] : size_histogram)
    if (count > best_count) {
      best = size;
      best_count = count;
    }
  return best;
}

std::array<RegionClusterTable, 4> region_cluster_tables(const EMDiagram& diagram,
                                                        const std::vector<Cluster>& clusters,
                                                        double margin_fraction) {
  const std::array<Region, 4> regions = {Region::I, Region::II, Region::III, Region::IV};
  std::array<RegionClusterTable, 4> tables;
  std::array<double, 4> margins{};
  for (int r = 0; r < 4; ++r) {
    tables[r].region = regions[r];
    margins[r] = margin_fraction * diagram.normalized_diameter(regions[r]);
  }
  for (const auto& c : clusters) {
    const Region region = classify_point(diagram, c.centroid.x(), c.centroid.y()).region;
    const auto it = std::find(regions.begin(), regions.end(), region);
    if (it == regions.end()) continue;
    const int r = static_cast<int>(it - regions.begin());
    if (diagram.normalized_boundary_distance(region, c.centroid) < margins[r]) continue;
    ++tables[r].clusters;
    ++tables[r].size_histogram[c.size()];
    ++tables[r].patterns[c.pattern()];
  }
  return tables;
}

std::map<std::string, int> RegionMultiplicityReport::modal_sizes() const {
  std::map<std::string, int> out;
  for (const auto& t : tables)
    if (const auto m = t.modal_size()) out[region_name(t.region)] = *m;
  return out;
}

RegionMultiplicityReport region_multiplicity_report(const JointSpectrum& spectrum,
                                                    const EMDiagram& diagram, double tol) {
  RegionMultiplicityReport report;
  report.params = spectrum.params;
  report.tolerance = tol > 0.0 ? tol : default_cluster_tolerance(diagram);
  report.tables = region_cluster_tables(diagram, find_clusters(spectrum.entries, report.tolerance));
  return report;
}

RegionMultiplicityReport region_multiplicity_report(const ModelParams& params, double tol,
                                                    const JointSpectrumOptions& options) {
  const EMDiagram diagram = build_diagram(params.a, params.b);
  return region_multiplicity_report(joint_spectrum(params, options), diagram, tol);
}

}  // namespace manakov
