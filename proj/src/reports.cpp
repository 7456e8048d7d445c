#include "manakov/reports.hpp"

namespace manakov {

json to_json(const Point2& p) { return json::array({p.x() + 0.0, p.y() + 0.0}); }

json classification_json(const ParameterClassification& c) {
  json j;
  j["regular"] = c.regular();
  j["generic"] = c.generic();
  j["degenerate"] = c.degenerate;
  j["symmetric"] = c.symmetric;
  return j;
}

json diagram_json(const EMDiagram& d) {
  json j;
  j["schema"] = 1;
  j["a"] = d.a;
  j["b"] = d.b;
  j["classification"] = classification_json(parameter_classification(d.a, d.b));
  json canon;
  canon["a"] = d.canonical.a;
  canon["b"] = d.canonical.b;
  canon["swapped"] = d.canonical.swapped;
  canon["reflected"] = d.canonical.reflected;
  canon["in_chamber"] = d.canonical.in_chamber;
  j["canonical"] = canon;

  json points = json::object();
  const auto names = CriticalValues::names();
  const auto pts = d.values.points();
  for (std::size_t i = 0; i < names.size(); ++i) points[std::string(1, names[i])] = to_json(pts[i]);
  j["critical_values"] = points;

  json lines = json::array();
  for (const auto& l : d.lines.all()) {
    json lj;
    lj["name"] = l.name;
    lj["slope"] = l.slope;
    lj["anchor"] = json::array({l.anchor_x, 0.0});
    lj["intercept"] = -l.slope * l.anchor_x;
    lines.push_back(lj);
  }
  j["critical_lines"] = lines;

  json arc = json::array();
  for (std::size_t i = 0; i < d.arc.x.size(); ++i) arc.push_back(json::array({d.arc.x[i], d.arc.y[i]}));
  j["parabola"] = arc;

  json regions = json::object();
  if (d.canonical.in_chamber && !d.arc.empty()) {
    for (Region r : {Region::I, Region::II, Region::III, Region::IV}) {
      json rj;
      rj["component_count"] = *component_count(r);
      json poly = json::array();
      for (const auto& p : d.polygon(r)) poly.push_back(to_json(p));
      rj["polygon"] = poly;
      regions[region_name(r)] = rj;
    }
  }
  j["regions"] = regions;
  return j;
}

json cluster_report_json(const JointSpectrum& spectrum, const std::vector<Cluster>& clusters,
                         const RegionMultiplicityReport& report) {
  json j;
  j["schema"] = 1;
  j["a"] = spectrum.params.a;
  j["b"] = spectrum.params.b;
  j["spin"] = spectrum.params.spin;
  j["tolerance"] = report.tolerance;
  j["eigenvalues"] = spectrum.entries.size();
  json counts = json::object();
  for (int i = 0; i < 8; ++i) counts[IrrepLabel::from_index(i).name()] = spectrum.counts[i];
  j["irrep_counts"] = counts;
  j["max_residual"] = spectrum.max_residual();

  json regions = json::object();
  for (const auto& t : report.tables) {
    json rj;
    rj["qualifying_clusters"] = t.clusters;
    if (const auto m = t.modal_size())
      rj["modal_size"] = *m;
    else
      rj["modal_size"] = nullptr;
    json hist = json::object();
    for (const auto& [size, n] : t.size_histogram) hist[std::to_string(size)] = n;
    rj["size_histogram"] = hist;
    json pats = json::object();
    for (const auto& [p, n] : t.patterns) pats[p] = n;
    rj["patterns"] = pats;
    regions[region_name(t.region)] = rj;
  }
  j["regions"] = regions;

  json cl = json::array();
  for (const auto& c : clusters) {
    if (c.size() < 2) continue;
    json cj;
    cj["centroid"] = to_json(c.centroid);
    cj["size"] = c.size();
    cj["spread"] = c.spread;
    cj["irreps"] = c.pattern();
    cl.push_back(cj);
  }
  j["clusters"] = cl;
  j["singletons"] = std::count_if(clusters.begin(), clusters.end(),
                                  [](const Cluster& c) { return c.size() == 1; });
  return j;
}

namespace {

json matrix_json(const Eigen::Matrix2i& m) {
  return json::array({json::array({m(0, 0), m(0, 1)}), json::array({m(1, 0), m(1, 1)})});
}

json cell_json(const LatticeCell& c, const JointLattice& lattice) {
  json j;
  j["anchor"] = to_json(lattice.points[c.anchor]);
  j["p1"] = to_json(lattice.points[c.p1]);
  j["p2"] = to_json(lattice.points[c.p2]);
  return j;
}

}  // namespace

json monodromy_json(const MonodromyResult& r, const JointLattice& lattice,
                    const std::string& preset) {
  json j;
  j["schema"] = 1;
  j["preset"] = preset;
  j["lattice"] = lattice.source;
  j["matrix"] = matrix_json(r.matrix);
  j["determinant"] = r.determinant();
  j["trace"] = r.matrix.trace();
  j["coefficients"] = json::array({json::array({r.coefficients(0, 0), r.coefficients(0, 1)}),
                                   json::array({r.coefficients(1, 0), r.coefficients(1, 1)})});
  j["max_integrality_error"] = r.max_integrality_error;
  j["anchor_returned"] = r.anchor_returned;
  j["basis_convention"] = r.basis_convention;
  j["initial_cell"] = cell_json(r.initial, lattice);
  j["final_cell"] = cell_json(r.final, lattice);
  json path = json::array();
  for (const auto& p : r.path) path.push_back(to_json(p));
  j["path"] = path;
  json log = json::array();
  for (const auto& s : r.snaps) {
    json e;
    e["step"] = s.path_index;
    e["position"] = to_json(s.position);
    e["cell"] = cell_json(s.cell, lattice);
    log.push_back(e);
  }
  j["snap_log"] = log;
  return j;
}

json oracle_json(const FiberOracleResult& r, const RegionLabel& label,
                 const FiberOracleOptions& options) {
  json j;
  j["probe"] = json::array({r.x, r.y});
  j["region"] = region_name(label.region);
  if (label.component_count)
    j["expected_components"] = *label.component_count;
  else
    j["expected_components"] = nullptr;
  j["status"] = r.status == OracleStatus::conclusive ? "conclusive" : "inconclusive";
  if (r.status == OracleStatus::conclusive)
    j["components"] = r.components;
  else
    j["components"] = nullptr;
  j["retained"] = r.retained;
  j["median_nn"] = r.median_nn;
  j["eps"] = r.eps;
  json sizes = json::array();
  for (std::size_t i = 0; i < r.component_sizes.size() && i < 8; ++i)
    sizes.push_back(r.component_sizes[i]);
  j["largest_components"] = sizes;
  j["samples"] = options.samples;
  j["delta"] = options.delta;
  j["seed"] = options.seed;
  return j;
}

}  // namespace manakov
