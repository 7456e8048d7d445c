#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "manakov/classical_em.hpp"
#include "manakov/errors.hpp"
#include "manakov/fiber_oracle.hpp"
#include "manakov/io.hpp"
#include "manakov/joint_spectrum.hpp"
#include "manakov/monodromy.hpp"
#include "manakov/reports.hpp"
#include "manakov/svg.hpp"

namespace fs = std::filesystem;
using namespace manakov;

namespace {

struct RunConfig {
  double a = 4.0;
  double b = 3.0;
  int spin = 15;
  std::optional<std::uint64_t> seed;
  fs::path out = "out";
  bool svg = false;

  std::optional<std::string> irrep;
  double tol = 0.0;
  bool unfolded = false;
  std::vector<double> window;

  std::string preset = "limiting";
  std::string basis = "standard";
  bool reverse = false;
  std::optional<fs::path> path;

  std::uint64_t samples = FiberOracleOptions{}.samples;
  double delta = FiberOracleOptions{}.delta;
  std::optional<double> eps;
  std::vector<double> probe;
};

void emit(const fs::path& file, const std::string& text) {
  write_text_file(file, text);
  std::cout << "wrote " << file.string() << "\n";
}

JointSpectrumOptions spectrum_options(const RunConfig& cfg) {
  JointSpectrumOptions o;
  if (cfg.seed) o.seed = *cfg.seed;
  return o;
}

bool is_limiting_case(double a, double b) {
  return std::abs(a - 2.0) < 1e-12 && std::abs(b - 1.0) < 1e-12;
}

int cmd_spectrum(const RunConfig& cfg) {
  if (cfg.unfolded) {
    if (!is_limiting_case(cfg.a, cfg.b))
      throw ValidationError("--unfolded is only defined for the limiting case a=2, b=1");
    if (cfg.irrep) throw ValidationError("--unfolded does not take --irrep");
    const JointLattice lattice = limiting_lattice(cfg.spin);
    emit(cfg.out / "unfolded.csv", lattice_csv(lattice, "yprime"));
    if (cfg.svg)
      emit(cfg.out / "unfolded.svg",
           lattice_svg(lattice, nullptr, "Unfolded (x, y') lattice, S=" + std::to_string(cfg.spin)));
    return exit_code::success;
  }

  const ModelParams params{cfg.a, cfg.b, cfg.spin};
  params.validate();
  std::optional<IrrepLabel> irrep;
  if (cfg.irrep) irrep = parse_irrep(*cfg.irrep);
  if (!cfg.window.empty() && !(cfg.window[0] < cfg.window[1] && cfg.window[2] < cfg.window[3]))
    throw ValidationError("--window needs x0 < x1 and y0 < y1");

  const JointSpectrum spectrum = joint_spectrum(params, spectrum_options(cfg));
  const auto entries = irrep ? spectrum.filter(*irrep) : spectrum.entries;
  emit(cfg.out / "spectrum.csv", spectrum_csv(entries));

  const EMDiagram diagram = build_diagram(cfg.a, cfg.b);
  if (diagram.canonical.in_chamber && !diagram.arc.empty()) {
    const double tol = cfg.tol > 0.0 ? cfg.tol : default_cluster_tolerance(diagram);
    const auto clusters = find_clusters(spectrum.entries, tol);
    const auto report = region_multiplicity_report(spectrum, diagram, tol);
    emit(cfg.out / "clusters.json", cluster_report_json(spectrum, clusters, report).dump(2) + "\n");
  }
  if (cfg.svg) {
    std::optional<PlotWindow> w;
    if (!cfg.window.empty()) w = PlotWindow{cfg.window[0], cfg.window[1], cfg.window[2], cfg.window[3]};
    emit(cfg.out / "spectrum.svg", spectrum_svg(diagram, entries, w));
  }
  return exit_code::success;
}

int refuse(const ParameterClassification& cls, double a, double b) {
  json j;
  j["schema"] = 1;
  j["a"] = a;
  j["b"] = b;
  j["classification"] = classification_json(cls);
  j["error"] = "degenerate parameters; the diagram is not generic";
  std::cerr << j.dump(2) << "\n";
  return exit_code::validation;
}

int cmd_classical(const RunConfig& cfg) {
  const ParameterClassification cls = parameter_classification(cfg.a, cfg.b);
  if (!cls.generic()) return refuse(cls, cfg.a, cfg.b);
  const EMDiagram diagram = build_diagram(cfg.a, cfg.b);
  emit(cfg.out / "diagram.json", diagram_json(diagram).dump(2) + "\n");
  if (cfg.svg) emit(cfg.out / "diagram.svg", diagram_svg(diagram));
  return exit_code::success;
}

std::vector<Point2> read_path(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError(file.string() + ": cannot open path file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError(file.string() + ": " + e.what());
  }
  if (!j.is_array()) throw ValidationError(file.string() + ": expected a list of [x, y] waypoints");
  std::vector<Point2> pts;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw ValidationError(file.string() + ": every waypoint must be [x, y]");
    pts.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  if (pts.size() < 3) throw ValidationError(file.string() + ": need at least three waypoints");
  if (pts.front() != pts.back()) pts.push_back(pts.front());
  // Densify so that consecutive points are close; transport substeps handle the rest.
  std::vector<Point2> dense{pts.front()};
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (int q = 1; q <= 50; ++q) dense.push_back(pts[i - 1] + (pts[i] - pts[i - 1]) * (q / 50.0));
  return dense;
}

int cmd_monodromy(const RunConfig& cfg) {
  std::string preset = cfg.preset;
  if (preset == "limiting-loop") preset = "limiting";
  if (preset == "generic-loop") preset = "generic";
  std::optional<std::vector<Point2>> custom;
  if (cfg.path) custom = read_path(*cfg.path);

  if (preset == "limiting") {
    if (cfg.irrep) throw ValidationError("the limiting preset does not take --irrep");
    const LimitingBasis basis =
        cfg.basis == "standard" ? LimitingBasis::standard : LimitingBasis::alternate;
    const JointLattice lattice = limiting_lattice(cfg.spin);
    emit(cfg.out / "lattice.csv", lattice_csv(lattice, "yprime"));
    MonodromyResult r;
    if (custom) {
      auto p = *custom;
      if (cfg.reverse) std::reverse(p.begin(), p.end());
      r = limiting_monodromy(lattice, basis, p);
    } else {
      LimitingLoop loop;
      loop.counterclockwise = !cfg.reverse;
      r = limiting_monodromy(lattice, basis, loop);
    }
    emit(cfg.out / "monodromy.json", monodromy_json(r, lattice, preset).dump(2) + "\n");
    if (cfg.svg)
      emit(cfg.out / "monodromy.svg",
           lattice_svg(lattice, &r, "Cell transport on the unfolded lattice, S=" +
                                        std::to_string(cfg.spin)));
    std::cout << "matrix [[" << r.matrix(0, 0) << "," << r.matrix(0, 1) << "],[" << r.matrix(1, 0)
              << "," << r.matrix(1, 1) << "]]\n";
    return exit_code::success;
  }
  if (preset != "generic") throw ValidationError("unknown preset '" + cfg.preset + "'");
  if (cfg.basis != "standard")
    throw ValidationError("--basis applies to the limiting preset only");

  const ModelParams params{cfg.a, cfg.b, cfg.spin};
  params.validate();
  // Runs the parameter guards once before the spectrum is computed.
  const ParameterClassification cls = parameter_classification(cfg.a, cfg.b);
  if (!cls.generic()) return refuse(cls, cfg.a, cfg.b);
  const CanonicalParams canon = canonicalize(cfg.a, cfg.b);
  if (!canon.in_chamber || !(canon.a > canon.b + 1e-9) || !(canon.b > 1.0 + 1e-9))
    throw ValidationError("generic monodromy needs a > b > 1 up to the parameter symmetries");
  if (cfg.spin < 10) throw ValidationError("generic monodromy needs S >= 10");

  const EMDiagram diagram = build_diagram(cfg.a, cfg.b);
  const JointSpectrum spectrum = joint_spectrum(params, spectrum_options(cfg));
  std::vector<IrrepLabel> irreps;
  if (cfg.irrep)
    irreps.push_back(parse_irrep(*cfg.irrep));
  else
    for (const IrrepLabel l : all_irreps()) irreps.push_back(l);

  const auto run = [&](IrrepLabel irrep) {
    if (!custom) {
      GenericLoop loop;
      auto p = generic_loop_path(diagram, loop);
      if (cfg.reverse) std::reverse(p.begin(), p.end());
      TransportOptions opts;
      opts.forbidden_margin = loop.forbidden_margin;
      MonodromyResult r = generic_monodromy(spectrum, diagram, irrep, p, opts);
      r.basis_convention += cfg.reverse ? "; loop counterclockwise around F"
                                        : "; loop clockwise I -> III -> II -> IV -> I around F";
      return r;
    }
    auto p = *custom;
    if (cfg.reverse) std::reverse(p.begin(), p.end());
    TransportOptions opts;
    opts.forbidden_margin = GenericLoop{}.forbidden_margin;
    return generic_monodromy(spectrum, diagram, irrep, p, opts);
  };

  if (irreps.size() == 1) {
    const MonodromyResult r = run(irreps[0]);
    const JointLattice lattice = irrep_lattice(spectrum, irreps[0]);
    emit(cfg.out / "lattice.csv", lattice_csv(lattice));
    emit(cfg.out / "monodromy.json", monodromy_json(r, lattice, preset).dump(2) + "\n");
    if (cfg.svg)
      emit(cfg.out / "monodromy.svg",
           lattice_svg(lattice, &r, "Cell transport, irrep " + irreps[0].name()));
    std::cout << "matrix [[" << r.matrix(0, 0) << "," << r.matrix(0, 1) << "],[" << r.matrix(1, 0)
              << "," << r.matrix(1, 1) << "]]\n";
    return exit_code::success;
  }

  // All irreps: one summary document; transport failures are recorded per irrep.
  json summary;
  summary["schema"] = 1;
  summary["preset"] = preset;
  summary["a"] = cfg.a;
  summary["b"] = cfg.b;
  summary["spin"] = cfg.spin;
  json results = json::object();
  int succeeded = 0;
  for (const IrrepLabel irrep : irreps) {
    const JointLattice lattice = irrep_lattice(spectrum, irrep);
    try {
      const MonodromyResult r = run(irrep);
      json doc = monodromy_json(r, lattice, preset);
      doc.erase("schema");
      results[irrep.name()] = doc;
      ++succeeded;
      std::cout << irrep.name() << ": matrix [[" << r.matrix(0, 0) << "," << r.matrix(0, 1)
                << "],[" << r.matrix(1, 0) << "," << r.matrix(1, 1) << "]]\n";
    } catch (const NumericalError& e) {
      results[irrep.name()] = json{{"error", e.what()}};
      std::cout << irrep.name() << ": " << e.what() << "\n";
    }
  }
  summary["succeeded"] = succeeded;
  summary["irreps"] = results;
  emit(cfg.out / "monodromy.json", summary.dump(2) + "\n");
  return succeeded > 0 ? exit_code::success : exit_code::numerical;
}

int cmd_components(const RunConfig& cfg) {
  // Degenerate diagrams have no automatic probes but explicit ones are fine.
  const ParameterClassification cls = parameter_classification(cfg.a, cfg.b);
  if (!cls.generic() && cfg.probe.empty()) return refuse(cls, cfg.a, cfg.b);
  ModelParams{cfg.a, cfg.b, 1}.validate();
  const EMDiagram diagram = build_diagram(cfg.a, cfg.b);
  FiberOracleOptions opts;
  opts.samples = cfg.samples;
  opts.delta = cfg.delta;
  opts.eps = cfg.eps;
  if (cfg.seed) opts.seed = *cfg.seed;

  std::vector<Point2> probes;
  if (!cfg.probe.empty()) {
    probes.emplace_back(cfg.probe[0], cfg.probe[1]);
  } else {
    if (!diagram.canonical.in_chamber || diagram.arc.empty())
      throw ValidationError("automatic probes need a > b > 1 up to the parameter symmetries; "
                            "pass --probe x y");
    for (Region r : {Region::I, Region::II, Region::III, Region::IV})
      probes.push_back(interior_probe(diagram, r));
  }

  json doc;
  doc["schema"] = 1;
  doc["a"] = cfg.a;
  doc["b"] = cfg.b;
  json list = json::array();
  bool inconclusive = false;
  for (const Point2& p : probes) {
    RegionLabel label;
    try {
      label = classify_point(diagram, p.x(), p.y());
    } catch (const std::domain_error& e) {
      throw ValidationError(e.what());
    }
    const FiberOracleResult r = fiber_component_oracle(diagram, p.x(), p.y(), opts);
    if (r.status == OracleStatus::inconclusive) inconclusive = true;
    list.push_back(oracle_json(r, label, opts));
    std::cout << region_name(label.region) << " (" << format_double(p.x()) << ", "
              << format_double(p.y()) << "): "
              << (r.status == OracleStatus::conclusive ? std::to_string(r.components)
                                                       : std::string("inconclusive"))
              << " (retained " << r.retained << ")\n";
  }
  doc["probes"] = list;
  emit(cfg.out / "components.json", doc.dump(2) + "\n");
  return inconclusive ? exit_code::inconclusive : exit_code::success;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint spectrum, classical diagram and quantum monodromy of the Manakov top"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&cfg](CLI::App* sub, bool params) {
    if (params) {
      sub->add_option("--a", cfg.a, "Model parameter a")->capture_default_str();
      sub->add_option("--b", cfg.b, "Model parameter b")->capture_default_str();
    }
    sub->add_option("--seed", cfg.seed, "Random seed (64-bit)");
    sub->add_option("--out", cfg.out, "Output directory")->capture_default_str();
    sub->add_flag("--svg", cfg.svg, "Also write an SVG figure");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Joint spectrum CSV, cluster report, scatter SVG");
  common(spectrum, true);
  spectrum->add_option("--spin", cfg.spin, "Spin S")->capture_default_str();
  spectrum->add_option("--irrep", cfg.irrep, "Keep one symmetry type (A_s, B1_a, ...)");
  spectrum->add_option("--tol", cfg.tol, "Cluster tolerance; 0 selects 1e-3 of the diagram diameter")
      ->check(CLI::NonNegativeNumber);
  spectrum->add_flag("--unfolded", cfg.unfolded, "Limiting case only: (x, y') lattice");
  spectrum->add_option("--window", cfg.window, "SVG window x0 x1 y0 y1")->expected(4);

  auto* classical = app.add_subcommand("classical", "Critical values, lines, arc and regions");
  common(classical, true);

  auto* monodromy = app.add_subcommand("monodromy", "Cell transport along a closed path");
  common(monodromy, true);
  monodromy->add_option("--spin", cfg.spin, "Spin S")->capture_default_str();
  monodromy->add_option("--preset", cfg.preset, "limiting | generic")
      ->check(CLI::IsMember({"limiting", "generic", "limiting-loop", "generic-loop"}))
      ->capture_default_str();
  monodromy->add_option("--basis", cfg.basis, "Limiting initial cell: standard | alt")
      ->check(CLI::IsMember({"standard", "alt"}))
      ->capture_default_str();
  monodromy->add_option("--irrep", cfg.irrep, "Generic preset: one symmetry type (default: all)");
  monodromy->add_flag("--reverse", cfg.reverse, "Traverse the loop backwards");
  monodromy->add_option("--path", cfg.path, "JSON list of [x, y] waypoints replacing the preset loop");

  auto* components = app.add_subcommand("components", "Monte Carlo fiber component counts");
  common(components, true);
  components->add_option("--samples", cfg.samples, "Phase-space samples")->capture_default_str();
  components->add_option("--delta", cfg.delta, "Shell half-width (normalized)")->capture_default_str();
  components->add_option("--eps", cfg.eps, "Absolute link radius");
  components->add_option("--probe", cfg.probe, "Probe point x y")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_code::success : exit_code::validation;
  }

  try {
    if (*spectrum) return cmd_spectrum(cfg);
    if (*classical) return cmd_classical(cfg);
    if (*monodromy) return cmd_monodromy(cfg);
    if (*components) return cmd_components(cfg);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::validation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return exit_code::numerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code::success;
}
