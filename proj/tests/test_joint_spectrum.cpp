#include <doctest.h>

#include <algorithm>

#include "manakov/joint_spectrum.hpp"
#include "oracles/frozen.hpp"

using namespace manakov;

namespace {

// Matches the computed joint spectrum against a frozen multiset of pairs.
void check_against(const JointSpectrum& sp, std::vector<std::pair<double, double>> expected) {
  std::vector<std::pair<double, double>> got;
  for (const auto& e : sp.entries) got.emplace_back(e.x, e.y);
  REQUIRE(got.size() == expected.size());
  std::vector<bool> used(expected.size(), false);
  for (const auto& g : got) {
    bool found = false;
    for (std::size_t i = 0; i < expected.size() && !found; ++i)
      if (!used[i] && std::abs(expected[i].first - g.first) <= 1e-10 &&
          std::abs(expected[i].second - g.second) <= 1e-10) {
        used[i] = true;
        found = true;
      }
    CHECK(found);
  }
}

}  // namespace

TEST_CASE("census at (4,3), S = 15") {
  const JointSpectrum sp = joint_spectrum(ModelParams{4, 3, 15});
  CHECK(sp.entries.size() == 961);
  const std::array<int, 8> expected = {136, 105, 120, 120, 120, 120, 120, 120};
  CHECK(sp.counts == expected);
  CHECK(sp.max_residual() <= 1e-8);
  CHECK(sp.filter(parse_irrep("A_s")).size() == 136);
  for (double m : sp.mixing) CHECK(m > 0.0);
}

TEST_CASE("joint spectra match the frozen complex construction") {
  check_against(joint_spectrum(ModelParams{4, 3, 2}), oracle::joint_4_3_S2);
  check_against(joint_spectrum(ModelParams{4, 2, 3}), oracle::joint_4_2_S3);
  check_against(joint_spectrum(ModelParams{-2, 0.5, 2}), oracle::joint_m2_05_S2);
}

TEST_CASE("joint eigenvalues do not depend on the mixing seed") {
  const JointSpectrum a = joint_spectrum(ModelParams{4, 2, 6}, {.seed = 1});
  const JointSpectrum b = joint_spectrum(ModelParams{4, 2, 6}, {.seed = 99});
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].irrep == b.entries[i].irrep);
    CHECK(std::abs(a.entries[i].x - b.entries[i].x) <= 1e-10);
    CHECK(std::abs(a.entries[i].y - b.entries[i].y) <= 1e-10);
  }
}

TEST_CASE("spectrum is deterministic for a fixed seed") {
  const JointSpectrum a = joint_spectrum(ModelParams{4, 3, 8});
  const JointSpectrum b = joint_spectrum(ModelParams{4, 3, 8});
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].x == b.entries[i].x);
    CHECK(a.entries[i].y == b.entries[i].y);
  }
}

TEST_CASE("eigenvalue cloud lies inside the dilated classical image") {
  for (double a : {-2.0, 0.5, 2.0, 4.0, 6.0})
    for (double b : {-1.0, 0.5, 3.0, 5.0}) {
      if (std::abs(1 - a - b) < 1e-9) continue;
      const EMDiagram d = build_diagram(a, b);
      if (!d.canonical.in_chamber) continue;
      const int S = 5;
      const JointSpectrum sp = joint_spectrum(ModelParams{a, b, S});
      CHECK(sp.entries.size() == 121);
      // Margin in the normalized EM plane.
      const double margin = 3.0 / std::sqrt(S * (S + 1.0));
      for (const auto& e : sp.entries) {
        if (classify_point(d, e.x, e.y).region != Region::outside) continue;
        CHECK(d.normalized_distance_to_critical_set({e.x, e.y}) <= margin);
      }
    }
}

TEST_CASE("single-linkage clusters") {
  std::vector<JointEigenvalue> pts(5);
  pts[0].x = 0.0;
  pts[1].x = 0.05;
  pts[2].x = 0.1;
  pts[3].x = 1.0;
  pts[4].x = 1.0;
  pts[4].y = 0.2;
  pts[1].irrep = parse_irrep("B1_s");
  const auto c = find_clusters(pts, 0.06);
  REQUIRE(c.size() == 3);
  CHECK(c[0].size() == 3);
  CHECK(c[0].pattern() == "A_s+A_s+B1_s");
  CHECK(c[0].centroid.x() == doctest::Approx(0.05));
  CHECK(c[1].size() == 1);
  CHECK(c[2].size() == 1);
  CHECK(find_clusters(pts, 0.3).size() == 2);
  CHECK(find_clusters(pts, 1.0).size() == 1);
}

TEST_CASE("modal cluster sizes per region at (4,3)") {
  const RegionMultiplicityReport r = region_multiplicity_report(ModelParams{4, 3, 15});
  const auto modal = r.modal_sizes();
  CHECK(modal.at("I") == 2);
  CHECK(modal.at("II") == 4);
  CHECK(modal.at("III") == 2);
  CHECK(modal.at("IV") == 2);
  CHECK(r.tolerance == doctest::Approx(1e-3 * std::hypot(1.0, 24.0)));
  for (const auto& t : r.tables)
    if (t.region == Region::II) {
      CHECK(t.patterns.size() == 2);
      CHECK(t.patterns.count("A_s+A_a+B3_s+B3_a") == 1);
      CHECK(t.patterns.count("B1_s+B1_a+B2_s+B2_a") == 1);
    }
}

TEST_CASE("region tables at the perturbed parameters") {
  const auto modal = region_multiplicity_report(ModelParams{3.9, 2.9, 15}).modal_sizes();
  CHECK(modal.at("I") == 2);
  CHECK(modal.at("II") == 4);
  CHECK(modal.at("III") == 2);
  CHECK(modal.at("IV") == 2);
}
