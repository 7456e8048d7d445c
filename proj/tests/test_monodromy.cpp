#include <doctest.h>

#include <algorithm>

#include "manakov/errors.hpp"
#include "manakov/monodromy.hpp"
#include "oracles/frozen.hpp"

using namespace manakov;

namespace {

Eigen::Matrix2i mat(int a, int b, int c, int d) {
  Eigen::Matrix2i m;
  m << a, b, c, d;
  return m;
}

const JointLattice& lattice15() {
  static const JointLattice l = limiting_lattice(15);
  return l;
}

}  // namespace

TEST_CASE("limiting lattice matches the frozen construction") {
  const JointLattice l = limiting_lattice(4);
  REQUIRE(l.size() == oracle::limiting_S4.size());
  std::vector<std::pair<double, double>> got;
  for (const auto& p : l.points) got.emplace_back(p.y(), p.x());
  auto expected = oracle::limiting_S4;
  for (auto& e : expected) std::swap(e.first, e.second);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].first == doctest::Approx(expected[i].first).epsilon(1e-12));
    CHECK(got[i].second == doctest::Approx(expected[i].second).epsilon(1e-12));
  }
  CHECK(limiting_lattice(15).size() == 961);
  CHECK_THROWS_AS(limiting_lattice(3), ValidationError);
}

TEST_CASE("limiting monodromy in both basis conventions") {
  const auto std_ccw = limiting_monodromy(lattice15(), LimitingBasis::standard, LimitingLoop{});
  CHECK(std_ccw.matrix == mat(1, 0, 2, 1));
  CHECK(std_ccw.anchor_returned);
  CHECK(std_ccw.max_integrality_error < 0.35);
  const auto alt_ccw = limiting_monodromy(lattice15(), LimitingBasis::alternate, LimitingLoop{});
  CHECK(alt_ccw.matrix == mat(3, 2, -2, -1));
  CHECK(limiting_monodromy(15).matrix == mat(1, 0, 2, 1));
}

TEST_CASE("reversed loops give the inverse") {
  LimitingLoop back;
  back.counterclockwise = false;
  for (auto basis : {LimitingBasis::standard, LimitingBasis::alternate}) {
    const auto fwd = limiting_monodromy(lattice15(), basis, LimitingLoop{});
    const auto rev = limiting_monodromy(lattice15(), basis, back);
    CHECK(fwd.matrix * rev.matrix == Eigen::Matrix2i::Identity());
  }
}

TEST_CASE("matrices are conjugate to the standard one for every valid basis") {
  for (auto basis : {LimitingBasis::standard, LimitingBasis::alternate})
    for (int S : {12, 15, 18}) {
      CAPTURE(S);
      const auto r = limiting_monodromy(S, basis);
      CHECK(r.matrix.trace() == 2);
      CHECK(r.determinant() == 1);
      CHECK(r.matrix != Eigen::Matrix2i::Identity());
    }
}

TEST_CASE("homotopic loops give the same matrix") {
  const auto ref = limiting_monodromy(lattice15(), LimitingBasis::standard, LimitingLoop{});
  for (auto [rx, ry] : {std::pair{0.5, 0.3}, std::pair{0.6, 0.3}, std::pair{0.5, 0.25}}) {
    LimitingLoop l;
    l.rx = rx;
    l.ry = ry;
    CHECK(limiting_monodromy(lattice15(), LimitingBasis::standard, l).matrix == ref.matrix);
  }
  // A square around the origin starting at the same point.
  const std::vector<Point2> corners = {{-0.6, 0.0}, {-0.6, -0.3}, {0.6, -0.3}, {0.6, 0.3},
                                       {-0.6, 0.3}, {-0.6, 0.0}};
  std::vector<Point2> square;
  for (std::size_t i = 0; i + 1 < corners.size(); ++i)
    for (int q = 0; q < 200; ++q) square.push_back(corners[i] + (corners[i + 1] - corners[i]) * (q / 200.0));
  square.push_back(corners.back());
  CHECK(limiting_monodromy(lattice15(), LimitingBasis::standard, square).matrix == ref.matrix);
}

TEST_CASE("contractible loops give the identity") {
  for (auto c : {Point2(0.3, 0.3), Point2(-0.3, -0.3), Point2(0.0, 0.55)}) {
    CAPTURE(c.transpose());
    const auto path = ellipse_path(c, 0.12, 0.08, 0.0, true);
    const auto r = limiting_monodromy(lattice15(), LimitingBasis::standard, path);
    CHECK(r.matrix == Eigen::Matrix2i::Identity());
  }
}

TEST_CASE("transport guards") {
  const auto tight = ellipse_path(Point2::Zero(), 0.05, 0.03, 3.14159, true);
  CHECK_THROWS_AS(limiting_monodromy(lattice15(), LimitingBasis::standard, tight), NumericalError);
  std::vector<Point2> open = ellipse_path(Point2(0.3, 0.3), 0.1, 0.08, 0.0, true);
  open.pop_back();
  open.resize(open.size() / 2);
  CHECK_THROWS_AS(limiting_monodromy(lattice15(), LimitingBasis::standard, open), ValidationError);
  const auto far = ellipse_path(Point2(0.0, 0.0), 3.0, 0.2, 3.14159, true);
  CHECK_THROWS_AS(limiting_monodromy(lattice15(), LimitingBasis::standard, far), NumericalError);
}

TEST_CASE("generic monodromy is the identity for at least two irreps") {
  for (auto [a, b] : {std::pair{4.0, 3.0}, std::pair{3.9, 2.9}}) {
    CAPTURE(a);
    const JointSpectrum sp = joint_spectrum(ModelParams{a, b, 15});
    const EMDiagram d = build_diagram(a, b);
    for (const char* name : {"A_a", "B2_s"}) {
      CAPTURE(name);
      const auto r = generic_monodromy(sp, d, parse_irrep(name));
      CHECK(r.matrix == Eigen::Matrix2i::Identity());
      CHECK(r.anchor_returned);
    }
  }
}

TEST_CASE("generic loop visits the four regions in order") {
  const EMDiagram d = build_diagram(4, 3);
  const auto path = generic_loop_path(d);
  std::vector<Region> seen;
  for (const auto& p : path) {
    const Region r = classify_point(d, p.x(), p.y()).region;
    if (r == Region::boundary) continue;
    if (seen.empty() || seen.back() != r) seen.push_back(r);
  }
  const std::vector<Region> expected = {Region::I, Region::III, Region::II, Region::IV, Region::I};
  CHECK(seen == expected);
}

TEST_CASE("generic guards") {
  CHECK_THROWS_AS(generic_monodromy(ModelParams{2, 1, 15}, parse_irrep("A_a")), ValidationError);
  CHECK_THROWS_AS(generic_monodromy(ModelParams{4, 3, 8}, parse_irrep("A_a")), ValidationError);
  CHECK_THROWS_AS(generic_monodromy(ModelParams{0.5, 3, 15}, parse_irrep("A_a")), ValidationError);
}

TEST_CASE("cluster pairings change across each stratum at (4,3)") {
  const JointSpectrum sp = joint_spectrum(ModelParams{4, 3, 15});
  const auto report = strata_pairing_report(sp, build_diagram(4, 3), 0.0);
  REQUIRE(report.crossings.size() == 4);
  for (const auto& c : report.crossings) {
    CAPTURE(c.stratum);
    CHECK(c.patterns_differ);
  }
}
