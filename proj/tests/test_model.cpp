#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>

#include "manakov/model.hpp"
#include "oracles/frozen.hpp"

using namespace manakov;

TEST_CASE("X and Y are real symmetric and commute over the parameter grid") {
  for (double a : {-2.0, 0.5, 2.0, 4.0, 6.0})
    for (double b : {-1.0, 0.5, 1.0, 3.0, 5.0})
      for (int S : {1, 5, 15}) {
        if (std::abs(1 - a - b) < 1e-9) continue;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(S);
        const auto m = build_xy(ModelParams{a, b, S});
        CHECK(m.dimension() == (2 * S + 1) * (2 * S + 1));
        CHECK((m.X - m.X.transpose()).norm() == 0.0);
        CHECK((m.Y - m.Y.transpose()).norm() < 1e-14 * m.Y.norm());
        CHECK(relative_commutator(m.X, m.Y) <= 1e-10);
      }
}

TEST_CASE("spectrum does not depend on the quantization axis") {
  const ModelParams p{4.0, 2.0, 3};
  Eigen::VectorXd ref;
  for (auto axis : {QuantizationAxis::first, QuantizationAxis::second, QuantizationAxis::third}) {
    const auto m = build_xy(p, axis);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.X + 0.37 * m.Y, Eigen::EigenvaluesOnly);
    if (ref.size() == 0)
      ref = es.eigenvalues();
    else
      CHECK((es.eigenvalues() - ref).norm() < 1e-12);
  }
}

TEST_CASE("eigenvalues of X and Y match the frozen complex construction") {
  const auto m = build_xy(ModelParams{4.0, 3.0, 2});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ex(m.X, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ey(m.Y, Eigen::EigenvaluesOnly);
  std::vector<double> xs, ys;
  for (const auto& [x, y] : oracle::joint_4_3_S2) {
    xs.push_back(x);
    ys.push_back(y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  REQUIRE(xs.size() == 25);
  for (int i = 0; i < 25; ++i) {
    CHECK(ex.eigenvalues()(i) == doctest::Approx(xs[i]).epsilon(1e-12));
    CHECK(ey.eigenvalues()(i) == doctest::Approx(ys[i]).epsilon(1e-12));
  }
}

TEST_CASE("limiting operators") {
  for (int S : {1, 4, 15}) {
    const auto lim = build_limiting(S);
    CHECK((lim.Yprime * lim.Yprime + lim.Y).norm() <= 1e-12);
    CHECK(relative_commutator(lim.X, lim.Yprime) <= 1e-12);
    // Y' is diagonal in the axis-2 representation.
    CHECK((lim.Yprime - Eigen::MatrixXd(lim.Yprime.diagonal().asDiagonal())).norm() == 0.0);
    // X agrees with the general model at a=2, b=1 (c2 = 0, c3 = 1) in the same axis.
    const auto m = build_xy(ModelParams{2.0, 1.0, S}, QuantizationAxis::second);
    CHECK((lim.X - m.X).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_xy(ModelParams{0.5, 0.5, 3}), ValidationError);
  CHECK_THROWS_AS(build_xy(ModelParams{4.0, 3.0, 0}), ValidationError);
  CHECK_THROWS_AS(build_limiting(0), ValidationError);
  CHECK(ModelParams{4, 3, 1}.c2() == 0.0);
  CHECK(ModelParams{4, 3, 1}.c3() == doctest::Approx(1.0 / 3.0));
}
