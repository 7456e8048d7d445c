#include <doctest.h>

#include <complex>

#include "manakov/spin_algebra.hpp"

using namespace manakov;
using cmat = Eigen::MatrixXcd;

namespace {

cmat commutator(const cmat& a, const cmat& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("ladder entries and dimensions") {
  const auto ops = spin_matrices(2);
  CHECK(ops.dimension() == 5);
  CHECK(ops.imaginary_axis == 1);
  // Jz diagonal runs m = S..-S.
  CHECK(ops.components[2](0, 0) == doctest::Approx(2.0));
  CHECK(ops.components[2](4, 4) == doctest::Approx(-2.0));
  // <2|J+|1> = 2, <1|J+|0> = sqrt(6); Jx carries half of each.
  CHECK(ops.components[0](0, 1) == doctest::Approx(1.0));
  CHECK(ops.components[0](1, 2) == doctest::Approx(std::sqrt(6.0) / 2));
  CHECK(ops.components[0].isApprox(ops.components[0].transpose()));
  CHECK(ops.components[1].isApprox(-ops.components[1].transpose()));
}

TEST_CASE("su(2) commutation relations for every quantization axis") {
  for (int S : {1, 2, 5, 15})
    for (auto axis : {QuantizationAxis::first, QuantizationAxis::second, QuantizationAxis::third}) {
      CAPTURE(S);
      const auto ops = spin_matrices(S, axis);
      const cmat j0 = ops.complex_component(0), j1 = ops.complex_component(1),
                 j2 = ops.complex_component(2);
      const std::complex<double> i(0, 1);
      CHECK((commutator(j0, j1) - i * j2).norm() < 1e-12 * S * S);
      CHECK((commutator(j1, j2) - i * j0).norm() < 1e-12 * S * S);
      CHECK((commutator(j2, j0) - i * j1).norm() < 1e-12 * S * S);
      CHECK(j0.isApprox(j0.adjoint()));
      CHECK(j1.isApprox(j1.adjoint()));
    }
}

TEST_CASE("casimir equals S(S+1), and 1 after scaling") {
  for (int S : {1, 3, 15}) {
    const auto ops = spin_matrices(S);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2 * S + 1, 2 * S + 1);
    CHECK((ops.casimir() - S * (S + 1.0) * id).norm() < 1e-10 * S * S);
    const auto unit = unit_casimir_scale(ops);
    CHECK((unit.casimir() - id).norm() < 1e-12 * S);
    CHECK(unit.scale == doctest::Approx(1.0 / std::sqrt(S * (S + 1.0))));
  }
}

TEST_CASE("spin validation") {
  CHECK(integer_spin(15.0) == 15);
  CHECK_THROWS_AS(integer_spin(1.5), ValidationError);
  CHECK_THROWS_AS(integer_spin(-1.0), ValidationError);
  CHECK_THROWS_AS(spin_matrices(-2), ValidationError);
  CHECK_THROWS_AS(unit_casimir_scale(spin_matrices(0)), ValidationError);
}

TEST_CASE("pair embedding commutes across factors") {
  const auto pair = embed_pair(unit_casimir_scale(spin_matrices(3)));
  CHECK(pair.dimension() == 49);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      CHECK((pair.s[k] * pair.t[l] - pair.t[l] * pair.s[k]).norm() < 1e-14);
}

TEST_CASE("kron matches Eigen block layout") {
  Eigen::Matrix2d a;
  a << 1, 2, 3, 4;
  Eigen::Matrix2d b;
  b << 0, 1, 1, 0;
  const Eigen::MatrixXd k = kron(a, b);
  CHECK(k(0, 1) == 1.0);
  CHECK(k(2, 3) == 4.0);
  CHECK(k(3, 0) == 3.0);
}
