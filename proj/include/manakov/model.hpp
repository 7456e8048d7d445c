#pragma once

// The commuting quadratic integrals X, Y of the Manakov top on the two-spin
// product space, and the operators of the limiting case a = 2, b = 1.

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cmath>
#include <string>

#include "manakov/errors.hpp"
#include "manakov/spin_algebra.hpp"

namespace manakov {

struct ModelParams {
  double a = 4.0;
  double b = 3.0;
  int spin = 15;

  double denominator() const { return 1.0 - a - b; }
  double c2() const { return (a - b - 1.0) / denominator(); }
  double c3() const { return (b - a - 1.0) / denominator(); }

  void validate() const {
    if (!std::isfinite(a) || !std::isfinite(b))
      throw ValidationError("parameters a and b must be finite");
    if (std::abs(denominator()) <= 1e-9)
      throw ValidationError("singular parameters: 1 - a - b = 0 (|1-a-b| = " +
                            std::to_string(std::abs(denominator())) + " <= 1e-9)");
    if (spin < 1) throw ValidationError("spin must be >= 1, got " + std::to_string(spin));
  }
};

template <typename Scalar>
struct ModelOperators {
  MatrixX<Scalar> X;
  MatrixX<Scalar> Y;
  ModelParams params;

  Eigen::Index dimension() const { return X.rows(); }
};

namespace detail {

// s_k t_k on the product space, as a real matrix.
template <typename Scalar>
MatrixX<Scalar> pair_product(const SpinOperators<Scalar>& ops, int k) {
  return ops.product_sign(k) * kron(ops.components[k], ops.components[k]);
}

// s_k^2 + t_k^2 on the product space.
template <typename Scalar>
MatrixX<Scalar> pair_square_sum(const SpinOperators<Scalar>& ops, int k) {
  const MatrixX<Scalar> sq = ops.square(k);
  const MatrixX<Scalar> id = MatrixX<Scalar>::Identity(ops.dimension(), ops.dimension());
  return kron(sq, id) + kron(id, sq);
}

}  // namespace detail

/// Builds X and Y from unit-Casimir scaled spins quantized along `axis`.
/// The axis only changes the basis; the default matches the globally fixed
/// s3 eigenbasis used by the symmetry module.
template <typename Scalar = double>
ModelOperators<Scalar> build_xy(const ModelParams& params,
                                QuantizationAxis axis = QuantizationAxis::third) {
  params.validate();
  const auto ops = unit_casimir_scale(spin_matrices<Scalar>(params.spin, axis));
  const Scalar a = params.a;
  const Scalar b = params.b;
  const Scalar c2 = params.c2();
  const Scalar c3 = params.c3();

  const MatrixX<Scalar> st1 = detail::pair_product(ops, 0);
  const MatrixX<Scalar> st2 = detail::pair_product(ops, 1);
  const MatrixX<Scalar> st3 = detail::pair_product(ops, 2);

  ModelOperators<Scalar> out;
  out.params = params;
  out.X = st1 + c2 * st2 + c3 * st3;
  out.Y = b * (1 - a) * detail::pair_square_sum(ops, 1) + 2 * b * (1 - a) * c3 * st2 +
          a * (1 - b) * detail::pair_square_sum(ops, 2) + 2 * a * (1 - b) * c2 * st3;
  return out;
}

/// Operators of the limiting case in the s2-quantized real basis, where
/// Yprime = (s2 + t2)/2 is diagonal and real.
template <typename Scalar>
struct LimitingOperators {
  MatrixX<Scalar> X;
  MatrixX<Scalar> Yprime;
  MatrixX<Scalar> Y;
  int spin = 0;
  Scalar scale = Scalar(1);
};

template <typename Scalar = double>
LimitingOperators<Scalar> build_limiting(int S, bool scaled = true) {
  if (S < 1) throw ValidationError("limiting operators need S >= 1, got " + std::to_string(S));
  auto ops = spin_matrices<Scalar>(S, QuantizationAxis::second);
  if (scaled) ops = unit_casimir_scale(ops);
  const Eigen::Index n = ops.dimension();
  const MatrixX<Scalar> id = MatrixX<Scalar>::Identity(n, n);

  LimitingOperators<Scalar> out;
  out.spin = S;
  out.scale = ops.scale;
  out.X = detail::pair_product(ops, 0) + detail::pair_product(ops, 2);
  out.Yprime = (kron(ops.components[1], id) + kron(id, ops.components[1])) / Scalar(2);
  out.Y = -(out.Yprime * out.Yprime);
  return out;
}

template <typename Scalar>
Eigen::SparseMatrix<Scalar> sparse_view(const MatrixX<Scalar>& m) {
  return m.sparseView(Scalar(1), Scalar(0));
}

/// ||AB - BA|| / (||A|| ||B||) in the Frobenius norm. The products are
/// formed sparsely; the model operators have O(1) nonzeros per row.
template <typename Scalar>
Scalar relative_commutator(const MatrixX<Scalar>& A, const MatrixX<Scalar>& B) {
  const Scalar na = A.norm();
  const Scalar nb = B.norm();
  if (na == Scalar(0) || nb == Scalar(0)) return Scalar(0);
  const Eigen::SparseMatrix<Scalar> sa = sparse_view(A);
  const Eigen::SparseMatrix<Scalar> sb = sparse_view(B);
  const Eigen::SparseMatrix<Scalar> c = sa * sb - sb * sa;
  return c.norm() / (na * nb);
}

}  // namespace manakov
