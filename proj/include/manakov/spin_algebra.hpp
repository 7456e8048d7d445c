#pragma once

// Angular-momentum matrices for a single integer spin, kept in a real
// representation: two components are real symmetric, the third is purely
// imaginary and stored as the real antisymmetric A with s = iA.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "manakov/errors.hpp"

namespace manakov {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Component that is diagonal in the chosen basis (m = S, S-1, ..., -S).
enum class QuantizationAxis { first = 0, second = 1, third = 2 };

template <typename Scalar>
struct SpinOperators {
  int spin = 0;
  /// Stored real matrices; component k is i*components[k] when
  /// k == imaginary_axis.
  std::array<MatrixX<Scalar>, 3> components;
  int imaginary_axis = 1;
  QuantizationAxis quantization = QuantizationAxis::third;
  /// Factor already applied to every component (1 when unscaled).
  Scalar scale = Scalar(1);

  Eigen::Index dimension() const { return 2 * spin + 1; }

  /// Sign picked up by a product of two copies of component k when both are
  /// written through their stored real parts: (iA)(iA') = -AA'.
  Scalar product_sign(int k) const { return k == imaginary_axis ? Scalar(-1) : Scalar(1); }

  /// s_k^2 as a real matrix.
  MatrixX<Scalar> square(int k) const { return product_sign(k) * components[k] * components[k]; }

  MatrixX<Scalar> casimir() const { return square(0) + square(1) + square(2); }

  MatrixX<std::complex<Scalar>> complex_component(int k) const {
    MatrixX<std::complex<Scalar>> out = components[k].template cast<std::complex<Scalar>>();
    if (k == imaginary_axis) out *= std::complex<Scalar>(0, 1);
    return out;
  }
};

using SpinOperatorsd = SpinOperators<double>;

/// Validates a spin quantum number given as a real value. Half-integer and
/// negative values are rejected.
inline int integer_spin(double value) {
  if (!std::isfinite(value) || value < 0.0)
    throw ValidationError("spin must be a non-negative integer, got " + std::to_string(value));
  if (value != std::floor(value))
    throw ValidationError("half-integer and fractional spins are not supported, got " +
                          std::to_string(value));
  return static_cast<int>(value);
}

/// Ladder construction <m+1|J+|m> = sqrt(S(S+1) - m(m+1)) in the basis
/// ordered m = S, ..., -S, with the diagonal component placed at `axis`.
/// The three components keep the cyclic order so [s1, s2] = i s3 holds for
/// every choice of axis.
template <typename Scalar = double>
SpinOperators<Scalar> spin_matrices(int S, QuantizationAxis axis = QuantizationAxis::third) {
  if (S < 0) throw ValidationError("spin must be non-negative, got " + std::to_string(S));
  const Eigen::Index n = 2 * S + 1;
  MatrixX<Scalar> raise = MatrixX<Scalar>::Zero(n, n);
  MatrixX<Scalar> jz = MatrixX<Scalar>::Zero(n, n);
  const Scalar casimir = Scalar(S) * Scalar(S + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar m = Scalar(S) - Scalar(i);
    jz(i, i) = m;
    if (i > 0) raise(i - 1, i) = std::sqrt(casimir - m * (m + Scalar(1)));
  }
  const MatrixX<Scalar> jx = (raise + raise.transpose()) / Scalar(2);
  // J_y = (J+ - J-) / (2i) = i * A with A = -(J+ - J-) / 2.
  const MatrixX<Scalar> jy_real = -(raise - raise.transpose()) / Scalar(2);

  SpinOperators<Scalar> ops;
  ops.spin = S;
  ops.quantization = axis;
  // (x, y, z) of the ladder construction is mapped cyclically onto
  // (s_{k+1}, s_{k+2}, s_k) for quantization axis k.
  const int k = static_cast<int>(axis);
  ops.components[k] = jz;
  ops.components[(k + 1) % 3] = jx;
  ops.components[(k + 2) % 3] = jy_real;
  ops.imaginary_axis = (k + 2) % 3;
  return ops;
}

/// Divides every component by sqrt(S(S+1)) so the Casimir becomes the
/// identity.
template <typename Scalar>
SpinOperators<Scalar> unit_casimir_scale(const SpinOperators<Scalar>& ops) {
  if (ops.spin < 1) throw ValidationError("unit-Casimir scaling needs S >= 1");
  const Scalar factor = Scalar(1) / std::sqrt(Scalar(ops.spin) * Scalar(ops.spin + 1));
  SpinOperators<Scalar> out = ops;
  for (auto& c : out.components) c *= factor;
  out.scale = ops.scale * factor;
  return out;
}

template <typename Derived, typename OtherDerived>
MatrixX<typename Derived::Scalar> kron(const Eigen::MatrixBase<Derived>& a,
                                       const Eigen::MatrixBase<OtherDerived>& b) {
  MatrixX<typename Derived::Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// The six generators on the product space: s_k (x) 1 and 1 (x) t_k. The
/// t-operators are numerically the s-operators acting on the second factor.
/// Product-space index is i_s * (2S+1) + i_t.
template <typename Scalar>
struct PairOperators {
  std::array<MatrixX<Scalar>, 3> s;
  std::array<MatrixX<Scalar>, 3> t;
  int imaginary_axis = 1;

  Eigen::Index dimension() const { return s[0].rows(); }
};

template <typename Scalar>
PairOperators<Scalar> embed_pair(const SpinOperators<Scalar>& ops) {
  const MatrixX<Scalar> id = MatrixX<Scalar>::Identity(ops.dimension(), ops.dimension());
  PairOperators<Scalar> out;
  out.imaginary_axis = ops.imaginary_axis;
  for (int k = 0; k < 3; ++k) {
    out.s[k] = kron(ops.components[k], id);
    out.t[k] = kron(id, ops.components[k]);
  }
  return out;
}

}  // namespace manakov
