#pragma once

// Order-8 abelian symmetry group D2 x <Swap> on the product space, its
// character table and the eight irrep projectors.

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "manakov/spin_algebra.hpp"

namespace manakov {

enum class RotationLabel { A = 0, B1 = 1, B2 = 2, B3 = 3 };
enum class SwapLabel { s = 0, a = 1 };

struct IrrepLabel {
  RotationLabel rotation = RotationLabel::A;
  SwapLabel swap = SwapLabel::s;

  /// Position in the canonical order A_s, A_a, B1_s, B1_a, ..., B3_a.
  int index() const { return 2 * static_cast<int>(rotation) + static_cast<int>(swap); }
  static IrrepLabel from_index(int i);
  std::string name() const;

  friend bool operator==(IrrepLabel l, IrrepLabel r) { return l.index() == r.index(); }
  friend bool operator<(IrrepLabel l, IrrepLabel r) { return l.index() < r.index(); }
};

/// Parses "A_s", "B2_a", ... ; throws ValidationError otherwise.
IrrepLabel parse_irrep(const std::string& text);
std::array<IrrepLabel, 8> all_irreps();

/// Character of a rotation label under the pi-rotation about axis k (0-based).
/// Mulliken convention: B1 is symmetric under the third axis, B2 under the
/// second, B3 under the first.
int rotation_character(RotationLabel label, int axis);

/// A real orthogonal matrix with one +-1 entry per row and column:
/// (U v)[target[j]] = sign[j] * v[j].
struct SignedPermutation {
  std::vector<Eigen::Index> target;
  std::vector<double> sign;

  Eigen::Index size() const { return static_cast<Eigen::Index>(target.size()); }
  Eigen::MatrixXd dense() const;
  Eigen::MatrixXd apply_left(const Eigen::MatrixXd& m) const;   // U * m
  Eigen::MatrixXd apply_right(const Eigen::MatrixXd& m) const;  // m * U
  SignedPermutation compose(const SignedPermutation& inner) const;  // this * inner

  /// Recovers the structure from a dense matrix; nullopt if any row is not
  /// a single +-1 within `tol`.
  static std::optional<SignedPermutation> from_dense(const Eigen::MatrixXd& m, double tol = 1e-10);
};

/// exp(-i pi s_k) for one integer spin, by spectral decomposition of s_k.
Eigen::MatrixXd pi_rotation(const SpinOperatorsd& ops, int k);

struct SymmetryGroup {
  int spin = 0;
  /// Index g = 2*r + p for rotation r in {E, C2(1), C2(2), C2(3)} and p the
  /// power of Swap; element = R_r * Swap^p.
  std::array<SignedPermutation, 8> elements;
  /// character_table(irrep index, element index).
  Eigen::Matrix<double, 8, 8> character_table;

  Eigen::Index dimension() const { return elements[0].size(); }
  Eigen::MatrixXd matrix(int g) const { return elements[g].dense(); }
  static std::string element_name(int g);
};

SymmetryGroup build_group(int S);

struct Projector {
  IrrepLabel irrep;
  Eigen::MatrixXd matrix;
  int dimension_count = 0;
};

std::array<Projector, 8> projectors(const SymmetryGroup& group);

/// Orthonormal basis of the projector's range, one column per group orbit
/// when the projector has the signed-permutation structure, else from an
/// eigendecomposition. Throws NumericalError if the rank disagrees with the
/// rounded trace.
Eigen::MatrixXd block_basis(const Projector& projector);

/// Brute-force irrep census: diagonalizes a generic combination of the group
/// elements and bins the joint sign patterns. Independent of projectors().
std::array<int, 8> irrep_census_bruteforce(const SymmetryGroup& group);

}  // namespace manakov
