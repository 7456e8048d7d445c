#include "manakov/symmetry.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <random>

#include "manakov/errors.hpp"

namespace manakov {

namespace {

constexpr std::array<const char*, 4> kRotationNames = {"A", "B1", "B2", "B3"};

// Rows: A, B1, B2, B3. Columns: pi-rotation about axis 1, 2, 3.
constexpr int kRotationCharacters[4][3] = {
    {1, 1, 1},
    {-1, -1, 1},
    {-1, 1, -1},
    {1, -1, -1},
};

SignedPermutation identity_permutation(Eigen::Index n) {
  SignedPermutation p;
  p.target.resize(n);
  p.sign.assign(n, 1.0);
  for (Eigen::Index j = 0; j < n; ++j) p.target[j] = j;
  return p;
}

SignedPermutation swap_permutation(Eigen::Index n) {
  SignedPermutation p;
  p.target.resize(n * n);
  p.sign.assign(n * n, 1.0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) p.target[i * n + j] = j * n + i;
  return p;
}

SignedPermutation kron_square(const SignedPermutation& r) {
  const Eigen::Index n = r.size();
  SignedPermutation p;
  p.target.resize(n * n);
  p.sign.resize(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      p.target[i * n + j] = r.target[i] * n + r.target[j];
      p.sign[i * n + j] = r.sign[i] * r.sign[j];
    }
  return p;
}

}  // namespace

IrrepLabel IrrepLabel::from_index(int i) {
  if (i < 0 || i >= 8) throw ValidationError("irrep index out of range: " + std::to_string(i));
  return IrrepLabel{static_cast<RotationLabel>(i / 2), static_cast<SwapLabel>(i % 2)};
}

std::string IrrepLabel::name() const {
  return std::string(kRotationNames[static_cast<int>(rotation)]) +
         (swap == SwapLabel::s ? "_s" : "_a");
}

IrrepLabel parse_irrep(const std::string& text) {
  for (int i = 0; i < 8; ++i) {
    const IrrepLabel label = IrrepLabel::from_index(i);
    if (label.name() == text) return label;
  }
  throw ValidationError("unknown irrep label '" + text +
                        "' (expected one of A_s A_a B1_s B1_a B2_s B2_a B3_s B3_a)");
}

std::array<IrrepLabel, 8> all_irreps() {
  std::array<IrrepLabel, 8> out;
  for (int i = 0; i < 8; ++i) out[i] = IrrepLabel::from_index(i);
  return out;
}

int rotation_character(RotationLabel label, int axis) {
  return kRotationCharacters[static_cast<int>(label)][axis];
}

Eigen::MatrixXd SignedPermutation::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size(), size());
  for (Eigen::Index j = 0; j < size(); ++j) m(target[j], j) = sign[j];
  return m;
}

Eigen::MatrixXd SignedPermutation::apply_left(const Eigen::MatrixXd& m) const {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < size(); ++j) out.row(target[j]) = sign[j] * m.row(j);
  return out;
}

Eigen::MatrixXd SignedPermutation::apply_right(const Eigen::MatrixXd& m) const {
  // (m U)(:, j) = sign[j] * m(:, target[j])
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < size(); ++j) out.col(j) = sign[j] * m.col(target[j]);
  return out;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& inner) const {
  SignedPermutation out;
  out.target.resize(inner.size());
  out.sign.resize(inner.size());
  for (Eigen::Index j = 0; j < inner.size(); ++j) {
    out.target[j] = target[inner.target[j]];
    out.sign[j] = sign[inner.target[j]] * inner.sign[j];
  }
  return out;
}

std::optional<SignedPermutation> SignedPermutation::from_dense(const Eigen::MatrixXd& m,
                                                               double tol) {
  if (m.rows() != m.cols()) return std::nullopt;
  SignedPermutation p;
  p.target.assign(m.cols(), -1);
  p.sign.assign(m.cols(), 0.0);
  std::vector<bool> hit(m.rows(), false);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double v = m(i, j);
      if (std::abs(v) <= tol) continue;
      if (p.target[j] >= 0 || std::abs(std::abs(v) - 1.0) > tol || hit[i]) return std::nullopt;
      p.target[j] = i;
      p.sign[j] = v > 0 ? 1.0 : -1.0;
      hit[i] = true;
    }
    if (p.target[j] < 0) return std::nullopt;
  }
  return p;
}

Eigen::MatrixXd pi_rotation(const SpinOperatorsd& ops, int k) {
  // Eigenvalues m of the unscaled component map to exp(-i pi m) = (-1)^m.
  const double unscale = 1.0 / ops.scale;
  const auto phase = [](double m) { return std::lround(m) % 2 == 0 ? 1.0 : -1.0; };
  if (k == ops.imaginary_axis) {
    const Eigen::MatrixXcd h = ops.complex_component(k) * unscale;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd d(h.rows());
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = phase(es.eigenvalues()(i));
    const Eigen::MatrixXcd u = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
    return u.real();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ops.components[k] * unscale);
  Eigen::VectorXd d(ops.dimension());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = phase(es.eigenvalues()(i));
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

std::string SymmetryGroup::element_name(int g) {
  static const std::array<const char*, 4> rot = {"E", "C2(1)", "C2(2)", "C2(3)"};
  std::string name = rot[g / 2];
  if (g % 2 == 1) name = (g / 2 == 0) ? "Swap" : name + "*Swap";
  return name;
}

SymmetryGroup build_group(int S) {
  if (S < 0) throw ValidationError("spin must be non-negative, got " + std::to_string(S));
  const auto ops = spin_matrices<double>(S);
  const Eigen::Index n = ops.dimension();

  std::array<SignedPermutation, 4> rotations;
  rotations[0] = identity_permutation(n * n);
  for (int k = 0; k < 3; ++k) {
    const auto single = SignedPermutation::from_dense(pi_rotation(ops, k), 1e-9);
    if (!single)
      throw NumericalError("pi-rotation about axis " + std::to_string(k + 1) +
                           " is not a signed permutation at S=" + std::to_string(S));
    rotations[k + 1] = kron_square(*single);
  }
  const SignedPermutation swap = swap_permutation(n);

  SymmetryGroup group;
  group.spin = S;
  for (int r = 0; r < 4; ++r) {
    group.elements[2 * r] = rotations[r];
    group.elements[2 * r + 1] = rotations[r].compose(swap);
  }
  for (int i = 0; i < 8; ++i) {
    const IrrepLabel label = IrrepLabel::from_index(i);
    for (int g = 0; g < 8; ++g) {
      const int r = g / 2;
      const int rot = r == 0 ? 1 : rotation_character(label.rotation, r - 1);
      const int sw = (g % 2 == 1 && label.swap == SwapLabel::a) ? -1 : 1;
      group.character_table(i, g) = rot * sw;
    }
  }
  return group;
}

std::array<Projector, 8> projectors(const SymmetryGroup& group) {
  const Eigen::Index dim = group.dimension();
  std::array<Projector, 8> out;
  for (int i = 0; i < 8; ++i) {
    Projector& p = out[i];
    p.irrep = IrrepLabel::from_index(i);
    p.matrix = Eigen::MatrixXd::Zero(dim, dim);
    for (int g = 0; g < 8; ++g) {
      const double w = group.character_table(i, g) / 8.0;
      const SignedPermutation& u = group.elements[g];
      for (Eigen::Index j = 0; j < dim; ++j) p.matrix(u.target[j], j) += w * u.sign[j];
    }
    const double trace = p.matrix.trace();
    const double rounded = std::round(trace);
    if (std::abs(trace - rounded) > 1e-8)
      throw NumericalError("projector trace for " + p.irrep.name() + " is not an integer: " +
                           std::to_string(trace));
    p.dimension_count = static_cast<int>(rounded);
  }
  return out;
}

namespace {

Eigen::MatrixXd basis_from_eigen(const Projector& projector) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(projector.matrix);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
  if (static_cast<int>(keep.size()) != projector.dimension_count)
    throw NumericalError("projector rank " + std::to_string(keep.size()) +
                         " disagrees with its trace " +
                         std::to_string(projector.dimension_count) + " for " +
                         projector.irrep.name());
  Eigen::MatrixXd basis(projector.matrix.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    basis.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]);
  return basis;
}

}  // namespace

Eigen::MatrixXd block_basis(const Projector& projector) {
  const Eigen::MatrixXd& P = projector.matrix;
  const Eigen::Index dim = P.rows();
  constexpr double support_tol = 1e-10;

  // Columns of P are orbit sums; distinct orbits have disjoint supports, so
  // one normalized column per orbit is already orthonormal.
  std::vector<bool> covered(dim, false);
  std::vector<Eigen::VectorXd> cols;
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (covered[j]) continue;
    const Eigen::VectorXd c = P.col(j);
    const double nrm = c.norm();
    covered[j] = true;
    if (nrm < support_tol) continue;
    for (Eigen::Index i = 0; i < dim; ++i)
      if (std::abs(c(i)) > support_tol) covered[i] = true;
    cols.push_back(c / nrm);
  }
  if (static_cast<int>(cols.size()) == projector.dimension_count) {
    Eigen::MatrixXd basis(dim, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = cols[c];
    const double ortho =
        (basis.transpose() * basis - Eigen::MatrixXd::Identity(basis.cols(), basis.cols()))
            .cwiseAbs()
            .maxCoeff();
    const double range = basis.cols() == 0 ? 0.0 : (P * basis - basis).cwiseAbs().maxCoeff();
    if (basis.cols() == 0 || (ortho <= 1e-12 && range <= 1e-10)) return basis;
  }
  return basis_from_eigen(projector);
}

std::array<int, 8> irrep_census_bruteforce(const SymmetryGroup& group) {
  const Eigen::Index dim = group.dimension();
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> uni(1.0, 2.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  std::array<Eigen::MatrixXd, 8> dense;
  for (int g = 0; g < 8; ++g) {
    dense[g] = group.matrix(g);
    m += uni(rng) * dense[g];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  std::array<int, 8> counts{};
  for (Eigen::Index q = 0; q < dim; ++q) {
    const Eigen::VectorXd v = es.eigenvectors().col(q);
    Eigen::Matrix<double, 8, 1> pattern;
    for (int g = 0; g < 8; ++g) pattern(g) = v.dot(dense[g] * v);
    int match = -1;
    for (int i = 0; i < 8; ++i)
      if ((group.character_table.row(i).transpose() - pattern).cwiseAbs().maxCoeff() < 1e-6)
        match = i;
    if (match < 0) throw NumericalError("eigenvector without a definite symmetry pattern");
    ++counts[match];
  }
  return counts;
}

}  // namespace manakov
