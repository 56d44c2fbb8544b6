#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>

namespace fractalmark {

/// Orthonormal DCT-II matrix of size N; row u is the u-th basis vector, so
/// `B * x` transforms a column and `B * X * B.transpose()` a block.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dct_matrix(int size) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> basis(size, size);
  const Scalar n = static_cast<Scalar>(size);
  for (int u = 0; u < size; ++u) {
    const Scalar scale = u == 0 ? std::sqrt(Scalar(1) / n) : std::sqrt(Scalar(2) / n);
    for (int x = 0; x < size; ++x) {
      basis(u, x) = scale * std::cos(std::numbers::pi_v<Scalar> * (Scalar(2) * x + Scalar(1)) * u / (Scalar(2) * n));
    }
  }
  return basis;
}

/// Separable 2-D basis image for horizontal frequency u and vertical
/// frequency v, indexed (row y, column x).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dct_basis_image(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& basis, int u, int v) {
  return basis.row(v).transpose() * basis.row(u);
}

/// Single transform coefficient <block, basis image>.
template <typename DerivedBlock, typename DerivedBasis>
typename DerivedBlock::Scalar dct_coefficient(const Eigen::MatrixBase<DerivedBlock>& block,
                                              const Eigen::MatrixBase<DerivedBasis>& basis_image) {
  return block.cwiseProduct(basis_image).sum();
}

}  // namespace fractalmark
