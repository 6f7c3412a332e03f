#include "qcx/qft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcx {

namespace {

Eigen::Index index_of(const std::vector<GroupElement>& order, const GroupElement& g) {
  auto it = std::lower_bound(order.begin(), order.end(), g);
  if (it == order.end() || !(*it == g)) throw std::logic_error("element missing from enumeration");
  return static_cast<Eigen::Index>(it - order.begin());
}

}  // namespace

QftMatrix qft_matrix(const GroupSpec& group, std::uint64_t cap) {
  QftMatrix qft;
  qft.elements = enumerate_elements(group, cap);
  qft.irreps = list_irreps(group, cap);
  const auto size = static_cast<Eigen::Index>(qft.elements.size());
  if (sum_squared_dims(qft.irreps) != group.order())
    throw std::runtime_error("irrep list incomplete: Σ d_λ² ≠ |G|");
  qft.u.resize(size, size);
  Eigen::Index row = 0;
  for (std::size_t l = 0; l < qft.irreps.size(); ++l) {
    const auto& h = qft.irreps[l];
    const double scale = std::sqrt(static_cast<double>(h.dim()) / static_cast<double>(size));
    std::vector<Eigen::MatrixXcd> mats;
    mats.reserve(qft.elements.size());
    for (const auto& g : qft.elements) mats.push_back(h.matrix(g));
    for (Eigen::Index i = 0; i < h.dim(); ++i) {
      for (Eigen::Index j = 0; j < h.dim(); ++j) {
        for (Eigen::Index c = 0; c < size; ++c)
          qft.u(row, c) = scale * mats[static_cast<std::size_t>(c)](i, j);
        qft.row_labels.emplace_back(static_cast<int>(l), static_cast<int>(i), static_cast<int>(j));
        ++row;
      }
    }
  }
  return qft;
}

double unitarity_residual(const QftMatrix& qft) {
  const Eigen::Index n = qft.u.rows();
  return (qft.u.adjoint() * qft.u - Eigen::MatrixXcd::Identity(n, n)).norm();
}

double left_translation_residual(const QftMatrix& qft, const GroupElement& x) {
  const Eigen::Index n = qft.u.rows();
  // L_x = Σ_g |xg⟩⟨g| as a permutation of the canonical order.
  Eigen::MatrixXcd lx = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index r = index_of(qft.elements, multiply(x, qft.elements[static_cast<std::size_t>(c)]));
    lx(r, c) = 1.0;
  }
  Eigen::MatrixXcd transformed = qft.u * lx * qft.u.adjoint();

  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(n, n);
  Eigen::Index offset = 0;
  for (const auto& h : qft.irreps) {
    const Eigen::Index d = h.dim();
    Eigen::MatrixXcd rx = h.matrix(x);
    // Block row/col index (i,j) ↔ offset + i*d + j; r_λ(x) acts on i, identity on j.
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index k = 0; k < d; ++k)
        for (Eigen::Index j = 0; j < d; ++j)
          expected(offset + i * d + j, offset + k * d + j) = rx(i, k);
    offset += d * d;
  }
  return (transformed - expected).norm();
}

double max_left_translation_residual(const QftMatrix& qft) {
  double worst = 0.0;
  for (const auto& x : qft.elements) worst = std::max(worst, left_translation_residual(qft, x));
  return worst;
}

double verify_left_translation_blocks(const GroupSpec& group, const GroupElement& x,
                                      std::uint64_t cap) {
  return left_translation_residual(qft_matrix(group, cap), x);
}

}  // namespace qcx
