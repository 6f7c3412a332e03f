#pragma once

#include <Eigen/Dense>
#include <tuple>
#include <vector>

#include "qcx/group.hpp"
#include "qcx/irreps.hpp"

namespace qcx {

/// The group Fourier transform U = Σ_{g,λ,i,j} √(d_λ/|G|) r_λ(g)_{ij} |λ,i,j⟩⟨g|.
/// Rows run over irreps in list_irreps order, then (i, j) row-major within each
/// irrep block; columns over elements in canonical order.
struct QftMatrix {
  Eigen::MatrixXcd u;
  std::vector<std::tuple<int, int, int>> row_labels;  // (irrep index, i, j)
  std::vector<IrrepHandle> irreps;
  std::vector<GroupElement> elements;
};

/// Dense cap default: the QFT matrix is |G|×|G|.
inline constexpr std::uint64_t kDefaultQftCap = 2000;

QftMatrix qft_matrix(const GroupSpec& group, std::uint64_t cap = kDefaultQftCap);

/// ‖U†U − I‖_F.
double unitarity_residual(const QftMatrix& qft);

/// ‖U L_x U† − Σ_λ |λ⟩⟨λ| ⊗ r_λ(x) ⊗ I_{d_λ}‖_F: the left regular
/// representation must block-diagonalize with r_λ(x) acting on the first
/// tensor factor of each V_λ ⊗ V_λ* block.
double left_translation_residual(const QftMatrix& qft, const GroupElement& x);

/// Max of left_translation_residual over every x in the group.
double max_left_translation_residual(const QftMatrix& qft);

/// One-shot form: builds the QFT and checks a single x.
double verify_left_translation_blocks(const GroupSpec& group, const GroupElement& x,
                                      std::uint64_t cap = kDefaultQftCap);

}  // namespace qcx
