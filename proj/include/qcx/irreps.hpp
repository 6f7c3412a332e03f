#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qcx/group.hpp"
#include "qcx/partition.hpp"

namespace qcx {

/// Labels for the irreps of dihedral(n): the one-dimensional characters and
/// the two-dimensional rotation irreps ρ_h, 1 ≤ h ≤ ⌈n/2⌉−1.
struct DihedralLabel {
  enum class Kind {
    Trivial,      // everything ↦ 1
    ReflectSign,  // s ↦ −1, r ↦ 1
    RotateSign,   // s ↦ 1, r ↦ −1 (n even only)
    BothSign,     // s ↦ −1, r ↦ −1 (n even only)
    Rotation2D,   // 2×2 rotation blocks with angle 2πh/n
  };
  Kind kind = Kind::Trivial;
  int h = 0;  // Rotation2D only

  bool operator==(const DihedralLabel& other) const { return kind == other.kind && h == other.h; }
};

/// Partition for symmetric(n), character index k for cyclic(n), DihedralLabel
/// for dihedral(n).
using IrrepLabel = std::variant<Partition, std::int64_t, DihedralLabel>;

std::string label_to_string(const IrrepLabel& label);
IrrepLabel parse_irrep_label(const GroupSpec& group, const std::string& text);
bool label_equal(const IrrepLabel& a, const IrrepLabel& b);

/// A concrete unitary irrep: a label plus a deterministic realization rule
/// g ↦ r_λ(g).
///
/// S_n realization is Young's orthogonal form over standard tableaux in
/// last-letter order: the adjacent transposition (i, i+1) acts on each
/// tableau with diagonal coefficient 1/d and coupling √(1 − 1/d²), d the
/// axial distance from i to i+1. General permutations are factored into
/// adjacent transpositions. All S_n and dihedral matrices are real
/// orthogonal; cyclic characters are the only complex-valued realization.
class IrrepHandle {
 public:
  static IrrepHandle make(const GroupSpec& group, const IrrepLabel& label);

  const GroupSpec& group() const { return group_; }
  const IrrepLabel& label() const { return label_; }
  std::string label_string() const { return label_to_string(label_); }
  Eigen::Index dim() const { return dim_; }
  bool is_trivial() const;

  Eigen::MatrixXcd matrix(const GroupElement& g) const;
  std::complex<double> character(const GroupElement& g) const;

 private:
  GroupSpec group_;
  IrrepLabel label_;
  Eigen::Index dim_ = 0;
  // YOR data (symmetric groups only): one matrix per adjacent transposition.
  std::shared_ptr<const std::vector<Eigen::MatrixXd>> adjacent_;
};

/// Complete list of inequivalent irreps, in canonical order: partitions in
/// descending lexicographic order for symmetric(n) (trivial first), k = 0..n−1
/// for cyclic(n), one-dimensional labels then rotation irreps for dihedral(n).
/// Product groups are not supported. `cap` bounds the order of the group for
/// which completeness can be verified.
std::vector<IrrepHandle> list_irreps(const GroupSpec& group, std::uint64_t cap = kDefaultEnumCap);

/// Characters of every irrep at every element: table(i, j) = χ_{irreps[i]}(elements[j]).
Eigen::MatrixXcd character_table(const std::vector<IrrepHandle>& irreps,
                                 const std::vector<GroupElement>& elements);

struct MultiplicityTable {
  std::vector<std::pair<IrrepLabel, long>> entries;  // aligned with list_irreps order
  long trivial = 0;                                  // multiplicity of the trivial irrep

  long of(const IrrepLabel& label) const;
};

/// Clebsch–Gordan multiplicities of V_λ ⊗ V_λ*: m_ν = ⟨χ_ν, χ_λ χ_λ*⟩,
/// computed by character inner products over the whole group. Validates that
/// every m_ν is a nonnegative integer and that Σ m_ν d_ν = d_λ².
MultiplicityTable tensor_multiplicities(const IrrepHandle& h, std::uint64_t cap = kDefaultEnumCap);
MultiplicityTable tensor_multiplicities(const IrrepHandle& h, const std::vector<IrrepHandle>& all_irreps,
                                        const Eigen::MatrixXcd& char_table, Eigen::Index h_row);

/// True iff Σ_λ d_λ² equals |G| exactly.
bool irrep_completeness_check(const GroupSpec& group, std::uint64_t cap = kDefaultEnumCap);

/// Σ d_λ² over a list (helper for completeness checks).
BigUint sum_squared_dims(const std::vector<IrrepHandle>& irreps);

}  // namespace qcx
