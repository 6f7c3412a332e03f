#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "qcx/group.hpp"
#include "qcx/spectral.hpp"

namespace qcx {

/// Generators of S_{N+1} exposed as point-evaluation rules. Construction from
/// a rule materializes lookup (and inverse-lookup) tables so that image and
/// preimage are O(1); the rule interface is what a structured generator
/// family would plug into.
class PermutationOracle {
 public:
  using Rule = std::function<std::uint32_t(std::size_t j, std::uint32_t x)>;  // 1-based points

  /// One-line permutations of {1..n_points}, validated as bijections.
  static PermutationOracle from_permutations(std::vector<std::vector<std::uint32_t>> perms);
  static PermutationOracle from_rule(std::size_t n_points, std::size_t degree, const Rule& rule);
  /// `degree` uniformly random permutations of {1..N+1}.
  static PermutationOracle random(std::uint32_t n, std::size_t degree, std::uint64_t seed);

  std::size_t points() const { return points_; }       // N+1
  std::uint32_t big_n() const { return static_cast<std::uint32_t>(points_ - 1); }
  std::size_t degree() const { return perms_.size(); }
  std::uint32_t image(std::size_t j, std::uint32_t x) const { return perms_[j][x - 1]; }
  std::uint32_t preimage(std::size_t j, std::uint32_t x) const { return inverses_[j][x - 1]; }

  /// The generators as elements of symmetric(N+1), for the enumerable path.
  std::vector<GroupElement> as_group_elements() const;

 private:
  std::size_t points_ = 0;
  std::vector<std::vector<std::uint32_t>> perms_;     // one-line, 1-based values
  std::vector<std::vector<std::uint32_t>> inverses_;
};

/// Defining representation r_def(π)|x⟩ = |π(x)⟩ applied to a coefficient
/// vector of length N+1, in O(N) without materializing the matrix.
Eigen::VectorXcd defining_action(const PermutationOracle& oracle, std::size_t j,
                                 const Eigen::VectorXcd& v);

/// The embedding unitary: the Householder reflection H = I − 2|w⟩⟨w| with
/// |w⟩ ∝ |N+1⟩ − (N+1)^{-1/2} Σ_x |x⟩. H is an involution and maps |N+1⟩ to
/// the uniform superposition. O(N) per application.
Eigen::VectorXcd embedding_unitary_apply(std::size_t n_points, const Eigen::VectorXcd& v);

/// r_{(N,1)}(π_j) applied to u ∈ C^N: pad with a zero slot, conjugate the
/// defining action by H, truncate. The truncated amplitude must vanish;
/// leakage beyond 1e-8 signals a broken oracle and throws. Pass
/// `use_inverse` to apply r_{(N,1)}(π_j⁻¹) = r_{(N,1)}(π_j)ᵀ.
Eigen::VectorXcd standard_rep_apply(const PermutationOracle& oracle, std::size_t j,
                                    const Eigen::VectorXcd& u, bool use_inverse = false);

/// λ₂ of the channel ℰ(ρ) = (1/D) Σ_j r_{(N,1)}(π_j) ρ r_{(N,1)}(π_j)†,
/// matrix-free: each power-iteration step costs O(D·N²) and memory O(N²).
NormEstimate standard_channel_lambda2(const PermutationOracle& oracle,
                                      const std::vector<std::size_t>& generator_indices,
                                      const PowerIterOptions& opts = {});

/// All oracle generators.
NormEstimate standard_channel_lambda2(const PermutationOracle& oracle,
                                      const PowerIterOptions& opts = {});

}  // namespace qcx
