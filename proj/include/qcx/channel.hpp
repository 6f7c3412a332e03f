#pragma once

#include <Eigen/Dense>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcx/group.hpp"
#include "qcx/irreps.hpp"
#include "qcx/spectral.hpp"

namespace qcx {

/// The quantum expander channel ℰ(ρ) = (1/|Γ|) Σ_{γ∈Γ} r_λ(γ) ρ r_λ(γ)†.
/// Kraus operators are the unitaries r_λ(γ) themselves; the uniform 1/|Γ|
/// weight is applied by `apply`. Unitary Kraus operators with uniform weights
/// make the channel both trace-preserving and unital.
struct ExpanderChannel {
  GroupSpec group;
  IrrepLabel label;
  std::vector<std::string> generator_strings;
  Eigen::Index dim = 0;
  std::vector<Eigen::MatrixXcd> kraus;

  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& rho) const;
  Eigen::MatrixXcd apply_adjoint(const Eigen::MatrixXcd& x) const;
};

/// Builds the channel from (Γ, λ). The trivial irrep is rejected: its channel
/// is the identity scalar and certifies nothing.
ExpanderChannel build_channel(const GeneratorSet& gens, const IrrepHandle& h);

/// Column-stacking vectorization: vec(AXB) = (Bᵀ ⊗ A)·vec(X).
Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, Eigen::Index d);

/// |τ̂⟩ = d^{−1/2} Σ_b |b⟩⊗|b⟩ = vec(I/√d), the channel's fixed unit vector.
Eigen::VectorXcd maximally_mixed_vec(Eigen::Index d);

inline constexpr Eigen::Index kDefaultSuperopDimCap = 64;  // d ≤ 64 ⇒ d² ≤ 4096

/// The d²×d² matrix Ê with vec(ℰ(ρ)) = Ê·vec(ρ); under column stacking
/// Ê = (1/|Γ|) Σ_γ r(γ)* ⊗ r(γ). Throws above the cap — use the iterative path.
Eigen::MatrixXcd superoperator(const ExpanderChannel& ch,
                               Eigen::Index dim_cap = kDefaultSuperopDimCap);

/// λ₂(ℰ) = ‖Ê − |τ̂⟩⟨τ̂|‖_∞ by dense SVD of the deflated superoperator.
double quantum_lambda2_dense(const ExpanderChannel& ch,
                             Eigen::Index dim_cap = kDefaultSuperopDimCap);

/// Matrix-free λ₂(ℰ): power iteration of M†M for M(X) = ℰ(X) − (tr X/d)·I on
/// d×d matrices under the Hilbert–Schmidt inner product.
NormEstimate quantum_lambda2_iterative(const ExpanderChannel& ch, const PowerIterOptions& opts = {});

/// The vectorized deflated channel map (shares the channel's storage; keep
/// the channel alive while using the map).
LinearMap deflated_channel_map(const ExpanderChannel& ch);

/// Certification record for one (G, Γ, λ) instance.
struct SpectralReport {
  std::optional<double> classical_lambda2;
  std::string classical_note;  // set when the classical side is omitted
  double quantum_lambda2 = 0.0;
  std::optional<bool> inequality_holds;
  std::string method;  // "dense" or "iterative"
  double tolerance = 1e-8;
  long iterations = 0;
  bool converged = true;
  std::vector<std::string> notes;
};

struct GapOptions {
  enum class Method { Auto, Dense, Iterative };
  Method method = Method::Auto;
  double tolerance = 1e-8;  // slack allowed in quantum ≤ classical + tol
  PowerIterOptions power;
  std::uint64_t enum_cap = kDefaultEnumCap;
  Eigen::Index dense_cap = kDefaultSuperopDimCap;
  Eigen::Index walk_dense_cap = 1024;
};

/// Computes both sides of λ₂(ℰ) ≤ λ₂(W_Γ) and reports whether it holds.
SpectralReport verify_gap_inequality(const GroupSpec& group, const GeneratorSet& gens,
                                     const IrrepHandle& h, const GapOptions& opts = {});

/// max over nontrivial λ of ‖(1/|Γ|) Σ_γ r_λ(γ)‖_∞ — equals λ₂(W_Γ).
double irrep_max_crosscheck(const GroupSpec& group, const GeneratorSet& gens,
                            std::uint64_t cap = kDefaultEnumCap);

/// Same max restricted to ν ≠ trivial with m_ν ≠ 0 in V_λ ⊗ V_λ* — equals
/// λ₂(ℰ). The empty restriction (one-dimensional λ) yields 0.
double quantum_irrep_max(const GroupSpec& group, const GeneratorSet& gens, const IrrepHandle& h,
                         std::uint64_t cap = kDefaultEnumCap);

/// Per-irrep averages ‖(1/|Γ|) Σ_γ r_λ(γ)‖_∞ aligned with list_irreps order.
std::vector<double> irrep_average_norms(const std::vector<IrrepHandle>& irreps,
                                        const GeneratorSet& gens);

/// Density-matrix helpers.
struct DensityMatrix {
  Eigen::MatrixXcd rho;

  static DensityMatrix maximally_mixed(Eigen::Index d);
  static DensityMatrix pure(const Eigen::VectorXcd& psi);
  static DensityMatrix random(Eigen::Index d, std::mt19937_64& rng);

  /// Largest violation of Hermiticity / unit trace / positivity.
  double validation_residual() const;
  bool is_valid(double tol = 1e-10) const { return validation_residual() <= tol; }
};

/// Von Neumann entropy −Σ p log₂ p of a density matrix, in bits.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

}  // namespace qcx
