#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qcx/group.hpp"
#include "qcx/spectral.hpp"

namespace qcx {

/// Column-stochastic Cayley walk W_Γ = (1/|Γ|) Σ_γ Σ_g |γg⟩⟨g|, stored
/// column-sparse. Row/column indices follow the canonical element order.
struct WalkOperator {
  Eigen::Index dim = 0;
  std::size_t degree = 0;  // |Γ| counted with multiplicity
  std::vector<std::vector<std::pair<Eigen::Index, double>>> columns;
  std::vector<GroupElement> element_order;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
  Eigen::VectorXcd apply_adjoint(const Eigen::VectorXcd& v) const;
  Eigen::MatrixXd dense() const;
};

WalkOperator build_walk(const GroupSpec& group, const GeneratorSet& gens,
                        std::uint64_t cap = kDefaultEnumCap);

struct ClassicalGapResult {
  double value = 0.0;
  std::string method;  // "dense" or "iterative"
  bool converged = true;
  long iterations = 0;
};

/// λ₂(W_Γ) = ‖W_Γ − |u⟩⟨u|‖_∞ with |u⟩ the uniform state. Dense SVD up to
/// `dense_cap` rows, restarted power iteration on the deflated map above it.
/// Disconnected or bipartite walks simply report λ₂ = 1.
ClassicalGapResult classical_lambda2_report(const WalkOperator& walk,
                                            Eigen::Index dense_cap = 1024,
                                            const PowerIterOptions& opts = {});
double classical_lambda2(const WalkOperator& walk);

/// ‖W|u⟩ − |u⟩‖₂; at most ~1e-15·√|G| for any column-stochastic walk.
double stationarity_residual(const WalkOperator& walk);

/// The deflated map v ↦ Wv − ⟨u|v⟩|u⟩ (rank-one update never materialized).
/// The map holds a reference to the walk; keep the walk alive while using it.
LinearMap deflated_walk_map(const WalkOperator& walk);

/// True when the closure of Γ is the whole group.
bool is_connected(const GroupSpec& group, const GeneratorSet& gens,
                  std::uint64_t cap = kDefaultEnumCap);

/// 2-colorability of the undirected Cayley graph (edges for Γ ∪ Γ^{-1}).
bool is_bipartite(const GroupSpec& group, const GeneratorSet& gens,
                  std::uint64_t cap = kDefaultEnumCap);

}  // namespace qcx
