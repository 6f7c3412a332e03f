#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

namespace qcx {

/// Matrix-free linear map on C^dim. The adjoint rule is required for the
/// power-iteration path; dense callers can materialize instead.
struct LinearMap {
  Eigen::Index dim = 0;
  std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)> forward;
  std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)> adjoint;
};

struct PowerIterOptions {
  double rayleigh_tol = 1e-12;  // stop when successive Rayleigh quotients differ by less
  int max_iter = 10000;         // per restart
  int seeds = 3;                // random restarts; result is the max over restarts
  std::uint64_t seed = 0;
};

struct NormEstimate {
  double value = 0.0;
  bool converged = false;
  long iterations = 0;  // total across restarts
};

/// Largest singular value of the map, via power iteration on M†M.
/// The Rayleigh quotient sequence is nondecreasing; restarts guard against
/// a start vector orthogonal to the top singular subspace.
NormEstimate operator_norm(const LinearMap& map, const PowerIterOptions& opts = {});

/// v ↦ Mv − ⟨fixed|v⟩·fixed. Requires ‖fixed‖ = 1. If M·fixed = fixed the
/// deflated map annihilates `fixed`, exposing the second singular value.
LinearMap deflate(LinearMap map, Eigen::VectorXcd fixed);

/// Dense oracle: largest singular value of (m − |fixed⟩⟨fixed|) by full SVD.
double dense_lambda2(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& fixed);

/// Largest singular value of a dense matrix.
double dense_operator_norm(const Eigen::MatrixXcd& m);

/// Wraps an explicit matrix as a LinearMap (with adjoint).
LinearMap matrix_map(Eigen::MatrixXcd m);

}  // namespace qcx
