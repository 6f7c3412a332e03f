#include "qcx/standard_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qcx {

namespace {

void validate_bijection(const std::vector<std::uint32_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto v : perm) {
    if (v < 1 || v > perm.size() || seen[v - 1])
      throw std::invalid_argument("oracle permutation is not a bijection on {1..N+1}");
    seen[v - 1] = true;
  }
}

std::vector<std::uint32_t> invert(const std::vector<std::uint32_t>& perm) {
  std::vector<std::uint32_t> inv(perm.size());
  for (std::uint32_t x = 0; x < perm.size(); ++x) inv[perm[x] - 1] = x + 1;
  return inv;
}

// In-place H·v for the Householder embedding reflection.
void householder_inplace(Eigen::VectorXcd& v) {
  const auto n_points = static_cast<std::size_t>(v.size());
  const double root = 1.0 / std::sqrt(static_cast<double>(n_points));
  // w ∝ e_{N+1} − root·1; squared norm before normalization is 2(1 − root).
  const double w_last = 1.0 - root;
  const double norm_sq = 2.0 * (1.0 - root);
  // ⟨w, v⟩ with the unnormalized w.
  std::complex<double> dot = w_last * v(v.size() - 1);
  for (Eigen::Index i = 0; i + 1 < v.size(); ++i) dot += -root * v(i);
  const std::complex<double> coeff = 2.0 * dot / norm_sq;
  for (Eigen::Index i = 0; i + 1 < v.size(); ++i) v(i) -= coeff * (-root);
  v(v.size() - 1) -= coeff * w_last;
}

}  // namespace

PermutationOracle PermutationOracle::from_permutations(std::vector<std::vector<std::uint32_t>> perms) {
  if (perms.empty()) throw std::invalid_argument("oracle needs at least one generator");
  PermutationOracle o;
  o.points_ = perms.front().size();
  if (o.points_ < 2) throw std::invalid_argument("oracle needs at least 2 points");
  for (const auto& p : perms) {
    if (p.size() != o.points_) throw std::invalid_argument("oracle permutations have mixed sizes");
    validate_bijection(p);
    o.inverses_.push_back(invert(p));
  }
  o.perms_ = std::move(perms);
  return o;
}

PermutationOracle PermutationOracle::from_rule(std::size_t n_points, std::size_t degree,
                                               const Rule& rule) {
  std::vector<std::vector<std::uint32_t>> perms(degree);
  for (std::size_t j = 0; j < degree; ++j) {
    perms[j].resize(n_points);
    for (std::uint32_t x = 1; x <= n_points; ++x) perms[j][x - 1] = rule(j, x);
  }
  return from_permutations(std::move(perms));
}

PermutationOracle PermutationOracle::random(std::uint32_t n, std::size_t degree, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("standard representation needs N >= 2");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::uint32_t>> perms(degree);
  for (auto& p : perms) {
    p.resize(n + 1);
    std::iota(p.begin(), p.end(), 1u);
    std::shuffle(p.begin(), p.end(), rng);
  }
  return from_permutations(std::move(perms));
}

std::vector<GroupElement> PermutationOracle::as_group_elements() const {
  auto spec = GroupSpec::symmetric(static_cast<std::int64_t>(points_));
  std::vector<GroupElement> out;
  for (const auto& p : perms_) {
    std::vector<std::int64_t> payload(p.begin(), p.end());
    out.push_back(make_element(spec, std::move(payload)));
  }
  return out;
}

Eigen::VectorXcd defining_action(const PermutationOracle& oracle, std::size_t j,
                                 const Eigen::VectorXcd& v) {
  if (j >= oracle.degree()) throw std::out_of_range("generator index out of range");
  if (v.size() != static_cast<Eigen::Index>(oracle.points()))
    throw std::invalid_argument("defining_action: vector must have length N+1");
  Eigen::VectorXcd out(v.size());
  for (std::uint32_t x = 1; x <= oracle.points(); ++x) out(oracle.image(j, x) - 1) = v(x - 1);
  return out;
}

Eigen::VectorXcd embedding_unitary_apply(std::size_t n_points, const Eigen::VectorXcd& v) {
  if (v.size() != static_cast<Eigen::Index>(n_points))
    throw std::invalid_argument("embedding_unitary_apply: vector must have length N+1");
  Eigen::VectorXcd out = v;
  householder_inplace(out);
  return out;
}

Eigen::VectorXcd standard_rep_apply(const PermutationOracle& oracle, std::size_t j,
                                    const Eigen::VectorXcd& u, bool use_inverse) {
  if (j >= oracle.degree()) throw std::out_of_range("generator index out of range");
  const auto n = static_cast<Eigen::Index>(oracle.big_n());
  if (u.size() != n) throw std::invalid_argument("standard_rep_apply: vector must have length N");
  Eigen::VectorXcd padded(n + 1);
  padded.head(n) = u;
  padded(n) = 0.0;
  householder_inplace(padded);
  Eigen::VectorXcd permuted(n + 1);
  for (std::uint32_t x = 1; x <= oracle.points(); ++x) {
    std::uint32_t y = use_inverse ? oracle.preimage(j, x) : oracle.image(j, x);
    permuted(y - 1) = padded(x - 1);
  }
  householder_inplace(permuted);
  double leak = std::abs(permuted(n));
  if (leak > 1e-8 * std::max(1.0, u.norm()))
    throw std::runtime_error("standard_rep_apply: embedded subspace leakage " + std::to_string(leak) +
                             "; oracle generator is not a bijection");
  return permuted.head(n);
}

NormEstimate standard_channel_lambda2(const PermutationOracle& oracle,
                                      const std::vector<std::size_t>& generator_indices,
                                      const PowerIterOptions& opts) {
  if (oracle.big_n() < 2) throw std::invalid_argument("standard representation needs N >= 2");
  if (generator_indices.empty()) throw std::invalid_argument("no generator indices given");
  for (auto j : generator_indices) {
    if (j >= oracle.degree()) throw std::out_of_range("generator index out of range");
  }
  const auto n = static_cast<Eigen::Index>(oracle.big_n());
  const auto p = n + 1;

  // Each Kraus operator lifts to K_j = T·H·P_j·H·E with the same Householder
  // reflection H on both sides, so the outer conjugation factors out of the
  // generator sum:
  //   ℰ(X) = H ( (1/D) Σ_j P_j (H X̃ H) P_j† ) H  restricted to the top block,
  // with X̃ the zero-padded lift. One channel application costs two
  // Householder conjugations plus D index gathers, all O(N²).
  const double root = 1.0 / std::sqrt(static_cast<double>(p));
  Eigen::VectorXd w(p);
  w.setConstant(-root);
  w(p - 1) = 1.0 - root;
  w /= w.norm();

  auto conj_householder = [&w](Eigen::MatrixXd& m) {
    Eigen::RowVectorXd wtm = w.transpose() * m;
    m.noalias() -= (2.0 * w) * wtm;
    Eigen::VectorXd mw = m * w;
    m.noalias() -= (2.0 * mw) * w.transpose();
  };

  // Precomputed gather indices: P M P† reads out(r, c) = M(π^{-1}(r), π^{-1}(c)).
  std::vector<std::vector<Eigen::Index>> pre_idx(generator_indices.size()),
      img_idx(generator_indices.size());
  for (std::size_t k = 0; k < generator_indices.size(); ++k) {
    pre_idx[k].resize(static_cast<std::size_t>(p));
    img_idx[k].resize(static_cast<std::size_t>(p));
    for (Eigen::Index r = 0; r < p; ++r) {
      pre_idx[k][static_cast<std::size_t>(r)] = static_cast<Eigen::Index>(
          oracle.preimage(generator_indices[k], static_cast<std::uint32_t>(r + 1))) - 1;
      img_idx[k][static_cast<std::size_t>(r)] = static_cast<Eigen::Index>(
          oracle.image(generator_indices[k], static_cast<std::uint32_t>(r + 1))) - 1;
    }
  }

  // The Kraus operators are real orthogonal, so the superoperator is a real
  // matrix and its top singular subspace can be taken real: the power
  // iteration runs entirely in real arithmetic. Deflation against the fixed
  // point is X ↦ ℰ(X) − (tr X / N)·I.
  Eigen::MatrixXd lifted(p, p), sum(p, p);
  auto deflated_channel = [&](const Eigen::MatrixXd& x, bool adjoint_channel) -> Eigen::MatrixXd {
    lifted.setZero();
    lifted.topLeftCorner(n, n) = x;
    conj_householder(lifted);
    sum.setZero();
    for (std::size_t k = 0; k < generator_indices.size(); ++k) {
      const auto& idx = adjoint_channel ? img_idx[k] : pre_idx[k];
      for (Eigen::Index c = 0; c < p; ++c) {
        const Eigen::Index pc = idx[static_cast<std::size_t>(c)];
        for (Eigen::Index r = 0; r < p; ++r)
          sum(r, c) += lifted(idx[static_cast<std::size_t>(r)], pc);
      }
    }
    sum /= static_cast<double>(generator_indices.size());
    conj_householder(sum);
    double scale = std::max(1.0, x.norm());
    double leak = sum.row(p - 1).norm() + sum.col(p - 1).norm();
    if (leak > 1e-8 * scale)
      throw std::runtime_error("standard representation channel: embedded subspace leakage " +
                               std::to_string(leak));
    Eigen::MatrixXd out = sum.topLeftCorner(n, n);
    out.diagonal().array() -= x.trace() / static_cast<double>(n);
    return out;
  };

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  NormEstimate best;
  bool first = true;
  for (int s = 0; s < std::max(1, opts.seeds); ++s) {
    Eigen::MatrixXd v(n, n);
    for (Eigen::Index c = 0; c < n; ++c)
      for (Eigen::Index r = 0; r < n; ++r) v(r, c) = gauss(rng);
    v /= v.norm();
    double rayleigh = 0.0, prev = -1.0;
    bool converged = false;
    long iters = 0;
    for (int k = 0; k < opts.max_iter; ++k) {
      ++iters;
      Eigen::MatrixXd fwd = deflated_channel(v, false);
      rayleigh = fwd.squaredNorm();
      if (rayleigh == 0.0 || (k > 0 && std::abs(rayleigh - prev) < opts.rayleigh_tol)) {
        converged = true;
        break;
      }
      prev = rayleigh;
      Eigen::MatrixXd z = deflated_channel(fwd, true);
      double nz = z.norm();
      if (nz == 0.0) {
        converged = true;
        break;
      }
      v = z / nz;
    }
    best.iterations += iters;
    double value = std::sqrt(std::max(0.0, rayleigh));
    if (first || value > best.value) {
      best.value = value;
      best.converged = converged;
      first = false;
    }
  }
  return best;
}

NormEstimate standard_channel_lambda2(const PermutationOracle& oracle, const PowerIterOptions& opts) {
  std::vector<std::size_t> all(oracle.degree());
  std::iota(all.begin(), all.end(), 0u);
  return standard_channel_lambda2(oracle, all, opts);
}

}  // namespace qcx
