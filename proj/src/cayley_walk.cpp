#include "qcx/cayley_walk.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <queue>
#include <stdexcept>

namespace qcx {

namespace {

// Canonical order is payload-lexicographic, so an index lookup is a binary search.
Eigen::Index index_of(const std::vector<GroupElement>& order, const GroupElement& g) {
  auto it = std::lower_bound(order.begin(), order.end(), g);
  if (it == order.end() || !(*it == g)) throw std::logic_error("element missing from enumeration");
  return static_cast<Eigen::Index>(it - order.begin());
}

}  // namespace

Eigen::VectorXcd WalkOperator::apply(const Eigen::VectorXcd& v) const {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (const auto& [r, w] : columns[static_cast<std::size_t>(c)]) out(r) += w * v(c);
  }
  return out;
}

Eigen::VectorXcd WalkOperator::apply_adjoint(const Eigen::VectorXcd& v) const {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    std::complex<double> acc = 0.0;
    for (const auto& [r, w] : columns[static_cast<std::size_t>(c)]) acc += w * v(r);
    out(c) = acc;
  }
  return out;
}

Eigen::MatrixXd WalkOperator::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (const auto& [r, w] : columns[static_cast<std::size_t>(c)]) m(r, c) += w;
  }
  return m;
}

WalkOperator build_walk(const GroupSpec& group, const GeneratorSet& gens, std::uint64_t cap) {
  if (gens.elements.empty()) throw std::invalid_argument("build_walk: empty generator set");
  if (gens.group != group) throw std::invalid_argument("build_walk: generator set group mismatch");
  WalkOperator walk;
  walk.element_order = enumerate_elements(group, cap);
  walk.dim = static_cast<Eigen::Index>(walk.element_order.size());
  walk.degree = gens.elements.size();
  walk.columns.assign(static_cast<std::size_t>(walk.dim), {});
  const double weight = 1.0 / static_cast<double>(walk.degree);
  for (Eigen::Index c = 0; c < walk.dim; ++c) {
    auto& col = walk.columns[static_cast<std::size_t>(c)];
    for (const auto& gamma : gens.elements) {
      Eigen::Index r = index_of(walk.element_order, multiply(gamma, walk.element_order[static_cast<std::size_t>(c)]));
      auto it = std::find_if(col.begin(), col.end(), [r](const auto& e) { return e.first == r; });
      if (it == col.end()) col.emplace_back(r, weight);
      else it->second += weight;
    }
    std::sort(col.begin(), col.end());
  }
  return walk;
}

LinearMap deflated_walk_map(const WalkOperator& walk) {
  LinearMap map;
  map.dim = walk.dim;
  map.forward = [&walk](const Eigen::VectorXcd& v) { return walk.apply(v); };
  map.adjoint = [&walk](const Eigen::VectorXcd& v) { return walk.apply_adjoint(v); };
  Eigen::VectorXcd u = Eigen::VectorXcd::Constant(walk.dim, 1.0 / std::sqrt(static_cast<double>(walk.dim)));
  return deflate(std::move(map), u);
}

ClassicalGapResult classical_lambda2_report(const WalkOperator& walk, Eigen::Index dense_cap,
                                            const PowerIterOptions& opts) {
  ClassicalGapResult result;
  if (walk.dim <= dense_cap) {
    Eigen::MatrixXd m = walk.dense();
    m.array() -= 1.0 / static_cast<double>(walk.dim);  // subtract |u⟩⟨u|
    // Top singular value via the symmetric eigenproblem for MᵀM; handles the
    // heavily degenerate walk spectra that trip divide-and-conquer SVDs.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.transpose() * m, Eigen::EigenvaluesOnly);
    result.value = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
    result.method = "dense";
  } else {
    NormEstimate est = operator_norm(deflated_walk_map(walk), opts);
    result.value = est.value;
    result.method = "iterative";
    result.converged = est.converged;
    result.iterations = est.iterations;
  }
  return result;
}

double classical_lambda2(const WalkOperator& walk) { return classical_lambda2_report(walk).value; }

double stationarity_residual(const WalkOperator& walk) {
  Eigen::VectorXcd u = Eigen::VectorXcd::Constant(walk.dim, 1.0 / std::sqrt(static_cast<double>(walk.dim)));
  return (walk.apply(u) - u).norm();
}

bool is_connected(const GroupSpec& group, const GeneratorSet& gens, std::uint64_t cap) {
  if (gens.group != group) throw std::invalid_argument("is_connected: generator set group mismatch");
  return closure(gens, cap).generates_full_group;
}

bool is_bipartite(const GroupSpec& group, const GeneratorSet& gens, std::uint64_t cap) {
  auto elements = enumerate_elements(group, cap);
  auto sym = symmetrize(gens);
  const auto n = elements.size();
  std::vector<int> color(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      std::size_t cur = q.front();
      q.pop();
      for (const auto& gamma : sym.elements) {
        auto next = static_cast<std::size_t>(index_of(elements, multiply(gamma, elements[cur])));
        if (color[next] == -1) {
          color[next] = 1 - color[cur];
          q.push(next);
        } else if (color[next] == color[cur]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace qcx
