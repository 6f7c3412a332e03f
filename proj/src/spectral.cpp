#include "qcx/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

namespace qcx {

namespace {

Eigen::VectorXcd random_unit_vector(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = std::complex<double>(gauss(rng), gauss(rng));
  double n = v.norm();
  if (n == 0.0) v(0) = 1.0;
  else v /= n;
  return v;
}

}  // namespace

NormEstimate operator_norm(const LinearMap& map, const PowerIterOptions& opts) {
  if (!map.forward) throw std::invalid_argument("operator_norm: map has no forward rule");
  if (!map.adjoint) throw std::invalid_argument("operator_norm: power iteration needs an adjoint rule");
  if (map.dim <= 0) return NormEstimate{0.0, true, 0};

  std::mt19937_64 rng(opts.seed);
  NormEstimate best;
  bool first = true;
  for (int s = 0; s < std::max(1, opts.seeds); ++s) {
    Eigen::VectorXcd v = random_unit_vector(map.dim, rng);
    double rayleigh = 0.0;
    double prev = -1.0;
    bool converged = false;
    long iters = 0;
    for (int k = 0; k < opts.max_iter; ++k) {
      ++iters;
      Eigen::VectorXcd w = map.forward(v);
      rayleigh = w.squaredNorm();  // ⟨v, M†M v⟩ for unit v
      if (rayleigh == 0.0) {
        converged = true;
        break;
      }
      if (k > 0 && std::abs(rayleigh - prev) < opts.rayleigh_tol) {
        converged = true;
        break;
      }
      prev = rayleigh;
      Eigen::VectorXcd z = map.adjoint(w);
      double nz = z.norm();
      if (nz == 0.0) {
        converged = true;
        break;
      }
      v = z / nz;
    }
    double value = std::sqrt(std::max(0.0, rayleigh));
    best.iterations += iters;
    if (first || value > best.value) {
      best.value = value;
      best.converged = converged;
      first = false;
    }
  }
  return best;
}

LinearMap deflate(LinearMap map, Eigen::VectorXcd fixed) {
  if (fixed.size() != map.dim) throw std::invalid_argument("deflate: dimension mismatch");
  if (std::abs(fixed.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("deflate: fixed vector must have unit norm");
  auto fwd = std::move(map.forward);
  auto adj = std::move(map.adjoint);
  auto f = std::make_shared<Eigen::VectorXcd>(std::move(fixed));
  LinearMap out;
  out.dim = map.dim;
  out.forward = [fwd, f](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
    return fwd(v) - f->dot(v) * (*f);
  };
  if (adj) {
    out.adjoint = [adj, f](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
      return adj(v) - f->dot(v) * (*f);
    };
  }
  return out;
}

double dense_lambda2(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& fixed) {
  if (m.rows() != m.cols() || fixed.size() != m.rows())
    throw std::invalid_argument("dense_lambda2: dimension mismatch");
  if (std::abs(fixed.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("dense_lambda2: fixed vector must have unit norm");
  Eigen::MatrixXcd deflated = m - fixed * fixed.adjoint();
  return dense_operator_norm(deflated);
}

double dense_operator_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  // Jacobi rather than divide-and-conquer: Eigen 3.4.0's BDCSVD returns
  // spurious values on the heavily degenerate spectra walk operators produce.
  if (m.rows() <= 512) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.adjoint() * m, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

LinearMap matrix_map(Eigen::MatrixXcd m) {
  auto mat = std::make_shared<Eigen::MatrixXcd>(std::move(m));
  LinearMap out;
  out.dim = mat->rows();
  out.forward = [mat](const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return (*mat) * v; };
  out.adjoint = [mat](const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return mat->adjoint() * v; };
  return out;
}

}  // namespace qcx
