#include <doctest.h>

#include <random>

#include "qcx/spectral.hpp"
#include "test_util.hpp"

using namespace qcx;

namespace {

LinearMap diagonal_map(std::vector<double> diag) {
  Eigen::VectorXcd d(static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) d(static_cast<Eigen::Index>(i)) = diag[i];
  Eigen::MatrixXcd m = d.asDiagonal();
  return matrix_map(m);
}

}  // namespace

TEST_CASE("operator norm of simple maps") {
  CHECK(operator_norm(matrix_map(Eigen::MatrixXcd::Identity(5, 5))).value == doctest::Approx(1.0));
  CHECK(operator_norm(diagonal_map({3.0, 1.0, 0.5})).value == doctest::Approx(3.0));
  std::mt19937_64 rng(3);
  Eigen::MatrixXcd u = testutil::random_unitary(6, rng);
  CHECK(operator_norm(matrix_map(u)).value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("maps are linear on random probes") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd m(8, 8);
  for (Eigen::Index i = 0; i < 8; ++i)
    for (Eigen::Index j = 0; j < 8; ++j) m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  auto map = matrix_map(m);
  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXcd u(8), v(8);
    for (Eigen::Index i = 0; i < 8; ++i) {
      u(i) = std::complex<double>(gauss(rng), gauss(rng));
      v(i) = std::complex<double>(gauss(rng), gauss(rng));
    }
    std::complex<double> a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
    CHECK((map.forward(a * u + b * v) - a * map.forward(u) - b * map.forward(v)).norm() < 1e-10);
  }
}

TEST_CASE("deflation removes exactly the fixed direction") {
  auto id = matrix_map(Eigen::MatrixXcd::Identity(4, 4));
  Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(4);
  e1(0) = 1.0;
  auto deflated = deflate(id, e1);
  CHECK(deflated.forward(e1).norm() < 1e-15);
  Eigen::VectorXcd e2 = Eigen::VectorXcd::Zero(4);
  e2(1) = 1.0;
  CHECK((deflated.forward(e2) - e2).norm() < 1e-15);

  Eigen::VectorXcd not_unit = Eigen::VectorXcd::Constant(4, 0.9);
  CHECK_THROWS_AS(deflate(matrix_map(Eigen::MatrixXcd::Identity(4, 4)), not_unit),
                  std::invalid_argument);
}

TEST_CASE("dense_lambda2 edge cases") {
  Eigen::VectorXcd u = Eigen::VectorXcd::Constant(5, 1.0 / std::sqrt(5.0));
  Eigen::MatrixXcd proj = u * u.adjoint();
  CHECK(dense_lambda2(proj, u) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(dense_lambda2(Eigen::MatrixXcd::Identity(5, 5), u) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power iteration agrees with dense SVD on random stochastic-like matrices") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::MatrixXcd m(20, 20);
    for (Eigen::Index j = 0; j < 20; ++j) {
      double colsum = 0.0;
      for (Eigen::Index i = 0; i < 20; ++i) {
        double w = unif(rng);
        m(i, j) = w;
        colsum += w;
      }
      m.col(j) /= colsum;
    }
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(20);
    f(trial % 20) = 1.0;
    PowerIterOptions opts;
    opts.seed = static_cast<std::uint64_t>(trial);
    auto est = operator_norm(deflate(matrix_map(m), f), opts);
    double dense = dense_lambda2(m, f);
    CHECK(est.value == doctest::Approx(dense).epsilon(1e-9));
    CHECK(est.value <= dense + 1e-9);
  }
}

TEST_CASE("operator norm is invariant under unitary conjugation") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd m(10, 10);
  for (Eigen::Index i = 0; i < 10; ++i)
    for (Eigen::Index j = 0; j < 10; ++j) m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::MatrixXcd u = testutil::random_unitary(10, rng);
  double direct = operator_norm(matrix_map(m)).value;
  double conjugated = operator_norm(matrix_map(u * m * u.adjoint())).value;
  CHECK(direct == doctest::Approx(conjugated).epsilon(1e-9));
}

TEST_CASE("restart maximum is nondecreasing in the number of seeds") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd m(12, 12);
  for (Eigen::Index i = 0; i < 12; ++i)
    for (Eigen::Index j = 0; j < 12; ++j) m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  auto map = matrix_map(m);
  double prev = 0.0;
  for (int seeds = 1; seeds <= 4; ++seeds) {
    PowerIterOptions opts;
    opts.seeds = seeds;
    opts.seed = 99;
    double value = operator_norm(map, opts).value;
    CHECK(value >= prev - 1e-12);
    prev = value;
  }
}

TEST_CASE("missing adjoint is rejected") {
  LinearMap map;
  map.dim = 3;
  map.forward = [](const Eigen::VectorXcd& v) { return v; };
  CHECK_THROWS_AS(operator_norm(map), std::invalid_argument);
}
