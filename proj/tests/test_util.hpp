#pragma once

// Shared test oracles and generators. Everything here is deliberately
// independent of the library code paths it is used to check.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qcx/group.hpp"

namespace testutil {

// Composition of one-line permutations (1-based values): (a∘b)(x) = a(b(x)).
inline std::vector<std::int64_t> compose_oneline(const std::vector<std::int64_t>& a,
                                                 const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[static_cast<std::size_t>(b[i]) - 1];
  return c;
}

// Circulant oracle for the walk on Z_n with generator multiset Γ: the walk
// eigenvalues are μ_k = (1/|Γ|) Σ_γ ω^{-γk}, and the deflated operator norm
// is max_{k≠0} |μ_k| (the walk is normal).
inline double circulant_lambda2(std::int64_t n, const std::vector<std::int64_t>& gammas) {
  double best = 0.0;
  for (std::int64_t k = 1; k < n; ++k) {
    std::complex<double> mu = 0.0;
    for (auto g : gammas)
      mu += std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(g) *
                                static_cast<double>(k) / static_cast<double>(n));
    best = std::max(best, std::abs(mu) / static_cast<double>(gammas.size()));
  }
  return best;
}

// Hook length oracle for irrep dimensions of S_n: d = n! / ∏ hooks.
inline std::uint64_t hook_length_dimension(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  std::uint64_t hooks = 1;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      int arm = parts[r] - c - 1;
      int leg = 0;
      for (std::size_t rr = r + 1; rr < parts.size(); ++rr) {
        if (parts[rr] > c) ++leg;
      }
      hooks *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  }
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
  return fact / hooks;
}

inline Eigen::MatrixXcd random_density(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::MatrixXcd rho = a * a.adjoint();
  return rho / rho.trace().real();
}

inline Eigen::MatrixXcd random_unitary(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < d; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

inline qcx::GroupElement random_element(const std::vector<qcx::GroupElement>& elements,
                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  return elements[pick(rng)];
}

inline qcx::GeneratorSet random_generator_set(const qcx::GroupSpec& group,
                                              const std::vector<qcx::GroupElement>& elements,
                                              std::size_t size, std::mt19937_64& rng) {
  std::vector<qcx::GroupElement> gens;
  for (std::size_t i = 0; i < size; ++i) gens.push_back(random_element(elements, rng));
  return qcx::make_generator_set(group, std::move(gens));
}

}  // namespace testutil
