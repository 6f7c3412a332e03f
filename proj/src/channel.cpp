#include "qcx/channel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "qcx/cayley_walk.hpp"

namespace qcx {

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

Eigen::MatrixXcd ExpanderChannel::apply(const Eigen::MatrixXcd& rho) const {
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("channel apply: dimension mismatch");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& k : kraus) out.noalias() += k * rho * k.adjoint();
  return out / static_cast<double>(kraus.size());
}

Eigen::MatrixXcd ExpanderChannel::apply_adjoint(const Eigen::MatrixXcd& x) const {
  if (x.rows() != dim || x.cols() != dim)
    throw std::invalid_argument("channel apply_adjoint: dimension mismatch");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& k : kraus) out.noalias() += k.adjoint() * x * k;
  return out / static_cast<double>(kraus.size());
}

ExpanderChannel build_channel(const GeneratorSet& gens, const IrrepHandle& h) {
  if (gens.group != h.group())
    throw std::invalid_argument("build_channel: generator set and irrep belong to different groups");
  if (h.is_trivial())
    throw std::invalid_argument("build_channel: the trivial irrep yields no expander; choose a "
                                "nontrivial irrep");
  ExpanderChannel ch;
  ch.group = gens.group;
  ch.label = h.label();
  ch.dim = h.dim();
  for (const auto& gamma : gens.elements) {
    ch.kraus.push_back(h.matrix(gamma));
    ch.generator_strings.push_back(format_element(gamma));
  }
  return ch;
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, Eigen::Index d) {
  if (v.size() != d * d) throw std::invalid_argument("unvectorize: size mismatch");
  return Eigen::Map<const Eigen::MatrixXcd>(v.data(), d, d);
}

Eigen::VectorXcd maximally_mixed_vec(Eigen::Index d) {
  return vectorize(Eigen::MatrixXcd::Identity(d, d) / std::sqrt(static_cast<double>(d)));
}

Eigen::MatrixXcd superoperator(const ExpanderChannel& ch, Eigen::Index dim_cap) {
  if (ch.dim > dim_cap)
    throw std::runtime_error("superoperator: dimension " + std::to_string(ch.dim) +
                             " exceeds dense cap " + std::to_string(dim_cap) +
                             "; use the iterative path");
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(ch.dim * ch.dim, ch.dim * ch.dim);
  for (const auto& k : ch.kraus) e += kron(k.conjugate(), k);
  return e / static_cast<double>(ch.kraus.size());
}

double quantum_lambda2_dense(const ExpanderChannel& ch, Eigen::Index dim_cap) {
  return dense_lambda2(superoperator(ch, dim_cap), maximally_mixed_vec(ch.dim));
}

LinearMap deflated_channel_map(const ExpanderChannel& ch) {
  const Eigen::Index d = ch.dim;
  LinearMap map;
  map.dim = d * d;
  map.forward = [&ch, d](const Eigen::VectorXcd& v) {
    return vectorize(ch.apply(unvectorize(v, d)));
  };
  map.adjoint = [&ch, d](const Eigen::VectorXcd& v) {
    return vectorize(ch.apply_adjoint(unvectorize(v, d)));
  };
  return deflate(std::move(map), maximally_mixed_vec(d));
}

NormEstimate quantum_lambda2_iterative(const ExpanderChannel& ch, const PowerIterOptions& opts) {
  return operator_norm(deflated_channel_map(ch), opts);
}

std::vector<double> irrep_average_norms(const std::vector<IrrepHandle>& irreps,
                                        const GeneratorSet& gens) {
  std::vector<double> norms;
  norms.reserve(irreps.size());
  for (const auto& h : irreps) {
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(h.dim(), h.dim());
    for (const auto& gamma : gens.elements) avg += h.matrix(gamma);
    avg /= static_cast<double>(gens.elements.size());
    norms.push_back(dense_operator_norm(avg));
  }
  return norms;
}

double irrep_max_crosscheck(const GroupSpec& group, const GeneratorSet& gens, std::uint64_t cap) {
  auto irreps = list_irreps(group, cap);
  auto norms = irrep_average_norms(irreps, gens);
  double best = 0.0;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (!irreps[i].is_trivial()) best = std::max(best, norms[i]);
  }
  return best;
}

double quantum_irrep_max(const GroupSpec& group, const GeneratorSet& gens, const IrrepHandle& h,
                         std::uint64_t cap) {
  auto irreps = list_irreps(group, cap);
  auto norms = irrep_average_norms(irreps, gens);
  auto mult = tensor_multiplicities(h, cap);
  double best = 0.0;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (irreps[i].is_trivial()) continue;
    if (mult.of(irreps[i].label()) > 0) best = std::max(best, norms[i]);
  }
  return best;
}

SpectralReport verify_gap_inequality(const GroupSpec& group, const GeneratorSet& gens,
                                     const IrrepHandle& h, const GapOptions& opts) {
  SpectralReport report;
  report.tolerance = opts.tolerance;

  auto channel = build_channel(gens, h);
  bool use_dense = opts.method != GapOptions::Method::Iterative &&
                   channel.dim <= opts.dense_cap;
  if (opts.method == GapOptions::Method::Dense && channel.dim > opts.dense_cap)
    throw std::runtime_error("dense method requested but irrep dimension exceeds the cap");
  if (use_dense) {
    report.quantum_lambda2 = quantum_lambda2_dense(channel, opts.dense_cap);
    report.method = "dense";
  } else {
    NormEstimate est = quantum_lambda2_iterative(channel, opts.power);
    report.quantum_lambda2 = est.value;
    report.method = "iterative";
    report.iterations = est.iterations;
    report.converged = est.converged;
  }
  if (channel.dim == 1)
    report.notes.push_back("irrep dimension 1: deflated space is empty, quantum lambda2 is 0");

  auto walk = build_walk(group, gens, opts.enum_cap);
  auto classical = classical_lambda2_report(walk, opts.walk_dense_cap, opts.power);
  report.classical_lambda2 = classical.value;
  if (classical.method == "iterative") {
    report.iterations += classical.iterations;
    report.converged = report.converged && classical.converged;
  }
  report.inequality_holds = report.quantum_lambda2 <= classical.value + opts.tolerance;
  return report;
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index d) {
  return DensityMatrix{Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d)};
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  Eigen::VectorXcd unit = psi / psi.norm();
  return DensityMatrix{unit * unit.adjoint()};
}

DensityMatrix DensityMatrix::random(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::MatrixXcd rho = a * a.adjoint();
  return DensityMatrix{rho / rho.trace().real()};
}

double DensityMatrix::validation_residual() const {
  double hermiticity = (rho - rho.adjoint()).norm();
  double trace_err = std::abs(rho.trace() - std::complex<double>(1.0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double negativity = std::max(0.0, -es.eigenvalues().minCoeff());
  return std::max({hermiticity, trace_err, negativity});
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double p = es.eigenvalues()(i);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

}  // namespace qcx
