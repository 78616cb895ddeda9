#include "qconcav/states.hpp"

#include <cmath>

#include "qconcav/rng.hpp"

namespace qconcav {

DensityMatrix::DensityMatrix(HermitianMatrix m) : mat_(std::move(m)) {
  const EigenDecomposition ed = eig_hermitian(mat_);
  require_psd(ed.eigenvalues);
  if (std::abs(mat_.trace() - 1.0) > 1e-10)
    throw std::invalid_argument("DensityMatrix: trace must be 1");
}

double BlochVector::norm() const {
  return std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
}

MixtureProblem::MixtureProblem(double x_, DensityMatrix rho1_, DensityMatrix rho2_)
    : x(x_), rho1(std::move(rho1_)), rho2(std::move(rho2_)) {
  if (!(x > 0.0 && x < 1.0))
    throw std::invalid_argument("MixtureProblem: x must lie in (0, 1)");
  if (rho1.dim() != rho2.dim())
    throw std::invalid_argument("MixtureProblem: state dimensions differ");
}

DensityMatrix from_bloch(const BlochVector& w) {
  if (w.norm() > 1.0 + 1e-12)
    throw InvalidBloch("from_bloch: Bloch vector lies outside the unit ball");
  ComplexMatrix m(2, 2);
  const Complex i{0.0, 1.0};
  m(0, 0) = 0.5 * (1.0 + w.w[2]);
  m(1, 1) = 0.5 * (1.0 - w.w[2]);
  m(0, 1) = 0.5 * (w.w[0] - i * w.w[1]);
  m(1, 0) = 0.5 * (w.w[0] + i * w.w[1]);
  return DensityMatrix(HermitianMatrix(m));
}

BlochVector to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2)
    throw std::invalid_argument("to_bloch: defined for qubits only");
  const ComplexMatrix& m = rho.mat();
  BlochVector w;
  w.w[0] = 2.0 * m(1, 0).real();
  w.w[1] = 2.0 * m(1, 0).imag();
  w.w[2] = (m(0, 0) - m(1, 1)).real();
  return w;
}

DensityMatrix mix(const MixtureProblem& p) {
  return DensityMatrix(p.x * p.rho1.hermitian() + (1.0 - p.x) * p.rho2.hermitian());
}

DensityMatrix reverse_mix(const MixtureProblem& p) {
  return DensityMatrix(p.x * p.rho2.hermitian() + (1.0 - p.x) * p.rho1.hermitian());
}

BlockEmbedding block_embed(const MixtureProblem& p) {
  const int d = p.rho1.dim();
  ComplexMatrix joint = ComplexMatrix::Zero(2 * d, 2 * d);
  joint.block(0, 0, d, d) = p.x * p.rho1.mat();
  joint.block(d, d, d, d) = (1.0 - p.x) * p.rho2.mat();

  RealVector flag(2);
  flag << p.x, 1.0 - p.x;

  return BlockEmbedding{
      DensityMatrix(HermitianMatrix(joint)),
      mix(p),
      DensityMatrix(HermitianMatrix::diagonal(flag)),
  };
}

HermitianMatrix block_product(const BlockEmbedding& b) {
  return kron(b.marginal_flag.hermitian(), b.marginal_state.hermitian());
}

HermitianMatrix partial_trace_outer(const HermitianMatrix& h, int outer_dim, int inner_dim) {
  if (h.dim() != outer_dim * inner_dim)
    throw std::invalid_argument("partial_trace_outer: dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(inner_dim, inner_dim);
  for (int b = 0; b < outer_dim; ++b)
    out += h.mat().block(b * inner_dim, b * inner_dim, inner_dim, inner_dim);
  return HermitianMatrix(out);
}

HermitianMatrix partial_trace_inner(const HermitianMatrix& h, int outer_dim, int inner_dim) {
  if (h.dim() != outer_dim * inner_dim)
    throw std::invalid_argument("partial_trace_inner: dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(outer_dim, outer_dim);
  for (int b = 0; b < outer_dim; ++b)
    for (int bp = 0; bp < outer_dim; ++bp)
      out(b, bp) = h.mat().block(b * inner_dim, bp * inner_dim, inner_dim, inner_dim).trace();
  return HermitianMatrix(out);
}

DensityMatrix random_density(const SamplerConfig& cfg) {
  if (cfg.dim < 1 || cfg.rank < 1 || cfg.rank > cfg.dim)
    throw std::invalid_argument("random_density: need dim >= 1 and rank in [1, dim]");
  Rng rng(cfg.seed);
  ComplexMatrix g(cfg.dim, cfg.rank);
  for (int i = 0; i < cfg.dim; ++i)
    for (int j = 0; j < cfg.rank; ++j) {
      const double re = rng.normal() * std::numbers::sqrt2 / 2.0;
      const double im = rng.normal() * std::numbers::sqrt2 / 2.0;
      g(i, j) = Complex(re, im);
    }
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(HermitianMatrix(m));
}

BlochVector random_bloch(std::uint64_t seed) {
  Rng rng(seed);
  for (;;) {
    BlochVector w;
    for (double& c : w.w) c = rng.uniform(-1.0, 1.0);
    if (w.norm() <= 1.0) return w;
  }
}

}  // namespace qconcav
