#include "qconcav/entropies.hpp"

#include <cmath>

namespace qconcav {

RenyiParam::RenyiParam(double a, Flavor flavor) : a_(a), flavor_(flavor) {
  if (!(a > 0.0))
    throw std::invalid_argument("RenyiParam: a must be positive");
  if (std::abs(a - 1.0) <= 1e-9)
    throw std::invalid_argument("RenyiParam: a too close to 1; use relative_entropy");
  if (flavor == Flavor::sandwiched && a < 0.5)
    throw std::invalid_argument("RenyiParam: sandwiched flavor requires a >= 1/2");
}

double von_neumann(const DensityMatrix& rho, SupportPolicy policy) {
  const EigenDecomposition ed = eig_hermitian(rho.hermitian());
  require_psd(ed.eigenvalues);
  double s = 0.0;
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
    const double lam = ed.eigenvalues(k);
    if (lam > policy.zero_threshold) s -= lam * std::log(lam);
  }
  if (s < 0.0 && s > -1e-9) s = 0.0;  // roundoff from eigenvalues a hair above 1
  return s;
}

ExtendedReal relative_entropy(const DensityMatrix& rho, const DensityMatrix& gamma,
                              SupportPolicy policy) {
  if (rho.dim() != gamma.dim())
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  if (!support_contains(gamma.hermitian(), rho.hermitian(), policy))
    return ExtendedReal::infinity();

  const EigenDecomposition ed = eig_hermitian(rho.hermitian());
  require_psd(ed.eigenvalues);
  double tr_rho_log_rho = 0.0;
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
    const double lam = ed.eigenvalues(k);
    if (lam > policy.zero_threshold) tr_rho_log_rho += lam * std::log(lam);
  }
  const HermitianMatrix log_gamma =
      matrix_function_psd(gamma.hermitian(), [](double u) { return std::log(u); }, policy);
  const double cross = (rho.mat() * log_gamma.mat()).trace().real();
  return ExtendedReal(tr_rho_log_rho - cross);
}

ExtendedReal renyi(const RenyiParam& param, const DensityMatrix& rho,
                   const DensityMatrix& gamma, SupportPolicy policy) {
  if (param.flavor() != RenyiParam::Flavor::standard)
    throw std::invalid_argument("renyi: expected a standard-flavor parameter");
  if (rho.dim() != gamma.dim())
    throw std::invalid_argument("renyi: dimension mismatch");
  const double a = param.a();
  if (a > 1.0 && !support_contains(gamma.hermitian(), rho.hermitian(), policy))
    return ExtendedReal::infinity();

  const HermitianMatrix rho_a =
      matrix_function_psd(rho.hermitian(), [a](double u) { return std::pow(u, a); }, policy);
  const HermitianMatrix gamma_1ma = matrix_function_psd(
      gamma.hermitian(), [a](double u) { return std::pow(u, 1.0 - a); }, policy);
  const double t = (rho_a.mat() * gamma_1ma.mat()).trace().real();
  if (t <= 0.0) {
    if (a < 1.0) return ExtendedReal::infinity();  // orthogonal supports
    throw std::runtime_error("renyi: nonpositive trace despite support condition");
  }
  return ExtendedReal(std::log(t) / (a - 1.0));
}

ExtendedReal sandwiched(const RenyiParam& param, const DensityMatrix& rho,
                        const DensityMatrix& gamma, SupportPolicy policy) {
  if (param.flavor() != RenyiParam::Flavor::sandwiched)
    throw std::invalid_argument("sandwiched: expected a sandwiched-flavor parameter");
  if (rho.dim() != gamma.dim())
    throw std::invalid_argument("sandwiched: dimension mismatch");
  const double a = param.a();
  if (a > 1.0 && !support_contains(gamma.hermitian(), rho.hermitian(), policy))
    return ExtendedReal::infinity();

  const double e = (1.0 - a) / (2.0 * a);
  const HermitianMatrix half = matrix_function_psd(
      gamma.hermitian(), [e](double u) { return std::pow(u, e); }, policy);
  const HermitianMatrix inner{ComplexMatrix(half.mat() * rho.mat() * half.mat())};

  const EigenDecomposition ed = eig_hermitian(inner);
  const double lam_max = ed.eigenvalues.size() > 0 ? ed.eigenvalues.maxCoeff() : 0.0;
  const double scale = std::max(1.0, lam_max);
  require_psd(ed.eigenvalues, scale);
  // Threshold relative to the spectrum scale: the inner matrix is not
  // unit-normalized when negative powers of gamma enter.
  const double thr = policy.zero_threshold * scale;
  double t = 0.0;
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
    const double lam = ed.eigenvalues(k);
    if (lam > thr) t += std::pow(lam, a);
  }
  if (t <= 0.0) {
    if (a < 1.0) return ExtendedReal::infinity();
    throw std::runtime_error("sandwiched: nonpositive trace despite support condition");
  }
  return ExtendedReal(std::log(t) / (a - 1.0));
}

ExtendedReal max_relative(const DensityMatrix& rho, const DensityMatrix& gamma,
                          SupportPolicy policy) {
  if (rho.dim() != gamma.dim())
    throw std::invalid_argument("max_relative: dimension mismatch");
  if (!support_contains(gamma.hermitian(), rho.hermitian(), policy))
    return ExtendedReal::infinity();
  const HermitianMatrix inv_sqrt = matrix_function_psd(
      gamma.hermitian(), [](double u) { return 1.0 / std::sqrt(u); }, policy);
  const HermitianMatrix compressed{
      ComplexMatrix(inv_sqrt.mat() * rho.mat() * inv_sqrt.mat())};
  const EigenDecomposition ed = eig_hermitian(compressed);
  const double lam_max = ed.eigenvalues.maxCoeff();
  if (lam_max <= 0.0)
    throw std::runtime_error("max_relative: compressed state has no positive eigenvalue");
  return ExtendedReal(std::log(lam_max));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& gamma) {
  if (rho.dim() != gamma.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");
  const SupportPolicy policy{};
  const HermitianMatrix root =
      matrix_function_psd(rho.hermitian(), [](double u) { return std::sqrt(u); }, policy);
  const HermitianMatrix inner{ComplexMatrix(root.mat() * gamma.mat() * root.mat())};
  const EigenDecomposition ed = eig_hermitian(inner);
  require_psd(ed.eigenvalues);
  double f = 0.0;
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
    const double lam = ed.eigenvalues(k);
    if (lam > policy.zero_threshold) f += std::sqrt(lam);
  }
  return std::min(1.0, std::max(0.0, f));
}

double bures_sq(const DensityMatrix& rho, const DensityMatrix& gamma) {
  return 2.0 * (1.0 - fidelity(rho, gamma));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& gamma) {
  if (rho.dim() != gamma.dim())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  return trace_norm(rho.hermitian() - gamma.hermitian());
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw DomainError("binary_entropy: argument outside [0, 1]");
  double s = 0.0;
  if (x > 0.0) s -= x * std::log(x);
  if (x < 1.0) s -= (1.0 - x) * std::log(1.0 - x);
  return s;
}

}  // namespace qconcav
