#pragma once

#include "qconcav/extended_real.hpp"
#include "qconcav/hermitian.hpp"
#include "qconcav/states.hpp"

namespace qconcav {

/// Renyi order a > 0, a != 1 (|a - 1| > 1e-9 rejected at construction so no
/// formula has to special-case the removable singularity; callers wanting
/// the a -> 1 limit use relative_entropy). The sandwiched flavor further
/// requires a >= 1/2, the range on which its monotonicity in a is known.
class RenyiParam {
 public:
  enum class Flavor { standard, sandwiched };

  static RenyiParam standard(double a) { return RenyiParam(a, Flavor::standard); }
  static RenyiParam sandwiched(double a) { return RenyiParam(a, Flavor::sandwiched); }

  double a() const { return a_; }
  Flavor flavor() const { return flavor_; }

 private:
  RenyiParam(double a, Flavor flavor);

  double a_;
  Flavor flavor_;
};

/// All functionals return nats.

/// -Tr rho log rho, zero eigenvalues contributing zero.
double von_neumann(const DensityMatrix& rho, SupportPolicy policy = {});

/// Tr rho (log rho - log gamma) on the support; +infinity when
/// support(rho) is not contained in support(gamma).
ExtendedReal relative_entropy(const DensityMatrix& rho, const DensityMatrix& gamma,
                              SupportPolicy policy = {});

/// Renyi relative entropy log(Tr rho^a gamma^{1-a}) / (a - 1). Negative
/// powers of gamma act on its support (pseudo-inverse); for a > 1 the value
/// is +infinity when support(rho) escapes support(gamma).
ExtendedReal renyi(const RenyiParam& param, const DensityMatrix& rho,
                   const DensityMatrix& gamma, SupportPolicy policy = {});

/// Sandwiched Renyi divergence
/// log(Tr (gamma^{(1-a)/2a} rho gamma^{(1-a)/2a})^a) / (a - 1).
ExtendedReal sandwiched(const RenyiParam& param, const DensityMatrix& rho,
                        const DensityMatrix& gamma, SupportPolicy policy = {});

/// Max-relative entropy: log of the largest eigenvalue of
/// gamma^{-1/2} rho gamma^{-1/2}; +infinity on support violation.
ExtendedReal max_relative(const DensityMatrix& rho, const DensityMatrix& gamma,
                          SupportPolicy policy = {});

/// Tr (sqrt(rho) gamma sqrt(rho))^{1/2}, clamped into [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& gamma);

/// Squared Bures distance 2 (1 - fidelity).
double bures_sq(const DensityMatrix& rho, const DensityMatrix& gamma);

/// Trace norm of rho - gamma.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& gamma);

/// -x log x - (1-x) log(1-x) with h(0) = h(1) = 0. Throws DomainError
/// outside [0, 1].
double binary_entropy(double x);

}  // namespace qconcav
