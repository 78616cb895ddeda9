#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "qconcav/hermitian.hpp"

namespace qconcav {

struct InvalidBloch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Positive semidefinite, unit-trace Hermitian matrix. Construction
/// verifies min eigenvalue >= -1e-10 and |trace - 1| <= 1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianMatrix m);

  int dim() const { return mat_.dim(); }
  const HermitianMatrix& hermitian() const { return mat_; }
  const ComplexMatrix& mat() const { return mat_.mat(); }

 private:
  HermitianMatrix mat_;
};

/// Real 3-vector w with ||w|| <= 1 parameterizing a qubit state.
struct BlochVector {
  std::array<double, 3> w{0.0, 0.0, 0.0};
  double norm() const;
};

/// The (x, rho1, rho2) triple behind the averaged state x rho1 + (1-x) rho2.
struct MixtureProblem {
  double x;
  DensityMatrix rho1;
  DensityMatrix rho2;

  MixtureProblem(double x_, DensityMatrix rho1_, DensityMatrix rho2_);
};

struct SamplerConfig {
  int dim;
  int rank;  // in [1, dim]
  std::uint64_t seed;
};

/// (I + w . sigma) / 2. Throws InvalidBloch if ||w|| > 1 + 1e-12.
DensityMatrix from_bloch(const BlochVector& w);

/// Pauli coefficients w_k = Tr(rho sigma_k). Defined for dim 2 only.
BlochVector to_bloch(const DensityMatrix& rho);

/// x rho1 + (1-x) rho2.
DensityMatrix mix(const MixtureProblem& p);
/// x rho2 + (1-x) rho1.
DensityMatrix reverse_mix(const MixtureProblem& p);

/// Block embedding of the mixture: the joint state is the 2x2 block matrix
/// diag(x rho1, (1-x) rho2) with the two-dimensional classical flag as the
/// OUTER tensor slot (index = flag * d + state index). marginal_state is the
/// partial trace over the flag (= mix(p)); marginal_flag is diag(x, 1-x).
struct BlockEmbedding {
  DensityMatrix joint;            // P_AB, dim 2d
  DensityMatrix marginal_state;   // P_A, dim d
  DensityMatrix marginal_flag;    // P_B, dim 2
};

BlockEmbedding block_embed(const MixtureProblem& p);

/// Product operator P_A (x) P_B in the same index convention as the joint
/// block matrix: kron(marginal_flag, marginal_state) = diag(x rho_Av, (1-x) rho_Av).
HermitianMatrix block_product(const BlockEmbedding& b);

/// Partial trace of a (outer_dim * inner_dim)-dimensional operator over the
/// outer factor; result has dimension inner_dim.
HermitianMatrix partial_trace_outer(const HermitianMatrix& h, int outer_dim, int inner_dim);
/// Partial trace over the inner factor; result has dimension outer_dim.
HermitianMatrix partial_trace_inner(const HermitianMatrix& h, int outer_dim, int inner_dim);

/// Hilbert-Schmidt (Ginibre) sampling: G a dim x rank matrix of standard
/// complex normals from the pinned generator, result G G^dagger normalized
/// to unit trace. Deterministic given cfg.seed.
DensityMatrix random_density(const SamplerConfig& cfg);

/// Uniform in the closed unit ball, by rejection from the cube [-1,1]^3.
BlochVector random_bloch(std::uint64_t seed);

}  // namespace qconcav
