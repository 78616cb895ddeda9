#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <stdexcept>

namespace qconcav {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Scalar function applied to an eigenvalue outside its domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Eigenvalues with |lambda| <= zero_threshold are treated as exactly zero;
/// matrix functions act only on the surviving support.
struct SupportPolicy {
  double zero_threshold = 1e-12;
};

// Spectra of intended-PSD matrices: eigenvalues in [kPsdFloor, 0) are
// roundoff and clamp to zero; anything below is genuine negativity.
inline constexpr double kPsdFloor = -1e-10;

/// Dense complex square matrix with enforced Hermitian symmetry.
///
/// Construction accepts a matrix whose deviation from its conjugate
/// transpose stays within 1e-12 (relative to the largest entry magnitude,
/// absolute for unit-scale matrices) and stores the exact Hermitian
/// average (m + m^dagger) / 2.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m);

  static HermitianMatrix identity(int dim);
  static HermitianMatrix zero(int dim);
  /// Real diagonal matrix.
  static HermitianMatrix diagonal(const RealVector& d);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& mat() const { return mat_; }
  Complex operator()(int i, int j) const { return mat_(i, j); }
  double trace() const { return mat_.trace().real(); }

 private:
  ComplexMatrix mat_;
};

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator*(double s, const HermitianMatrix& a);

struct EigenDecomposition {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // unitary; column k pairs with eigenvalues[k]
};

/// Cyclic Jacobi eigendecomposition for complex Hermitian matrices.
/// Sweeps until the off-diagonal Frobenius norm drops below off_diag_tol.
/// Deterministic: identical input yields identical output.
EigenDecomposition eig_hermitian(const HermitianMatrix& h,
                                 double off_diag_tol = 1e-14,
                                 int max_sweeps = 100);

/// V f(Lambda) V^dagger with f applied on the support only; eigenvalues
/// zeroed by the policy stay zero. Throws DomainError if f is undefined
/// (non-finite) at a retained eigenvalue.
HermitianMatrix matrix_function(const HermitianMatrix& h,
                                const std::function<double(double)>& f,
                                SupportPolicy policy = {});

/// matrix_function for intended-PSD input: eigenvalues in [kPsdFloor, 0)
/// clamp to zero first, so retained eigenvalues are strictly positive.
/// Throws DomainError on eigenvalues below kPsdFloor.
HermitianMatrix matrix_function_psd(const HermitianMatrix& h,
                                    const std::function<double(double)>& f,
                                    SupportPolicy policy = {});

/// Sum of absolute eigenvalues.
double trace_norm(const HermitianMatrix& h);

/// Kronecker product; dim = dimA * dimB, A indexing the outer (slow) slot.
HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b);

/// Throws DomainError if any eigenvalue lies below kPsdFloor * scale.
void require_psd(const RealVector& eigenvalues, double scale = 1.0);

/// Projector onto the eigenvectors of h with eigenvalue above the support
/// threshold.
HermitianMatrix support_projector(const HermitianMatrix& h, SupportPolicy policy = {});

/// support(inner) subseteq support(outer), detected as
/// || (I - P) inner (I - P) ||_1 <= tol with P the support projector of outer.
bool support_contains(const HermitianMatrix& outer, const HermitianMatrix& inner,
                      SupportPolicy policy = {}, double tol = 1e-10);

}  // namespace qconcav
