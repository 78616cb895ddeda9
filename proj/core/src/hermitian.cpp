#include "qconcav/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace qconcav {

namespace {

double max_abs_entry(const ComplexMatrix& m) {
  double v = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) v = std::max(v, std::abs(m(i, j)));
  return v;
}

double off_diagonal_frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  const Eigen::Index n = m.rows();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("HermitianMatrix: matrix must be square with dim >= 1");
  const double scale = std::max(1.0, max_abs_entry(m));
  const double asym = max_abs_entry(ComplexMatrix(m - m.adjoint()));
  if (asym > 1e-12 * scale)
    throw std::invalid_argument("HermitianMatrix: input is not Hermitian within tolerance");
  mat_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return HermitianMatrix(ComplexMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  return HermitianMatrix(ComplexMatrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& d) {
  ComplexMatrix m = ComplexMatrix::Zero(d.size(), d.size());
  for (Eigen::Index k = 0; k < d.size(); ++k) m(k, k) = d(k);
  return HermitianMatrix(m);
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.mat() + b.mat());
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.mat() - b.mat());
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
  return HermitianMatrix(s * a.mat());
}

EigenDecomposition eig_hermitian(const HermitianMatrix& h, double off_diag_tol,
                                 int max_sweeps) {
  const int n = h.dim();
  ComplexMatrix a = h.mat();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  // Cyclic sweeps over the upper triangle. Each rotation annihilates a(p,q)
  // with the complex Givens pair (c, s e^{i phi}), phi the phase of a(p,q).
  // The off-diagonal norm is non-increasing, so a stall marks the roundoff
  // floor for inputs whose scale puts the absolute threshold out of reach.
  double prev_off = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < max_sweeps && n > 1; ++sweep) {
    const double off = off_diagonal_frobenius(a);
    if (off <= off_diag_tol || off >= prev_off) break;
    prev_off = off;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double m = std::abs(apq);
        if (m < 1e-300) continue;
        const Complex phase = apq / m;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * m);
        const double sign = theta >= 0.0 ? 1.0 : -1.0;
        const double t = -sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + s * std::conj(phase) * akq;
          a(k, q) = -s * phase * akp + c * akq;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = app * c * c + 2.0 * m * c * s + aqq * s * s;
        a(q, q) = app * s * s - 2.0 * m * c * s + aqq * c * c;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp + s * std::conj(phase) * vkq;
          v(k, q) = -s * phase * vkp + c * vkq;
        }
      }
    }
  }
  if (n > 1 && off_diagonal_frobenius(a) > std::max(off_diag_tol, 1e-12 * max_abs_entry(h.mat())))
    throw std::runtime_error("eig_hermitian: Jacobi sweeps did not converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[k], order[k]).real();
    out.eigenvectors.col(k) = v.col(order[k]);
  }
  return out;
}

namespace {

HermitianMatrix rebuild(const EigenDecomposition& ed, const RealVector& fv) {
  ComplexMatrix out = ed.eigenvectors * fv.asDiagonal() * ed.eigenvectors.adjoint();
  return HermitianMatrix(out);
}

}  // namespace

HermitianMatrix matrix_function(const HermitianMatrix& h,
                                const std::function<double(double)>& f,
                                SupportPolicy policy) {
  const EigenDecomposition ed = eig_hermitian(h);
  RealVector fv(ed.eigenvalues.size());
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
    const double lam = ed.eigenvalues(k);
    if (std::abs(lam) <= policy.zero_threshold) {
      fv(k) = 0.0;
    } else {
      const double y = f(lam);
      if (!std::isfinite(y)) throw DomainError("matrix_function: f undefined at eigenvalue");
      fv(k) = y;
    }
  }
  return rebuild(ed, fv);
}

HermitianMatrix matrix_function_psd(const HermitianMatrix& h,
                                    const std::function<double(double)>& f,
                                    SupportPolicy policy) {
  const EigenDecomposition ed = eig_hermitian(h);
  require_psd(ed.eigenvalues);
  RealVector fv(ed.eigenvalues.size());
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
    const double lam = ed.eigenvalues(k);
    if (lam <= policy.zero_threshold) {
      fv(k) = 0.0;
    } else {
      const double y = f(lam);
      if (!std::isfinite(y)) throw DomainError("matrix_function_psd: f undefined at eigenvalue");
      fv(k) = y;
    }
  }
  return rebuild(ed, fv);
}

double trace_norm(const HermitianMatrix& h) {
  const EigenDecomposition ed = eig_hermitian(h);
  double s = 0.0;
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) s += std::abs(ed.eigenvalues(k));
  return s;
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  const int na = a.dim();
  const int nb = b.dim();
  ComplexMatrix out(na * nb, na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b.mat();
  return HermitianMatrix(out);
}

void require_psd(const RealVector& eigenvalues, double scale) {
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k)
    if (eigenvalues(k) < kPsdFloor * scale)
      throw DomainError("require_psd: eigenvalue below PSD roundoff floor");
}

HermitianMatrix support_projector(const HermitianMatrix& h, SupportPolicy policy) {
  const EigenDecomposition ed = eig_hermitian(h);
  ComplexMatrix p = ComplexMatrix::Zero(h.dim(), h.dim());
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k)
    if (ed.eigenvalues(k) > policy.zero_threshold)
      p += ed.eigenvectors.col(k) * ed.eigenvectors.col(k).adjoint();
  return HermitianMatrix(p);
}

bool support_contains(const HermitianMatrix& outer, const HermitianMatrix& inner,
                      SupportPolicy policy, double tol) {
  const HermitianMatrix proj = support_projector(outer, policy);
  const ComplexMatrix q = ComplexMatrix::Identity(outer.dim(), outer.dim()) - proj.mat();
  const HermitianMatrix compressed{ComplexMatrix(q * inner.mat() * q)};
  return trace_norm(compressed) <= tol;
}

}  // namespace qconcav
