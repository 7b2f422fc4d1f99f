// Copyright 2026 The avdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex matrix primitives.
//
// Tensor index convention (used everywhere in the library): for a ⊗ b with
// b of dimension d_B, the composite basis index is i_A * d_B + i_B, so the
// first factor is the most significant digit.

#ifndef AVDIST_LINALG_HPP
#define AVDIST_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "avdist/error.hpp"

namespace avdist {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kHermitianTol = 1e-10;

namespace detail {

inline std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace detail

inline bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

inline void require_finite(const ComplexMatrix& m) {
  if (!all_finite(m)) throw Error(Errc::NonFinite, "matrix contains NaN or Inf");
}

inline void require_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error(Errc::NonSquare, "expected a non-empty square matrix, got " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

/// Largest entrywise |m - m^dagger|.
inline double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Checks the input is a finite square Hermitian matrix (within
/// kHermitianTol) and returns its symmetrized copy (m + m^dagger) / 2.
inline ComplexMatrix hermitian_part(const ComplexMatrix& m, double tol = kHermitianTol) {
  require_square(m);
  require_finite(m);
  const double defect = hermiticity_defect(m);
  if (defect > tol)
    throw Error(Errc::NonHermitian, "max |m - m^dagger| = " + detail::num(defect) +
                                        " exceeds tolerance " + detail::num(tol));
  return (m + m.adjoint()) * 0.5;
}

inline bool is_unitary(const ComplexMatrix& u, double tol = 1e-10) {
  if (u.rows() != u.cols()) return false;
  const auto n = u.rows();
  return (u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm() <= tol;
}

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are eigenvectors
};

/// Spectral decomposition of a Hermitian matrix. Eigenvalues ascend.
inline EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  const ComplexMatrix h = hermitian_part(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Eigenvalues only; same checks as hermitian_eig.
inline RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  const ComplexMatrix h = hermitian_part(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

struct SchattenNorms {
  double trace_norm = 0.0;
  double hs_norm = 0.0;
  double op_norm = 0.0;
};

inline SchattenNorms schatten_norms(const ComplexMatrix& m) {
  const RealVector lambda = hermitian_eigenvalues(m);
  SchattenNorms out;
  out.trace_norm = lambda.cwiseAbs().sum();
  out.hs_norm = std::sqrt(lambda.squaredNorm());
  out.op_norm = lambda.cwiseAbs().maxCoeff();
  return out;
}

inline double trace_norm(const ComplexMatrix& m) { return schatten_norms(m).trace_norm; }

/// Hilbert-Schmidt (Frobenius) norm; defined for any matrix and exactly
/// symmetric under m -> -m.
inline double hs_norm(const ComplexMatrix& m) { return m.norm(); }

inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline ComplexMatrix tensor_power(const ComplexMatrix& a, int k) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int i = 0; i < k; ++i) out = tensor(out, a);
  return out;
}

enum class Keep { First, Second };

/// Partial trace of a (d_a*d_b)-square matrix; keeps the selected factor.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index d_a, Eigen::Index d_b,
                                   Keep keep) {
  if (d_a <= 0 || d_b <= 0 || m.rows() != d_a * d_b || m.cols() != d_a * d_b)
    throw Error(Errc::DimensionMismatch, "partial trace of a " + std::to_string(m.rows()) + "x" +
                                             std::to_string(m.cols()) + " matrix over dims (" +
                                             std::to_string(d_a) + ", " + std::to_string(d_b) +
                                             ")");
  if (keep == Keep::First) {
    ComplexMatrix out = ComplexMatrix::Zero(d_a, d_a);
    for (Eigen::Index i = 0; i < d_a; ++i)
      for (Eigen::Index j = 0; j < d_a; ++j)
        out(i, j) = m.block(i * d_b, j * d_b, d_b, d_b).trace();
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d_b, d_b);
  for (Eigen::Index i = 0; i < d_a; ++i) out += m.block(i * d_b, i * d_b, d_b, d_b);
  return out;
}

inline constexpr int kMaxPermutationOrder = 4;

inline Eigen::Index int_pow(Eigen::Index base, int exp) {
  Eigen::Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Applies P_pi to a basis index: output slot pi(m) carries input slot m,
/// i.e. P_pi |i_1 ... i_k> = |i_{pi^-1(1)} ... i_{pi^-1(k)}>. Zero-based.
inline Eigen::Index permute_index(Eigen::Index idx, Eigen::Index d, std::span<const int> perm) {
  const int k = static_cast<int>(perm.size());
  int digits[kMaxPermutationOrder] = {0, 0, 0, 0};
  for (int m = k - 1; m >= 0; --m) {
    digits[m] = static_cast<int>(idx % d);
    idx /= d;
  }
  int out_digits[kMaxPermutationOrder] = {0, 0, 0, 0};
  for (int m = 0; m < k; ++m) out_digits[perm[m]] = digits[m];
  Eigen::Index out = 0;
  for (int m = 0; m < k; ++m) out = out * d + out_digits[m];
  return out;
}

inline void require_permutation(std::span<const int> perm) {
  if (perm.size() > static_cast<std::size_t>(kMaxPermutationOrder))
    throw Error(Errc::KTooLarge, "permutation order " + std::to_string(perm.size()) +
                                     " exceeds " + std::to_string(kMaxPermutationOrder));
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i))
      throw Error(Errc::InvalidArgument, "not a permutation of {0..k-1}");
}

/// Permutation operator on (C^d)^{⊗k}, k <= 4. perm is zero-based; the
/// composition law P_pi P_sigma = P_{pi∘sigma} holds.
inline ComplexMatrix permutation_operator(Eigen::Index d, std::span<const int> perm) {
  require_permutation(perm);
  if (d <= 0) throw Error(Errc::InvalidArgument, "dimension must be positive");
  const Eigen::Index n = int_pow(d, static_cast<int>(perm.size()));
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (Eigen::Index idx = 0; idx < n; ++idx) p(permute_index(idx, d, perm), idx) = 1.0;
  return p;
}

/// Positive-semidefinite square root / absolute value via the spectrum.
inline ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const auto eig = hermitian_eig(m);
  const RealVector s = eig.values.cwiseMax(0.0).cwiseSqrt();
  return eig.vectors * s.asDiagonal() * eig.vectors.adjoint();
}

inline ComplexMatrix matrix_abs(const ComplexMatrix& m) {
  const auto eig = hermitian_eig(m);
  return eig.vectors * eig.values.cwiseAbs().asDiagonal() * eig.vectors.adjoint();
}

inline ComplexMatrix psd_inverse_sqrt(const ComplexMatrix& m) {
  const auto eig = hermitian_eig(m);
  RealVector s(eig.values.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (eig.values(i) <= 0.0) throw Error(Errc::NotPositive, "matrix is not positive definite");
    s(i) = 1.0 / std::sqrt(eig.values(i));
  }
  return eig.vectors * s.asDiagonal() * eig.vectors.adjoint();
}

inline ComplexMatrix basis_projector(Eigen::Index d, Eigen::Index i) {
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  p(i, i) = 1.0;
  return p;
}

/// Pauli matrices indexed 0..3 as I, X, Y, Z.
inline ComplexMatrix pauli(int which) {
  ComplexMatrix p(2, 2);
  const Complex i(0.0, 1.0);
  switch (which) {
    case 0: p << 1, 0, 0, 1; break;
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, -i, i, 0; break;
    case 3: p << 1, 0, 0, -1; break;
    default: throw Error(Errc::InvalidArgument, "Pauli index must be 0..3");
  }
  return p;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace avdist

#endif  // AVDIST_LINALG_HPP
