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

// Symmetric-subspace projectors and exact Haar moments of tr(|i><i| U X U^dagger).

#ifndef AVDIST_MOMENTS_HPP
#define AVDIST_MOMENTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <vector>

#include "avdist/ensembles.hpp"
#include "avdist/linalg.hpp"
#include "avdist/parallel.hpp"

namespace avdist {

/// Dense projectors are d^k x d^k; beyond this the memory cost is prohibitive.
inline constexpr Eigen::Index kMaxSymDimension = 4096;

inline constexpr double kFourthMomentConstant = 10.1 / 6.0;
inline constexpr double kMixedMomentConstant = 13.0 / 6.0;

struct SymProjector {
  int k = 0;
  Eigen::Index d = 0;
  ComplexMatrix mat;
};

inline std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline void require_sym_limits(Eigen::Index d, int k) {
  if (k < 1 || k > kMaxPermutationOrder)
    throw Error(Errc::KTooLarge, "order " + std::to_string(k) + " outside 1.." +
                                     std::to_string(kMaxPermutationOrder));
  if (d < 1) throw Error(Errc::InvalidArgument, "dimension must be positive");
  const double n = std::pow(static_cast<double>(d), k);
  if (n > static_cast<double>(kMaxSymDimension))
    throw Error(Errc::DimensionTooLarge, "d^k = " + detail::num(n) + " exceeds " +
                                             std::to_string(kMaxSymDimension));
}

inline SymProjector sym_projector(Eigen::Index d, int k) {
  require_sym_limits(d, k);
  const Eigen::Index n = int_pow(d, k);
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  const auto perms = all_permutations(k);
  for (const auto& perm : perms)
    for (Eigen::Index idx = 0; idx < n; ++idx) p(permute_index(idx, d, perm), idx) += 1.0;
  p /= static_cast<double>(perms.size());
  return {k, d, std::move(p)};
}

/// tr(A B) without forming the product.
inline Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.array() * b.transpose().array()).sum();
}

/// tr(P_sym^(k) X_1 ⊗ ... ⊗ X_k).
inline double sym_trace(const SymProjector& p, const std::vector<ComplexMatrix>& factors) {
  ComplexMatrix x = ComplexMatrix::Identity(1, 1);
  for (const auto& f : factors) x = tensor(x, f);
  return trace_of_product(p.mat, x).real();
}

/// E_U tr(|i><i| U x U^dagger)^2 for Haar U.
inline double second_moment_exact(const ComplexMatrix& x, Eigen::Index d) {
  const ComplexMatrix h = hermitian_part(x);
  if (h.rows() != d) throw Error(Errc::DimensionMismatch, "operator is not d x d");
  const double tr = h.trace().real();
  const double tr2 = trace_of_product(h, h).real();
  return (tr2 + tr * tr) / static_cast<double>(d * (d + 1));
}

/// E_U tr(|i><i| U x U^dagger)^k = tr(P_sym^(k) x^{⊗k}) / binom(d+k-1, k).
inline double kth_moment_exact(const ComplexMatrix& x, Eigen::Index d, int k) {
  const ComplexMatrix h = hermitian_part(x);
  if (h.rows() != d) throw Error(Errc::DimensionMismatch, "operator is not d x d");
  const SymProjector p = sym_projector(d, k);
  const std::vector<ComplexMatrix> factors(static_cast<std::size_t>(k), h);
  return sym_trace(p, factors) / binomial(static_cast<int>(d + k - 1), k);
}

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// y absent: tr(x^{⊗4} P4) <= (10.1/6) tr(x^{⊗2} P2)^2.
/// y present: tr(x^{⊗2} ⊗ y^{⊗2} P4) <= (13/6) tr(x^{⊗2} P2) tr(y^{⊗2} P2).
inline InequalityCheck projector_inequality_check(const ComplexMatrix& x,
                                                  const std::optional<ComplexMatrix>& y = std::nullopt) {
  const ComplexMatrix hx = hermitian_part(x);
  const Eigen::Index d = hx.rows();
  ComplexMatrix hy = hx;
  if (y) {
    hy = hermitian_part(*y);
    if (hy.rows() != d) throw Error(Errc::DimensionMismatch, "x and y differ in dimension");
  }
  const SymProjector p2 = sym_projector(d, 2);
  const SymProjector p4 = sym_projector(d, 4);
  InequalityCheck r;
  const double tx = sym_trace(p2, {hx, hx});
  if (y) {
    r.lhs = sym_trace(p4, {hx, hx, hy, hy});
    r.rhs = kMixedMomentConstant * tx * sym_trace(p2, {hy, hy});
  } else {
    r.lhs = sym_trace(p4, {hx, hx, hx, hx});
    r.rhs = kFourthMomentConstant * tx * tx;
  }
  r.holds = r.lhs <= r.rhs + 1e-10;
  return r;
}

/// Haar value of E|tr(U^dagger V)|^{2k}: the number of permutations of k
/// elements with no increasing subsequence longer than d.
inline double haar_frame_potential(Eigen::Index d, int k) {
  if (k < 0 || k > 10) throw Error(Errc::KTooLarge, "order " + std::to_string(k) + " outside 0..10");
  if (k == 0) return 1.0;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  double count = 0.0;
  do {
    std::vector<int> tails;
    for (int v : p) {
      auto it = std::lower_bound(tails.begin(), tails.end(), v);
      if (it == tails.end()) tails.push_back(v);
      else *it = v;
    }
    if (static_cast<Eigen::Index>(tails.size()) <= d) count += 1.0;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

struct FramePotentialReport {
  EstimateReport estimate;
  double haar_value = 0.0;
};

/// Monte Carlo E|tr(U^dagger V)|^{2k} over independent pairs; sample i draws
/// U then V from stream i.
inline FramePotentialReport frame_potential(const UnitaryEnsemble& ens, int k, std::size_t samples,
                                            std::uint64_t seed, unsigned workers = 1) {
  if (k < 1 || k > kMaxPermutationOrder)
    throw Error(Errc::KTooLarge, "order " + std::to_string(k) + " outside 1.." +
                                     std::to_string(kMaxPermutationOrder));
  const auto values = parallel_map(samples, workers, [&](std::size_t i) {
    Stream s({seed, i});
    const ComplexMatrix u = ens.sample(s);
    const ComplexMatrix v = ens.sample(s);
    return std::pow(std::norm(trace_of_product(u.adjoint(), v)), k);
  });
  return {summarize(values, seed), haar_frame_potential(ens.dim(), k)};
}

}  // namespace avdist

#endif  // AVDIST_MOMENTS_HPP
