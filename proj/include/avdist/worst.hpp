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

// Worst-case distances: trace, operational and diamond distance, all in the
// total-variation convention (the diamond value is half the cb-norm).

#ifndef AVDIST_WORST_HPP
#define AVDIST_WORST_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "avdist/distances.hpp"
#include "avdist/ensembles.hpp"
#include "avdist/parallel.hpp"

namespace avdist {

inline constexpr std::size_t kMaxOperationalOutcomes = 16;
inline constexpr Eigen::Index kMaxDiamondDimension = 8;

inline double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho.dim(), sigma.dim());
  return 0.5 * trace_norm(rho.mat() - sigma.mat());
}

/// sup_rho TV(p^{rho,M}, p^{rho,N}) = (1/2) max_s lambda_max(Σ s_i (M_i - N_i)).
/// s_1 is pinned to +1; the flipped vector is covered by -lambda_min.
inline double operational_distance(const Povm& m, const Povm& n) {
  detail::require_same_shape(m, n);
  const std::size_t k = m.n_outcomes();
  if (k > kMaxOperationalOutcomes)
    throw Error(Errc::TooManyOutcomes, std::to_string(k) + " outcomes; limit is " +
                                           std::to_string(kMaxOperationalOutcomes));
  std::vector<ComplexMatrix> delta;
  for (std::size_t i = 0; i < k; ++i) delta.push_back(m.effect(i) - n.effect(i));
  double best = 0.0;
  const std::uint64_t patterns = std::uint64_t{1} << (k - 1);
  for (std::uint64_t bits = 0; bits < patterns; ++bits) {
    ComplexMatrix x = delta[0];
    for (std::size_t i = 1; i < k; ++i) {
      if ((bits >> (i - 1)) & 1U) x -= delta[i];
      else x += delta[i];
    }
    const RealVector ev = hermitian_eigenvalues((x + x.adjoint()) * 0.5);
    best = std::max({best, ev(ev.size() - 1), -ev(0)});
  }
  return 0.5 * best;
}

struct DiamondConfig {
  int restarts = 8;
  double tol = 1e-12;
  int max_iterations = 2000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct DiamondSolve {
  double value = 0.0;
  double cb_norm = 0.0;
  ComplexMatrix optimizer_state;
  int iterations = 0;
  bool converged = true;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

namespace detail {

struct AscentResult {
  double norm = 0.0;  // ||(B^dagger ⊗ I) X (B ⊗ I)||_1
  ComplexMatrix b;
  int iterations = 0;
  bool converged = false;
};

inline ComplexMatrix conjugate_first(const ComplexMatrix& x, const ComplexMatrix& b, Eigen::Index d) {
  const ComplexMatrix bi = tensor(b, ComplexMatrix::Identity(d, d));
  return bi.adjoint() * x * bi;
}

/// Alternating maximization of tr(S (B^dagger ⊗ I) X (B ⊗ I)) over
/// ||S||_inf <= 1 and ||B||_F = 1. Each half-step is solved exactly (S is the
/// sign of the current matrix, B the top eigenvector of the induced quadratic
/// form), so the trace norm never decreases.
inline AscentResult diamond_ascent(const ComplexMatrix& x, Eigen::Index d, ComplexMatrix b,
                                   const DiamondConfig& cfg) {
  b /= b.norm();
  AscentResult r;
  EigenDecomposition eig = hermitian_eig(conjugate_first(x, b, d));
  double current = eig.values.cwiseAbs().sum();
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    const RealVector signs = eig.values.unaryExpr([](double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); });
    const ComplexMatrix s = eig.vectors * signs.asDiagonal() * eig.vectors.adjoint();
    // Q[(x,a),(z,a')] = Σ_{o,o'} S[(a',o'),(a,o)] X[(x,o),(z,o')]
    ComplexMatrix q = ComplexMatrix::Zero(d * d, d * d);
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index ap = 0; ap < d; ++ap) {
        const auto sblk = s.block(ap * d, a * d, d, d);  // sblk(o', o)
        for (Eigen::Index xi = 0; xi < d; ++xi)
          for (Eigen::Index z = 0; z < d; ++z) {
            const auto xblk = x.block(xi * d, z * d, d, d);  // xblk(o, o')
            q(xi * d + a, z * d + ap) = (sblk.transpose().array() * xblk.array()).sum();
          }
      }
    const EigenDecomposition qe = hermitian_eig((q + q.adjoint()) * 0.5);
    const ComplexVector top = qe.vectors.col(qe.vectors.cols() - 1);
    ComplexMatrix next(d, d);
    for (Eigen::Index xi = 0; xi < d; ++xi)
      for (Eigen::Index a = 0; a < d; ++a) next(xi, a) = top(xi * d + a);
    EigenDecomposition next_eig = hermitian_eig(conjugate_first(x, next, d));
    const double value = next_eig.values.cwiseAbs().sum();
    r.iterations = it;
    if (value >= current) {
      b = next;
      eig = std::move(next_eig);
      const double gain = value - current;
      current = value;
      if (gain <= cfg.tol) {
        r.converged = true;
        break;
      }
    } else {
      r.converged = true;
      break;
    }
  }
  r.norm = current;
  r.b = b;
  return r;
}

}  // namespace detail

/// Diamond distance in the total-variation convention:
/// (d/2) max_rho ||(sqrt(rho) ⊗ I) J_Δ (sqrt(rho) ⊗ I)||_1, J_Δ = J_Λ - J_Γ.
/// Starts from rho = I/d and cfg.restarts random inputs; keeps the best.
inline DiamondSolve diamond_distance(const ChannelChoi& lam, const ChannelChoi& gam,
                                     const DiamondConfig& cfg = {}) {
  detail::require_same_dim(lam.dim(), gam.dim());
  const Eigen::Index d = lam.dim();
  if (d > kMaxDiamondDimension)
    throw Error(Errc::DimensionTooLarge, "diamond solver supports d <= " +
                                             std::to_string(kMaxDiamondDimension));
  const ComplexMatrix x = lam.choi() - gam.choi();
  const double dd = static_cast<double>(d);
  DiamondSolve out;
  out.optimizer_state = ComplexMatrix::Identity(d, d) / dd;
  if (x.cwiseAbs().maxCoeff() == 0.0) return out;

  out.lower_bound = 0.5 * trace_norm(x);
  out.upper_bound = 0.5 * dd * hermitian_eigenvalues(partial_trace(matrix_abs(x), d, d, Keep::First)).maxCoeff();

  const std::size_t starts = static_cast<std::size_t>(std::max(0, cfg.restarts)) + 1;
  std::vector<detail::AscentResult> results(starts);
  parallel_for(starts, cfg.workers, [&](std::size_t i) {
    ComplexMatrix b0;
    if (i == 0) {
      b0 = ComplexMatrix::Identity(d, d);
    } else {
      Stream s({derive_seed(cfg.seed, 0xd1a3), i});
      b0 = ginibre(d, d, s);
    }
    results[i] = detail::diamond_ascent(x, d, b0, cfg);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < starts; ++i)
    if (results[i].norm > results[best].norm) best = i;
  const auto& r = results[best];
  out.value = 0.5 * dd * r.norm;
  out.cb_norm = 2.0 * out.value;
  out.optimizer_state = r.b * r.b.adjoint();
  out.iterations = r.iterations;
  out.converged = r.converged;
  return out;
}

/// Exact diamond distance between unitary channels: with the eigenvalues of
/// U^dagger V spanning an arc of length theta on the unit circle, the value is
/// sin(theta / 2) for theta < pi and 1 otherwise.
inline double unitary_diamond_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (!is_unitary(u, 1e-9) || !is_unitary(v, 1e-9)) throw Error(Errc::NotUnitary, "inputs must be unitary");
  detail::require_same_dim(u.rows(), v.rows());
  const Eigen::ComplexEigenSolver<ComplexMatrix> es(u.adjoint() * v);
  std::vector<double> phases;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) phases.push_back(std::arg(es.eigenvalues()(i)));
  std::sort(phases.begin(), phases.end());
  double max_gap = 2.0 * std::numbers::pi - (phases.back() - phases.front());
  for (std::size_t i = 1; i < phases.size(); ++i) max_gap = std::max(max_gap, phases[i] - phases[i - 1]);
  const double arc = 2.0 * std::numbers::pi - max_gap;
  if (arc >= std::numbers::pi) return 1.0;
  return std::sin(arc / 2.0);
}

struct SeparationReport {
  double d_av = 0.0;
  double d_worst = 0.0;
  double ratio = 0.0;
  double bound = 0.0;
  double lower_constant = 0.0;
  bool ok = true;
};

namespace detail {

inline SeparationReport finish_separation(double av, double worst, double bound, double c) {
  SeparationReport r{av, worst, 0.0, bound, c, true};
  if (av > 0.0) r.ratio = worst / av;
  else r.ratio = worst > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  r.ok = r.ratio <= bound * (1.0 + 1e-6) && worst >= c * av * (1.0 - 1e-6) - 1e-15;
  return r;
}

}  // namespace detail

/// d_av <= d_tr <= sqrt(d) d_av.
inline SeparationReport separation_report(const DensityMatrix& a, const DensityMatrix& b) {
  return detail::finish_separation(d_av_states(a, b), trace_distance(a, b),
                                   std::sqrt(static_cast<double>(a.dim())), 1.0);
}

/// 0.31 d_av <= d_op <= d d_av.
inline SeparationReport separation_report(const Povm& a, const Povm& b) {
  return detail::finish_separation(d_av_povms(a, b), operational_distance(a, b),
                                   static_cast<double>(a.dim()), 0.31);
}

/// 0.087 d_av <= d_diamond <= d^{3/2} d_av.
inline SeparationReport separation_report(const ChannelChoi& a, const ChannelChoi& b,
                                          const DiamondConfig& cfg = {}) {
  return detail::finish_separation(d_av_channels(a, b), diamond_distance(a, b, cfg).value,
                                   std::pow(static_cast<double>(a.dim()), 1.5), 0.087);
}

}  // namespace avdist

#endif  // AVDIST_WORST_HPP
