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

// Average-case distances between states, POVMs and channels, the classical
// average distance, and distances to the uniform object.

#ifndef AVDIST_DISTANCES_HPP
#define AVDIST_DISTANCES_HPP

#include <cmath>
#include <string>

#include "avdist/quantum.hpp"

namespace avdist {

/// Total-variation distance (1/2) Σ |p_i - q_i|.
inline double tv(const RealVector& p, const RealVector& q) {
  if (p.size() != q.size())
    throw Error(Errc::NotADistribution, "length " + std::to_string(p.size()) + " vs " +
                                            std::to_string(q.size()));
  for (const RealVector* v : {&p, &q}) {
    if (v->size() == 0) throw Error(Errc::NotADistribution, "empty probability vector");
    if (v->minCoeff() < -1e-12 || !v->allFinite())
      throw Error(Errc::NotADistribution, "entry " + detail::num(v->minCoeff()) + " is negative");
    if (std::abs(v->sum() - 1.0) > kTraceTol)
      throw Error(Errc::NotADistribution, "entries sum to " + detail::num(v->sum()));
  }
  return 0.5 * (p - q).cwiseAbs().sum();
}

namespace detail {

inline void require_same_dim(Eigen::Index a, Eigen::Index b) {
  if (a != b)
    throw Error(Errc::DimensionMismatch, "dimensions " + std::to_string(a) + " and " + std::to_string(b));
}

inline void require_same_shape(const Povm& m, const Povm& n) {
  require_same_dim(m.dim(), n.dim());
  if (m.n_outcomes() != n.n_outcomes())
    throw Error(Errc::OutcomeCountMismatch, std::to_string(m.n_outcomes()) + " vs " +
                                                std::to_string(n.n_outcomes()) + " outcomes");
}

}  // namespace detail

/// (1/2) ||rho - sigma||_HS.
inline double d_av_states(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho.dim(), sigma.dim());
  return 0.5 * hs_norm(rho.mat() - sigma.mat());
}

/// (1/2d) Σ_i sqrt(||M_i - N_i||_HS^2 + tr(M_i - N_i)^2).
inline double d_av_povms(const Povm& m, const Povm& n) {
  detail::require_same_shape(m, n);
  double sum = 0.0;
  for (std::size_t i = 0; i < m.n_outcomes(); ++i) {
    const ComplexMatrix delta = m.effect(i) - n.effect(i);
    const double tr = delta.trace().real();
    sum += std::sqrt(delta.squaredNorm() + tr * tr);
  }
  return sum / (2.0 * static_cast<double>(m.dim()));
}

/// (1/2) sqrt(||J_Λ - J_Γ||_HS^2 + ||(Λ - Γ)(I/d)||_HS^2).
inline double d_av_channels(const ChannelChoi& lam, const ChannelChoi& gam) {
  detail::require_same_dim(lam.dim(), gam.dim());
  const Eigen::Index d = lam.dim();
  const ComplexMatrix j = lam.choi() - gam.choi();
  const ComplexMatrix tau = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  const ComplexMatrix out = apply_map(j, d, tau);
  return 0.5 * std::sqrt(j.squaredNorm() + out.squaredNorm());
}

/// Mean TV distance of the outcome statistics over the d computational basis states.
inline double d_av_classical(const Povm& m, const Povm& n) {
  detail::require_same_shape(m, n);
  const Eigen::Index d = m.dim();
  double sum = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    const DensityMatrix basis = DensityMatrix::basis(d, k);
    sum += tv(born_distribution(basis, m), born_distribution(basis, n));
  }
  return sum / static_cast<double>(d);
}

/// Distance to I/d: (1/2) sqrt(tr rho^2 - 1/d).
inline double uniform_distance(const DensityMatrix& rho) {
  const double d = static_cast<double>(rho.dim());
  const double purity = rho.mat().squaredNorm();
  return 0.5 * std::sqrt(std::max(0.0, purity - 1.0 / d));
}

/// Distance to the trivial POVM with effects I/d; requires n = d.
/// Each term is tr M_i^2 + (tr M_i - 1)^2 - (2 tr M_i - 1)/d, which reduces to
/// tr M_i^2 + (tr M_i - 1)^2 - 1/d whenever tr M_i = 1.
inline double uniform_distance(const Povm& m) {
  const Eigen::Index d = m.dim();
  if (m.n_outcomes() != static_cast<std::size_t>(d))
    throw Error(Errc::OutcomeCountMismatch, "uniform distance is defined for d-outcome POVMs, got " +
                                                std::to_string(m.n_outcomes()) + " outcomes for d = " +
                                                std::to_string(d));
  const double dd = static_cast<double>(d);
  double sum = 0.0;
  for (const auto& e : m.effects()) {
    const double tr = e.trace().real();
    const double term = e.squaredNorm() + (tr - 1.0) * (tr - 1.0) - (2.0 * tr - 1.0) / dd;
    sum += std::sqrt(std::max(0.0, term));
  }
  return sum / (2.0 * dd);
}

/// Distance to the maximally depolarizing channel:
/// (1/2) sqrt(tr J^2 + tr Λ(I/d)^2 - (1/d)(1 + 1/d)).
inline double uniform_distance(const ChannelChoi& ch) {
  const Eigen::Index d = ch.dim();
  const double dd = static_cast<double>(d);
  const ComplexMatrix out = apply_map(ch, ComplexMatrix::Identity(d, d) / dd);
  const double term = ch.choi().squaredNorm() + out.squaredNorm() - (1.0 / dd) * (1.0 + 1.0 / dd);
  return 0.5 * std::sqrt(std::max(0.0, term));
}

}  // namespace avdist

#endif  // AVDIST_DISTANCES_HPP
