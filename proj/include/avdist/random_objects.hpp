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

// Random test objects for property sweeps.

#ifndef AVDIST_RANDOM_OBJECTS_HPP
#define AVDIST_RANDOM_OBJECTS_HPP

#include <cmath>
#include <vector>

#include "avdist/ensembles.hpp"
#include "avdist/quantum.hpp"

namespace avdist {

inline ComplexMatrix random_hermitian(Eigen::Index d, Stream& s) {
  const ComplexMatrix g = ginibre(d, d, s);
  return (g + g.adjoint()) * 0.5;
}

inline ComplexVector random_pure_vector(Eigen::Index d, Stream& s) {
  ComplexVector v = ginibre(d, 1, s).col(0);
  return v / v.norm();
}

/// Ginibre-induced mixed state of rank min(d, rank); rank <= 0 means full rank.
inline DensityMatrix random_state(Eigen::Index d, Stream& s, Eigen::Index rank = 0) {
  const Eigen::Index r = rank > 0 ? rank : d;
  const ComplexMatrix g = ginibre(d, r, s);
  const ComplexMatrix m = g * g.adjoint();
  return DensityMatrix::from_matrix(m / m.trace().real());
}

inline DensityMatrix random_pure_state(Eigen::Index d, Stream& s) {
  return DensityMatrix::pure(random_pure_vector(d, s));
}

/// Effects S^{-1/2} G_i G_i^dagger S^{-1/2} with S the sum of the G_i G_i^dagger.
inline Povm random_povm(Eigen::Index d, std::size_t n, Stream& s) {
  std::vector<ComplexMatrix> a;
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexMatrix g = ginibre(d, d, s);
    a.push_back(g * g.adjoint());
    sum += a.back();
  }
  const ComplexMatrix w = psd_inverse_sqrt(sum);
  for (auto& x : a) x = w * x * w;
  return Povm::from_effects(std::move(a));
}

inline std::vector<ComplexMatrix> random_kraus(Eigen::Index d, Eigen::Index rank, Stream& s) {
  const ComplexMatrix u = sample_haar(d * rank, s);
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index a = 0; a < rank; ++a) kraus.push_back(u.block(a * d, 0, d, d));
  return kraus;
}

/// CPTP map from a Haar-random Stinespring isometry; rank <= 0 means rank d.
inline ChannelChoi random_channel(Eigen::Index d, Stream& s, Eigen::Index rank = 0) {
  return channel_from_kraus(random_kraus(d, rank > 0 ? rank : d, s));
}

/// Convex combination of m Haar unitary conjugations with flat Dirichlet weights.
inline ChannelChoi random_mixed_unitary(Eigen::Index d, int m, Stream& s) {
  std::vector<double> w(static_cast<std::size_t>(m));
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(s.uniform());
    total += x;
  }
  std::vector<ComplexMatrix> kraus;
  for (int i = 0; i < m; ++i) kraus.push_back(std::sqrt(w[static_cast<std::size_t>(i)] / total) * sample_haar(d, s));
  return channel_from_kraus(kraus);
}

inline std::vector<double> random_probability_vector(std::size_t n, Stream& s) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(s.uniform());
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

inline StochasticMap random_stochastic(Eigen::Index n, Stream& s) {
  RealMatrix t(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto col = random_probability_vector(static_cast<std::size_t>(n), s);
    double acc = 0.0;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      t(i, j) = col[static_cast<std::size_t>(i)];
      acc += t(i, j);
    }
    t(n - 1, j) = std::max(0.0, 1.0 - acc);
  }
  return StochasticMap::from_matrix(t);
}

}  // namespace avdist

#endif  // AVDIST_RANDOM_OBJECTS_HPP
