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

// Samplable unitary ensembles: Haar, brickwork circuits, weighted lists.

#ifndef AVDIST_ENSEMBLES_HPP
#define AVDIST_ENSEMBLES_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "avdist/linalg.hpp"
#include "avdist/rng.hpp"

namespace avdist {

inline constexpr int kMaxBrickworkQubits = 8;

inline int default_brickwork_depth(int n_qubits) { return 5 * n_qubits + 20; }

/// d x r matrix of i.i.d. standard complex Gaussians (E|g|^2 = 1).
inline ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Stream& s) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = s.normal();
      const double im = s.normal();
      g(i, j) = Complex(re, im) * std::sqrt(0.5);
    }
  return g;
}

inline ComplexMatrix sample_haar(Eigen::Index d, Stream& s) {
  if (d < 1) throw Error(Errc::InvalidArgument, "dimension must be >= 1");
  const ComplexMatrix g = ginibre(d, d, s);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mod = std::abs(rjj);
    if (mod > 0.0) q.col(j) *= rjj / mod;
  }
  return q;
}

inline ComplexMatrix sample_haar(Eigen::Index d, SeedSpec seed) {
  Stream s(seed);
  return sample_haar(d, s);
}

/// One brickwork layer. Qubit 0 is the most significant tensor factor; even
/// layers pair (0,1),(2,3),..., odd layers pair (1,2),(3,4),...; unpaired
/// boundary qubits get the identity.
inline ComplexMatrix brickwork_layer(int n_qubits, int layer, Stream& s) {
  if (n_qubits == 1) return sample_haar(2, s);
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  int q = 0;
  if (layer % 2 == 1) {
    out = ComplexMatrix::Identity(2, 2);
    q = 1;
  }
  for (; q + 1 < n_qubits; q += 2) out = tensor(out, sample_haar(4, s));
  if (q < n_qubits) out = tensor(out, ComplexMatrix::Identity(2, 2));
  return out;
}

inline ComplexMatrix sample_brickwork(int n_qubits, int depth, Stream& s) {
  if (n_qubits < 1 || n_qubits > kMaxBrickworkQubits)
    throw Error(Errc::TooManyQubits, std::to_string(n_qubits) + " qubits; supported range is 1.." +
                                         std::to_string(kMaxBrickworkQubits));
  if (depth < 1) throw Error(Errc::InvalidArgument, "depth must be >= 1");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (int layer = 0; layer < depth; ++layer) u = brickwork_layer(n_qubits, layer, s) * u;
  return u;
}

inline ComplexMatrix sample_brickwork(int n_qubits, int depth, SeedSpec seed) {
  Stream s(seed);
  return sample_brickwork(n_qubits, depth, s);
}

class UnitaryEnsemble {
 public:
  enum class Kind { Haar, Brickwork, Fixed };

  static UnitaryEnsemble haar(Eigen::Index d) {
    if (d < 1) throw Error(Errc::InvalidArgument, "dimension must be >= 1");
    UnitaryEnsemble e;
    e.kind_ = Kind::Haar;
    e.dim_ = d;
    return e;
  }

  /// depth <= 0 selects the default depth 5n + 20.
  static UnitaryEnsemble brickwork(int n_qubits, int depth = 0) {
    if (n_qubits < 1 || n_qubits > kMaxBrickworkQubits)
      throw Error(Errc::TooManyQubits, std::to_string(n_qubits) + " qubits; supported range is 1.." +
                                           std::to_string(kMaxBrickworkQubits));
    UnitaryEnsemble e;
    e.kind_ = Kind::Brickwork;
    e.qubits_ = n_qubits;
    e.depth_ = depth > 0 ? depth : default_brickwork_depth(n_qubits);
    e.dim_ = Eigen::Index{1} << n_qubits;
    return e;
  }

  static UnitaryEnsemble fixed(std::vector<ComplexMatrix> unitaries, std::vector<double> weights) {
    if (unitaries.empty()) throw Error(Errc::InvalidArgument, "fixed ensemble needs at least one unitary");
    if (weights.size() != unitaries.size())
      throw Error(Errc::InvalidArgument, "fixed ensemble needs one weight per unitary");
    double total = 0.0;
    for (double w : weights) {
      if (!(w >= 0.0)) throw Error(Errc::InvalidProbabilityVector, "negative weight " + detail::num(w));
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw Error(Errc::InvalidProbabilityVector, "weights sum to " + detail::num(total));
    const Eigen::Index d = unitaries.front().rows();
    for (std::size_t i = 0; i < unitaries.size(); ++i) {
      if (unitaries[i].rows() != d || unitaries[i].cols() != d)
        throw Error(Errc::DimensionMismatch, "ensemble members differ in dimension");
      if (!is_unitary(unitaries[i]))
        throw Error(Errc::NotUnitary, "member " + std::to_string(i) + " is not unitary");
    }
    UnitaryEnsemble e;
    e.kind_ = Kind::Fixed;
    e.dim_ = d;
    e.unitaries_ = std::move(unitaries);
    e.weights_ = std::move(weights);
    return e;
  }

  ComplexMatrix sample(Stream& s) const {
    switch (kind_) {
      case Kind::Haar: return sample_haar(dim_, s);
      case Kind::Brickwork: return sample_brickwork(qubits_, depth_, s);
      case Kind::Fixed: {
        const double x = s.uniform();
        double acc = 0.0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
          acc += weights_[i];
          if (x < acc) return unitaries_[i];
        }
        for (std::size_t i = weights_.size(); i-- > 0;)
          if (weights_[i] > 0.0) return unitaries_[i];
        return unitaries_.back();
      }
    }
    return {};
  }

  ComplexMatrix sample(SeedSpec seed) const {
    Stream s(seed);
    return sample(s);
  }

  Kind kind() const { return kind_; }
  Eigen::Index dim() const { return dim_; }
  int qubits() const { return qubits_; }
  int depth() const { return depth_; }
  const std::vector<ComplexMatrix>& unitaries() const { return unitaries_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  UnitaryEnsemble() = default;
  Kind kind_ = Kind::Haar;
  Eigen::Index dim_ = 1;
  int qubits_ = 0;
  int depth_ = 0;
  std::vector<ComplexMatrix> unitaries_;
  std::vector<double> weights_;
};

}  // namespace avdist

#endif  // AVDIST_ENSEMBLES_HPP
