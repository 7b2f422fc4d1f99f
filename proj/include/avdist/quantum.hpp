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

// Validated quantum objects: states, POVMs, channels (via their Choi state)
// and left-stochastic maps, with the constructors and transformations used
// throughout the toolkit.
//
// Choi convention: J_Λ = (I ⊗ Λ)(Φ+), Φ+ = |Φ+><Φ+|, |Φ+> = d^{-1/2} Σ_i |i>|i>.
// The first tensor factor is the input (reference) system and the second the
// output, so J has unit trace and tr_out J = I/d.

#ifndef AVDIST_QUANTUM_HPP
#define AVDIST_QUANTUM_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "avdist/linalg.hpp"

namespace avdist {

inline constexpr double kPsdTol = 1e-9;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kStochasticTol = 1e-12;

namespace detail {

inline double min_eigenvalue(const ComplexMatrix& h) { return hermitian_eigenvalues(h)(0); }

inline void require_psd(const ComplexMatrix& h, const std::string& what, Errc code = Errc::NotPositive) {
  const double lo = min_eigenvalue(h);
  if (lo < -kPsdTol)
    throw Error(code, what + " has minimum eigenvalue " + num(lo) + " below -" + num(kPsdTol));
}

}  // namespace detail

class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const ComplexMatrix& m) {
    ComplexMatrix h = hermitian_part(m);
    const double tr = h.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol)
      throw Error(Errc::NotNormalized, "state trace is " + detail::num(tr) + ", expected 1");
    detail::require_psd(h, "state");
    return DensityMatrix(std::move(h));
  }

  static DensityMatrix pure(const ComplexVector& psi) {
    const double n = psi.norm();
    if (!(n > 0.0)) throw Error(Errc::InvalidArgument, "zero state vector");
    const ComplexVector v = psi / n;
    return DensityMatrix(v * v.adjoint());
  }

  static DensityMatrix basis(Eigen::Index d, Eigen::Index i) {
    return DensityMatrix(basis_projector(d, i));
  }

  static DensityMatrix maximally_mixed(Eigen::Index d) {
    return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
  }

  const ComplexMatrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

class Povm {
 public:
  static Povm from_effects(std::vector<ComplexMatrix> effects) {
    if (effects.empty()) throw Error(Errc::InvalidArgument, "POVM needs at least one effect");
    const Eigen::Index d = effects.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < effects.size(); ++i) {
      if (effects[i].rows() != d || effects[i].cols() != d)
        throw Error(Errc::DimensionMismatch, "effect " + std::to_string(i) + " has wrong shape");
      effects[i] = hermitian_part(effects[i]);
      detail::require_psd(effects[i], "effect " + std::to_string(i));
      sum += effects[i];
    }
    const double defect = (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (defect > kTraceTol)
      throw Error(Errc::NotNormalized,
                  "effects sum to identity only within " + detail::num(defect));
    return Povm(std::move(effects));
  }

  const std::vector<ComplexMatrix>& effects() const { return effects_; }
  const ComplexMatrix& effect(std::size_t i) const { return effects_.at(i); }
  Eigen::Index dim() const { return effects_.front().rows(); }
  std::size_t n_outcomes() const { return effects_.size(); }

 private:
  explicit Povm(std::vector<ComplexMatrix> e) : effects_(std::move(e)) {}
  std::vector<ComplexMatrix> effects_;
};

class ChannelChoi {
 public:
  /// Validates a Choi state: Hermitian, PSD, unit trace, tr_out J = I/d.
  static ChannelChoi from_choi(const ComplexMatrix& m) {
    require_square(m);
    const auto n = m.rows();
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
    if (d * d != n)
      throw Error(Errc::DimensionMismatch, "Choi matrix size " + std::to_string(n) + " is not d^2");
    ComplexMatrix h;
    try {
      h = hermitian_part(m);
    } catch (const Error& e) {
      throw Error(Errc::ChoiNotCPTP, e.what());
    }
    const double tr = h.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol)
      throw Error(Errc::ChoiNotCPTP, "Choi trace is " + detail::num(tr) + ", expected 1");
    detail::require_psd(h, "Choi matrix", Errc::ChoiNotCPTP);
    const ComplexMatrix marginal = partial_trace(h, d, d, Keep::First);
    const double defect =
        (marginal - ComplexMatrix::Identity(d, d) / static_cast<double>(d)).cwiseAbs().maxCoeff();
    if (defect > kTraceTol)
      throw Error(Errc::ChoiNotCPTP, "input marginal deviates from I/d by " + detail::num(defect));
    return ChannelChoi(std::move(h), d);
  }

  const ComplexMatrix& choi() const { return choi_; }
  Eigen::Index dim() const { return dim_; }

 private:
  ChannelChoi(ComplexMatrix j, Eigen::Index d) : choi_(std::move(j)), dim_(d) {}
  ComplexMatrix choi_;
  Eigen::Index dim_;
};

/// Left-stochastic matrix: t(i, j) = probability of output i given input j.
class StochasticMap {
 public:
  static StochasticMap from_matrix(const RealMatrix& t) {
    if (t.rows() != t.cols() || t.rows() == 0)
      throw Error(Errc::InvalidStochasticMap, "stochastic map must be square and non-empty");
    for (Eigen::Index j = 0; j < t.cols(); ++j) {
      for (Eigen::Index i = 0; i < t.rows(); ++i)
        if (!(t(i, j) >= 0.0) || !std::isfinite(t(i, j)))
          throw Error(Errc::InvalidStochasticMap, "entry (" + std::to_string(i) + "," +
                                                      std::to_string(j) + ") = " +
                                                      detail::num(t(i, j)) + " is negative");
      const double s = t.col(j).sum();
      if (std::abs(s - 1.0) > kStochasticTol)
        throw Error(Errc::InvalidStochasticMap,
                    "column " + std::to_string(j) + " sums to " + detail::num(s));
    }
    return StochasticMap(t);
  }

  static StochasticMap symmetric_bitflip(double p) { return asymmetric_bitflip(p, p); }

  /// p10 = P(read 1 | prepared 0), p01 = P(read 0 | prepared 1).
  static StochasticMap asymmetric_bitflip(double p10, double p01) {
    RealMatrix t(2, 2);
    t << 1.0 - p10, p01, p10, 1.0 - p01;
    return from_matrix(t);
  }

  static StochasticMap tensor(const StochasticMap& a, const StochasticMap& b) {
    RealMatrix out(a.t_.rows() * b.t_.rows(), a.t_.cols() * b.t_.cols());
    for (Eigen::Index i = 0; i < a.t_.rows(); ++i)
      for (Eigen::Index j = 0; j < a.t_.cols(); ++j)
        out.block(i * b.t_.rows(), j * b.t_.cols(), b.t_.rows(), b.t_.cols()) = a.t_(i, j) * b.t_;
    return StochasticMap(out);
  }

  const RealMatrix& matrix() const { return t_; }
  Eigen::Index size() const { return t_.rows(); }

 private:
  explicit StochasticMap(RealMatrix t) : t_(std::move(t)) {}
  RealMatrix t_;
};

// ---------------------------------------------------------------------------
// Channels

/// Λ(X) for an arbitrary operator X: Λ(X) = d · tr_in[(X^T ⊗ I) J].
inline ComplexMatrix apply_map(const ComplexMatrix& choi, Eigen::Index d, const ComplexMatrix& x) {
  if (x.rows() != d || x.cols() != d || choi.rows() != d * d)
    throw Error(Errc::DimensionMismatch, "operator dimension does not match channel");
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      if (x(i, j) != Complex(0.0, 0.0)) out += x(i, j) * choi.block(i * d, j * d, d, d);
  return out * static_cast<double>(d);
}

inline ComplexMatrix apply_map(const ChannelChoi& ch, const ComplexMatrix& x) {
  return apply_map(ch.choi(), ch.dim(), x);
}

inline DensityMatrix apply_channel(const ChannelChoi& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim())
    throw Error(Errc::DimensionMismatch, "state dimension " + std::to_string(rho.dim()) +
                                             " vs channel dimension " + std::to_string(ch.dim()));
  return DensityMatrix::from_matrix(apply_map(ch, rho.mat()));
}

inline ChannelChoi channel_from_kraus(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) throw Error(Errc::InvalidArgument, "empty Kraus list");
  const Eigen::Index d = kraus.front().rows();
  ComplexMatrix completeness = ComplexMatrix::Zero(d, d);
  for (const auto& k : kraus) {
    if (k.rows() != d || k.cols() != d)
      throw Error(Errc::DimensionMismatch, "Kraus operators must all be d x d");
    require_finite(k);
    completeness += k.adjoint() * k;
  }
  const double defect = (completeness - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > kTraceTol)
    throw Error(Errc::NotTracePreserving, "sum K^dagger K deviates from I by " + detail::num(defect));
  // J = (1/d) Σ_k |K_k>><<K_k| with |K>> = Σ_i |i> ⊗ K|i>.
  ComplexMatrix j = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& k : kraus) {
    ComplexVector v(d * d);
    for (Eigen::Index i = 0; i < d; ++i) v.segment(i * d, d) = k.col(i);
    j += v * v.adjoint();
  }
  return ChannelChoi::from_choi(j / static_cast<double>(d));
}

/// Superoperator in column-stacking convention: vec(Λ(X)) = S vec(X),
/// vec(X)[a + d*b] = X(a, b).
inline ComplexMatrix choi_to_superop(const ChannelChoi& ch) {
  const Eigen::Index d = ch.dim();
  const ComplexMatrix& j = ch.choi();
  ComplexMatrix s(d * d, d * d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b)
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index k = 0; k < d; ++k)
          s(a + d * b, i + d * k) = static_cast<double>(d) * j(i * d + a, k * d + b);
  return s;
}

inline ComplexMatrix superop_to_choi_matrix(const ComplexMatrix& s) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(s.rows()))));
  ComplexMatrix j(d * d, d * d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b)
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index k = 0; k < d; ++k)
          j(i * d + a, k * d + b) = s(a + d * b, i + d * k) / static_cast<double>(d);
  return j;
}

inline ComplexVector vec(const ComplexMatrix& x) {
  return Eigen::Map<const ComplexVector>(x.data(), x.size());  // Eigen is column-major
}

/// outer ∘ inner.
inline ChannelChoi compose(const ChannelChoi& outer, const ChannelChoi& inner) {
  if (outer.dim() != inner.dim())
    throw Error(Errc::DimensionMismatch, "cannot compose channels of different dimension");
  return ChannelChoi::from_choi(superop_to_choi_matrix(choi_to_superop(outer) * choi_to_superop(inner)));
}

/// Λ_a ⊗ Λ_b acting on H_a ⊗ H_b. The Choi matrix is the tensor product of the
/// factor Choi matrices with the middle two subsystems swapped.
inline ChannelChoi channel_tensor(const ChannelChoi& a, const ChannelChoi& b) {
  const Eigen::Index da = a.dim(), db = b.dim(), d = da * db;
  const ComplexMatrix& ja = a.choi();
  const ComplexMatrix& jb = b.choi();
  ComplexMatrix j(d * d, d * d);
  auto target = [&](Eigen::Index ia, Eigen::Index ib, Eigen::Index oa, Eigen::Index ob) {
    return (ia * db + ib) * d + (oa * db + ob);
  };
  for (Eigen::Index ia = 0; ia < da; ++ia)
    for (Eigen::Index oa = 0; oa < da; ++oa)
      for (Eigen::Index ka = 0; ka < da; ++ka)
        for (Eigen::Index pa = 0; pa < da; ++pa) {
          const Complex va = ja(ia * da + oa, ka * da + pa);
          for (Eigen::Index ib = 0; ib < db; ++ib)
            for (Eigen::Index ob = 0; ob < db; ++ob)
              for (Eigen::Index kb = 0; kb < db; ++kb)
                for (Eigen::Index pb = 0; pb < db; ++pb)
                  j(target(ia, ib, oa, ob), target(ka, kb, pa, pb)) = va * jb(ib * db + ob, kb * db + pb);
        }
  return ChannelChoi::from_choi(j);
}

inline ChannelChoi channel_mix(const std::vector<double>& weights, const std::vector<ChannelChoi>& chans) {
  if (weights.size() != chans.size() || chans.empty())
    throw Error(Errc::InvalidArgument, "mixture needs one weight per channel");
  ComplexMatrix j = ComplexMatrix::Zero(chans.front().choi().rows(), chans.front().choi().cols());
  for (std::size_t i = 0; i < chans.size(); ++i) {
    if (chans[i].dim() != chans.front().dim())
      throw Error(Errc::DimensionMismatch, "mixture components differ in dimension");
    j += weights[i] * chans[i].choi();
  }
  return ChannelChoi::from_choi(j);
}

inline ChannelChoi identity_channel(Eigen::Index d) {
  return channel_from_kraus({ComplexMatrix::Identity(d, d)});
}

inline ChannelChoi unitary_channel(const ComplexMatrix& u) {
  if (!is_unitary(u, 1e-9)) throw Error(Errc::NotUnitary, "channel generator is not unitary");
  return channel_from_kraus({u});
}

/// Constant channel X -> tr(X) rho; J = I/d ⊗ rho.
inline ChannelChoi state_prep_channel(const DensityMatrix& rho) {
  const Eigen::Index d = rho.dim();
  return ChannelChoi::from_choi(tensor(ComplexMatrix::Identity(d, d) / static_cast<double>(d), rho.mat()));
}

inline ChannelChoi max_depolarizing_channel(Eigen::Index d) {
  return ChannelChoi::from_choi(ComplexMatrix::Identity(d * d, d * d) / static_cast<double>(d * d));
}

inline ChannelChoi dephasing_channel(Eigen::Index d) {
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index i = 0; i < d; ++i) kraus.push_back(basis_projector(d, i));
  return channel_from_kraus(kraus);
}

inline void require_probability_vector(const std::vector<double>& p, std::size_t expected_len) {
  if (p.size() != expected_len)
    throw Error(Errc::InvalidProbabilityVector, "expected " + std::to_string(expected_len) +
                                                    " probabilities, got " + std::to_string(p.size()));
  double s = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw Error(Errc::InvalidProbabilityVector, "negative probability " + detail::num(x));
    s += x;
  }
  if (std::abs(s - 1.0) > kTraceTol)
    throw Error(Errc::InvalidProbabilityVector, "probabilities sum to " + detail::num(s));
}

/// Single-qubit Pauli channel ρ -> Σ_j p_j σ_j ρ σ_j with p = (p_I, p_X, p_Y, p_Z).
inline ChannelChoi pauli_channel(const std::vector<double>& p) {
  require_probability_vector(p, 4);
  std::vector<ComplexMatrix> kraus;
  for (int j = 0; j < 4; ++j) kraus.push_back(std::sqrt(p[j]) * pauli(j));
  return channel_from_kraus(kraus);
}

/// Separable Pauli noise on N qubits, one probability 4-vector per qubit.
inline ChannelChoi pauli_product_channel(const std::vector<std::vector<double>>& probs) {
  if (probs.empty()) throw Error(Errc::InvalidProbabilityVector, "no qubits given");
  ChannelChoi out = pauli_channel(probs.front());
  for (std::size_t i = 1; i < probs.size(); ++i) out = channel_tensor(out, pauli_channel(probs[i]));
  return out;
}

/// J = I/d^2 + sign * (1/d^2) ψ ⊗ A with tr A = 0, A^2 = I, d even.
inline ChannelChoi jamiolkowski_example_channel(const ComplexMatrix& a, const ComplexVector& psi, int sign) {
  const Eigen::Index d = a.rows();
  if (a.rows() != a.cols() || d % 2 != 0)
    throw Error(Errc::InvalidExampleOperator, "A must be square of even dimension");
  if (hermiticity_defect(a) > kHermitianTol)
    throw Error(Errc::InvalidExampleOperator, "A is not Hermitian");
  if (std::abs(a.trace()) > kTraceTol)
    throw Error(Errc::InvalidExampleOperator, "tr A = " + detail::num(std::abs(a.trace())) + " is not 0");
  const double sq_defect = (a * a - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (sq_defect > kTraceTol)
    throw Error(Errc::InvalidExampleOperator, "A^2 deviates from I by " + detail::num(sq_defect));
  if (psi.size() != d) throw Error(Errc::DimensionMismatch, "psi must live in dimension d");
  const ComplexMatrix proj = DensityMatrix::pure(psi).mat();
  const double dd = static_cast<double>(d * d);
  return ChannelChoi::from_choi(ComplexMatrix::Identity(d * d, d * d) / dd +
                                (static_cast<double>(sign) / dd) * tensor(proj, a));
}

inline bool is_unital(const ChannelChoi& ch, double tol = 1e-9) {
  const Eigen::Index d = ch.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return (apply_map(ch, id) - id).cwiseAbs().maxCoeff() <= tol;
}

/// Heisenberg-picture map Λ*(M) = d · (tr_out[(I ⊗ M) J])^T.
inline ComplexMatrix dual_map(const ChannelChoi& ch, const ComplexMatrix& m) {
  const Eigen::Index d = ch.dim();
  const ComplexMatrix x = tensor(ComplexMatrix::Identity(d, d), m) * ch.choi();
  return static_cast<double>(d) * partial_trace(x, d, d, Keep::First).transpose();
}

// ---------------------------------------------------------------------------
// POVMs

inline Povm povm_computational(Eigen::Index d) {
  std::vector<ComplexMatrix> e;
  for (Eigen::Index i = 0; i < d; ++i) e.push_back(basis_projector(d, i));
  return Povm::from_effects(std::move(e));
}

/// Effects I/n. The trivial POVM of the convergence-to-uniform results has n = d;
/// other n is accepted as an extension.
inline Povm povm_trivial(Eigen::Index d, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "trivial POVM needs n >= 1");
  std::vector<ComplexMatrix> e(n, ComplexMatrix::Identity(d, d) / static_cast<double>(n));
  return Povm::from_effects(std::move(e));
}

/// Computational basis with the first two outcomes exchanged.
inline Povm povm_swapped_computational(Eigen::Index d) {
  if (d < 2) throw Error(Errc::InvalidArgument, "swapping outcomes needs d >= 2");
  std::vector<ComplexMatrix> e;
  for (Eigen::Index i = 0; i < d; ++i) e.push_back(basis_projector(d, i));
  std::swap(e[0], e[1]);
  return Povm::from_effects(std::move(e));
}

/// M_i = Σ_j T_ij |j><j|.
inline Povm povm_from_stochastic(const StochasticMap& t) {
  const Eigen::Index d = t.size();
  std::vector<ComplexMatrix> e;
  for (Eigen::Index i = 0; i < d; ++i) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) m(j, j) = t.matrix()(i, j);
    e.push_back(std::move(m));
  }
  return Povm::from_effects(std::move(e));
}

/// Effect-wise diagonal part diag(M_i) (the "classical part" of readout noise).
inline Povm povm_diagonal_part(const Povm& m) {
  std::vector<ComplexMatrix> e;
  for (const auto& x : m.effects()) e.push_back(x.diagonal().asDiagonal());
  return Povm::from_effects(std::move(e));
}

/// Classical post-processing M'_i = Σ_j T_ij M_j.
inline Povm povm_postprocess(const StochasticMap& t, const Povm& m) {
  if (static_cast<std::size_t>(t.size()) != m.n_outcomes())
    throw Error(Errc::OutcomeCountMismatch, "stochastic map size does not match outcome count");
  std::vector<ComplexMatrix> e;
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    ComplexMatrix x = ComplexMatrix::Zero(m.dim(), m.dim());
    for (Eigen::Index j = 0; j < t.size(); ++j) x += t.matrix()(i, j) * m.effect(static_cast<std::size_t>(j));
    e.push_back(std::move(x));
  }
  return Povm::from_effects(std::move(e));
}

/// POVM obtained by running the channel before the measurement: effects Λ*(M_i).
inline Povm povm_preprocess(const ChannelChoi& ch, const Povm& m) {
  if (ch.dim() != m.dim()) throw Error(Errc::DimensionMismatch, "channel and POVM dimensions differ");
  std::vector<ComplexMatrix> e;
  for (const auto& x : m.effects()) e.push_back(dual_map(ch, x));
  return Povm::from_effects(std::move(e));
}

/// Effects M_i ⊗ N_j, outcome index i * n_N + j.
inline Povm povm_tensor(const Povm& a, const Povm& b) {
  std::vector<ComplexMatrix> e;
  for (const auto& x : a.effects())
    for (const auto& y : b.effects()) e.push_back(tensor(x, y));
  return Povm::from_effects(std::move(e));
}

inline Povm povm_mix(const std::vector<double>& weights, const std::vector<Povm>& povms) {
  if (weights.size() != povms.size() || povms.empty())
    throw Error(Errc::InvalidArgument, "mixture needs one weight per POVM");
  std::vector<ComplexMatrix> e(povms.front().n_outcomes(),
                               ComplexMatrix::Zero(povms.front().dim(), povms.front().dim()));
  for (std::size_t a = 0; a < povms.size(); ++a) {
    if (povms[a].n_outcomes() != e.size() || povms[a].dim() != povms.front().dim())
      throw Error(Errc::DimensionMismatch, "mixture components differ in shape");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += weights[a] * povms[a].effect(i);
  }
  return Povm::from_effects(std::move(e));
}

// ---------------------------------------------------------------------------
// Born rule

/// Clamps tiny negatives produced by rounding and renormalizes when the total
/// is within tolerance of one.
inline RealVector normalize_probabilities(RealVector p) {
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < 0.0) {
      if (p(i) < -kPsdTol)
        throw Error(Errc::NotNormalized, "negative probability " + detail::num(p(i)));
      p(i) = 0.0;
    }
  }
  const double s = p.sum();
  if (std::abs(s - 1.0) > kTraceTol)
    throw Error(Errc::NotNormalized, "probabilities sum to " + detail::num(s));
  return p / s;
}

inline RealVector born_distribution(const DensityMatrix& rho, const Povm& povm) {
  if (rho.dim() != povm.dim())
    throw Error(Errc::DimensionMismatch, "state and POVM dimensions differ");
  RealVector p(static_cast<Eigen::Index>(povm.n_outcomes()));
  for (std::size_t i = 0; i < povm.n_outcomes(); ++i)
    p(static_cast<Eigen::Index>(i)) = (povm.effect(i) * rho.mat()).trace().real();
  return normalize_probabilities(std::move(p));
}

}  // namespace avdist

#endif  // AVDIST_QUANTUM_HPP
