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

// Monte Carlo estimators of the average TV distance under random circuits,
// the bound constants and bound checks, and a majority-vote discrimination
// simulator.
//
// Sample i of an estimate draws everything it needs from stream
// (seed, i); for channels the state-preparation unitary V is drawn before
// the measurement-basis unitary U.

#ifndef AVDIST_MONTECARLO_HPP
#define AVDIST_MONTECARLO_HPP

#include <cmath>
#include <string>
#include <string_view>

#include "avdist/distances.hpp"
#include "avdist/ensembles.hpp"
#include "avdist/parallel.hpp"

namespace avdist {

enum class ObjectKind { State, Povm, Channel };

inline std::string_view kind_name(ObjectKind k) {
  switch (k) {
    case ObjectKind::State: return "state";
    case ObjectKind::Povm: return "povm";
    case ObjectKind::Channel: return "channel";
  }
  return "?";
}

inline ObjectKind parse_kind(std::string_view s) {
  if (s == "state") return ObjectKind::State;
  if (s == "povm") return ObjectKind::Povm;
  if (s == "channel") return ObjectKind::Channel;
  throw Error(Errc::InvalidArgument, "unknown kind '" + std::string(s) + "'");
}

inline constexpr std::size_t kMinSamples = 100;

namespace detail {

inline RealVector diag_probabilities(const ComplexMatrix& rotated) {
  RealVector p = rotated.diagonal().real();
  return normalize_probabilities(std::move(p));
}

/// p_k = <k| U rho U^dagger |k>.
inline RealVector rotated_born(const ComplexMatrix& rho, const ComplexMatrix& u) {
  return diag_probabilities(u * rho * u.adjoint());
}

/// p_i = <psi| M_i |psi>.
inline RealVector povm_born(const Povm& m, const ComplexVector& psi) {
  RealVector p(static_cast<Eigen::Index>(m.n_outcomes()));
  for (std::size_t i = 0; i < m.n_outcomes(); ++i)
    p(static_cast<Eigen::Index>(i)) = psi.dot(m.effect(i) * psi).real();
  return normalize_probabilities(std::move(p));
}

inline void check_sampling(Eigen::Index obj_dim, const UnitaryEnsemble& ens, std::size_t n) {
  if (ens.dim() != obj_dim)
    throw Error(Errc::DimensionMismatch, "ensemble dimension " + std::to_string(ens.dim()) +
                                             " vs object dimension " + std::to_string(obj_dim));
  if (n < kMinSamples)
    throw Error(Errc::InvalidArgument, "need at least " + std::to_string(kMinSamples) + " samples");
}

/// Output distributions of the two objects for one random circuit drawn from s.
struct CircuitPair {
  RealVector p;
  RealVector q;
};

inline CircuitPair circuit_pair(const DensityMatrix& a, const DensityMatrix& b, const UnitaryEnsemble& ens,
                                Stream& s) {
  const ComplexMatrix u = ens.sample(s);
  return {rotated_born(a.mat(), u), rotated_born(b.mat(), u)};
}

inline CircuitPair circuit_pair(const Povm& a, const Povm& b, const UnitaryEnsemble& ens, Stream& s) {
  const ComplexMatrix v = ens.sample(s);
  const ComplexVector psi = v.col(0);
  return {povm_born(a, psi), povm_born(b, psi)};
}

inline CircuitPair circuit_pair(const ChannelChoi& a, const ChannelChoi& b, const UnitaryEnsemble& ens,
                                Stream& s) {
  const ComplexMatrix v = ens.sample(s);
  const ComplexMatrix u = ens.sample(s);
  const ComplexVector psi = v.col(0);
  const ComplexMatrix in = psi * psi.adjoint();
  return {rotated_born(apply_map(a, in), u), rotated_born(apply_map(b, in), u)};
}

inline void require_pair(const DensityMatrix& a, const DensityMatrix& b) { require_same_dim(a.dim(), b.dim()); }
inline void require_pair(const Povm& a, const Povm& b) { require_same_shape(a, b); }
inline void require_pair(const ChannelChoi& a, const ChannelChoi& b) { require_same_dim(a.dim(), b.dim()); }

template <class T>
EstimateReport estimate_avg_tv(const T& a, const T& b, const UnitaryEnsemble& ens, std::size_t n,
                               std::uint64_t seed, unsigned workers) {
  require_pair(a, b);
  check_sampling(a.dim(), ens, n);
  const auto values = parallel_map(n, workers, [&](std::size_t i) {
    Stream s({seed, i});
    const CircuitPair cp = circuit_pair(a, b, ens, s);
    return tv(cp.p, cp.q);
  });
  return summarize(values, seed);
}

}  // namespace detail

/// E_U TV(p^{rho,U}, p^{sigma,U}), p_k = <k|U rho U^dagger|k>.
inline EstimateReport estimate_avg_tv_states(const DensityMatrix& rho, const DensityMatrix& sigma,
                                             const UnitaryEnsemble& ens, std::size_t n_samples,
                                             std::uint64_t seed, unsigned workers = 1) {
  return detail::estimate_avg_tv(rho, sigma, ens, n_samples, seed, workers);
}

/// E_V TV(p^{M,psi_V}, p^{N,psi_V}), psi_V = V|0>.
inline EstimateReport estimate_avg_tv_povms(const Povm& m, const Povm& n, const UnitaryEnsemble& ens,
                                            std::size_t n_samples, std::uint64_t seed, unsigned workers = 1) {
  return detail::estimate_avg_tv(m, n, ens, n_samples, seed, workers);
}

/// E_{V,U} TV of the computational-basis statistics of U Λ(psi_V) U^dagger.
inline EstimateReport estimate_avg_tv_channels(const ChannelChoi& lam, const ChannelChoi& gam,
                                               const UnitaryEnsemble& ens, std::size_t n_samples,
                                               std::uint64_t seed, unsigned workers = 1) {
  return detail::estimate_avg_tv(lam, gam, ens, n_samples, seed, workers);
}

struct BoundConstants {
  double c = 0.0;
  double C = 0.0;
  double l = 1.0;
  double u = 1.0;
};

inline constexpr double kMaxDeltaPrime = 1.0 / 3.0;

/// Constants of the average-TV sandwich l*c*d_av <= E TV <= u*C*d_av for a
/// delta-approximate 4-design, delta' in [0, 1/3].
inline BoundConstants constants(ObjectKind kind, Eigen::Index d, double delta_prime) {
  if (!(delta_prime >= 0.0) || delta_prime > kMaxDeltaPrime)
    throw Error(Errc::DeltaOutOfRange, "delta' = " + detail::num(delta_prime) + " outside [0, 1/3]");
  if (d < 1) throw Error(Errc::InvalidArgument, "dimension must be positive");
  const double dd = static_cast<double>(d);
  const double x = delta_prime / (dd * dd);
  BoundConstants k;
  if (kind == ObjectKind::Channel) {
    k.c = 0.087;
    k.C = dd / (dd + 1.0);
    k.l = std::pow(1.0 - x, 3) / (1.0 + delta_prime);
    k.u = 1.0 + x;
  } else {
    k.c = 0.31;
    k.C = std::sqrt(dd / (dd + 1.0));
    k.l = std::sqrt(std::pow(1.0 - x, 3) / (1.0 + delta_prime));
    k.u = std::sqrt(1.0 + x);
  }
  return k;
}

struct BoundReport {
  ObjectKind kind = ObjectKind::State;
  Eigen::Index d = 0;
  double delta_prime = 0.0;
  double d_av = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double mean = 0.0;
  double std_err = 0.0;
  BoundConstants k;
  bool passed = false;
};

inline constexpr double kBoundSlackSe = 3.0;

inline BoundReport bound_check(const EstimateReport& est, double d_av, ObjectKind kind, Eigen::Index d,
                               double delta_prime) {
  BoundReport r;
  r.kind = kind;
  r.d = d;
  r.delta_prime = delta_prime;
  r.d_av = d_av;
  r.k = constants(kind, d, delta_prime);
  r.lower = r.k.l * r.k.c * d_av;
  r.upper = r.k.u * r.k.C * d_av;
  r.mean = est.mean;
  r.std_err = est.std_err;
  const double slack = kBoundSlackSe * est.std_err;
  r.passed = est.mean <= r.upper + slack && est.mean >= r.lower - slack;
  return r;
}

struct DiscriminationReport {
  double empirical_error = 0.0;
  double std_err = 0.0;
  double hoeffding_bound = 0.0;
  double advantage = 0.0;  // estimated single-shot E TV
  std::size_t shots = 0;
  std::size_t trials = 0;
};

namespace detail {

inline std::size_t sample_outcome(const RealVector& p, Stream& s) {
  const double x = s.uniform();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    acc += p(i);
    if (x < acc) return static_cast<std::size_t>(i);
  }
  for (Eigen::Index i = p.size(); i-- > 0;)
    if (p(i) > 0.0) return static_cast<std::size_t>(i);
  return 0;
}

inline double distance_of(const DensityMatrix& a, const DensityMatrix& b) { return d_av_states(a, b); }
inline double distance_of(const Povm& a, const Povm& b) { return d_av_povms(a, b); }
inline double distance_of(const ChannelChoi& a, const ChannelChoi& b) { return d_av_channels(a, b); }

}  // namespace detail

/// Single-shot discrimination by random circuits. Each trial hides a or b
/// behind a fair coin; every shot samples a fresh circuit and one outcome of
/// the hidden object, and votes for whichever object gives that outcome the
/// higher likelihood under that circuit (ties: fair coin). The majority vote
/// (ties: fair coin) is the trial's guess.
template <class T>
DiscriminationReport simulate_discrimination(const T& a, const T& b, const UnitaryEnsemble& ens,
                                             std::size_t shots, std::size_t n_trials, std::uint64_t seed,
                                             unsigned workers = 1, std::size_t advantage_samples = 20000) {
  detail::require_pair(a, b);
  if (!(detail::distance_of(a, b) > 1e-12))
    throw Error(Errc::ZeroDistance, "objects are identical; nothing to discriminate");
  if (shots < 1 || n_trials < 1) throw Error(Errc::InvalidArgument, "need shots >= 1 and trials >= 1");
  DiscriminationReport r;
  r.shots = shots;
  r.trials = n_trials;
  r.advantage = detail::estimate_avg_tv(a, b, ens, advantage_samples, derive_seed(seed, 0xadu), workers).mean;
  r.hoeffding_bound = 2.0 * std::exp(-r.advantage * r.advantage * static_cast<double>(shots) / 2.0);
  const std::uint64_t trial_seed = derive_seed(seed, 0x7a1u);
  const auto errors = parallel_map(n_trials, workers, [&](std::size_t t) {
    Stream s({trial_seed, t});
    const bool hidden_b = s.uniform() < 0.5;
    long votes_b = 0;
    long votes_a = 0;
    for (std::size_t k = 0; k < shots; ++k) {
      const detail::CircuitPair cp = detail::circuit_pair(a, b, ens, s);
      const std::size_t o = detail::sample_outcome(hidden_b ? cp.q : cp.p, s);
      const double la = cp.p(static_cast<Eigen::Index>(o));
      const double lb = cp.q(static_cast<Eigen::Index>(o));
      bool vote_b;
      if (la == lb) vote_b = s.uniform() < 0.5;
      else vote_b = lb > la;
      (vote_b ? votes_b : votes_a) += 1;
    }
    bool guess_b;
    if (votes_a == votes_b) guess_b = s.uniform() < 0.5;
    else guess_b = votes_b > votes_a;
    return guess_b == hidden_b ? 0.0 : 1.0;
  });
  const EstimateReport e = summarize(errors, seed);
  r.empirical_error = e.mean;
  r.std_err = e.std_err;
  return r;
}

}  // namespace avdist

#endif  // AVDIST_MONTECARLO_HPP
