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

// Reproduction registry and randomized property suites.
//
// Reproduction cases build the objects explicitly and evaluate them with the
// generic distance routines; expected values are either literal constants or
// closed-form formula values.

#ifndef AVDIST_HARNESS_HPP
#define AVDIST_HARNESS_HPP

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "avdist/closed_form.hpp"
#include "avdist/distances.hpp"
#include "avdist/io.hpp"
#include "avdist/moments.hpp"
#include "avdist/random_objects.hpp"
#include "avdist/worst.hpp"

namespace avdist {

// ---------------------------------------------------------------------------
// Named constructions shared by the registry, the suites and the tests.

namespace build {

/// rho, sigma: maximally mixed on the first / second half of the basis.
inline std::pair<DensityMatrix, DensityMatrix> orthogonal_half_mixed(Eigen::Index d) {
  if (d % 2 != 0) throw Error(Errc::InvalidArgument, "d must be even");
  ComplexMatrix a = ComplexMatrix::Zero(d, d);
  ComplexMatrix b = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d / 2; ++i) {
    a(i, i) = 2.0 / static_cast<double>(d);
    b(i + d / 2, i + d / 2) = 2.0 / static_cast<double>(d);
  }
  return {DensityMatrix::from_matrix(a), DensityMatrix::from_matrix(b)};
}

/// Measures which half of the basis the input lives in and prepares |0> or |1>.
inline ChannelChoi half_detector_channel(Eigen::Index d) {
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index i = 0; i < d; ++i) {
    ComplexMatrix k = ComplexMatrix::Zero(d, d);
    k(i < d / 2 ? 0 : 1, i) = 1.0;
    kraus.push_back(std::move(k));
  }
  return channel_from_kraus(kraus);
}

inline ComplexVector basis_vector(Eigen::Index d, Eigen::Index i) {
  ComplexVector v = ComplexVector::Zero(d);
  v(i) = 1.0;
  return v;
}

inline ChannelChoi prep_channel(const ComplexVector& psi) {
  return state_prep_channel(DensityMatrix::pure(psi));
}

/// Reads the first qubit and prepares psi0 or psi1 accordingly.
inline ChannelChoi conditional_prep_channel(int n_qubits, const ComplexVector& psi0, const ComplexVector& psi1) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index i = 0; i < d; ++i) {
    const ComplexVector& target = i < d / 2 ? psi0 : psi1;
    kraus.push_back(target * basis_vector(d, i).adjoint());
  }
  return channel_from_kraus(kraus);
}

inline DensityMatrix first_qubit_with_mixed_rest(int n_qubits, int bit) {
  const Eigen::Index rest = Eigen::Index{1} << (n_qubits - 1);
  return DensityMatrix::from_matrix(
      tensor(basis_projector(2, bit), ComplexMatrix::Identity(rest, rest) / static_cast<double>(rest)));
}

/// diag(1, -1, 1, -1, ...): Hermitian, traceless, squares to I for even d.
inline ComplexMatrix alternating_signs(Eigen::Index d) {
  ComplexMatrix a = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) a(i, i) = i % 2 == 0 ? 1.0 : -1.0;
  return a;
}

inline ComplexMatrix reflect_second(Eigen::Index d) {
  ComplexMatrix v = ComplexMatrix::Identity(d, d);
  v(1, 1) = -1.0;
  return v;
}

/// |+r> or |-r> for axis r in {x, y, z}.
inline ComplexVector pauli_eigenvector(char axis, int sign) {
  ComplexVector v(2);
  const double s = sign >= 0 ? 1.0 : -1.0;
  const double h = std::sqrt(0.5);
  switch (axis) {
    case 'x': v << h, s * h; break;
    case 'y': v << h, Complex(0.0, s * h); break;
    case 'z':
      if (sign >= 0) v << 1.0, 0.0;
      else v << 0.0, 1.0;
      break;
    default: throw Error(Errc::InvalidArgument, "axis must be x, y or z");
  }
  return v;
}

inline ComplexMatrix kron_all(const std::vector<ComplexMatrix>& ms) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const auto& m : ms) out = tensor(out, m);
  return out;
}

/// exp(i (n . sigma) phi / 2) = cos(phi/2) I + i sin(phi/2) n . sigma.
inline ComplexMatrix qubit_rotation(const std::array<double, 3>& n, double phi) {
  ComplexMatrix ns = n[0] * pauli(1) + n[1] * pauli(2) + n[2] * pauli(3);
  return std::cos(phi / 2.0) * ComplexMatrix::Identity(2, 2) + Complex(0.0, std::sin(phi / 2.0)) * ns;
}

inline StochasticMap symmetric_bitflips(const std::vector<double>& p) {
  StochasticMap t = StochasticMap::symmetric_bitflip(p.front());
  for (std::size_t i = 1; i < p.size(); ++i) t = StochasticMap::tensor(t, StochasticMap::symmetric_bitflip(p[i]));
  return t;
}

inline StochasticMap asymmetric_bitflips(const std::vector<double>& p10, const std::vector<double>& p01) {
  StochasticMap t = StochasticMap::asymmetric_bitflip(p10.front(), p01.front());
  for (std::size_t i = 1; i < p10.size(); ++i)
    t = StochasticMap::tensor(t, StochasticMap::asymmetric_bitflip(p10[i], p01[i]));
  return t;
}

}  // namespace build

// ---------------------------------------------------------------------------
// Reproduction registry

inline constexpr double kReproductionTol = 1e-9;
inline constexpr double kStrictMargin = 1e-6;

struct ValueCheck {
  enum class Relation { Equal, Greater };
  std::string label;
  double expected = 0.0;  // for Greater: the value that must be exceeded
  double computed = 0.0;
  double tol = kReproductionTol;
  Relation relation = Relation::Equal;
  bool passed = false;
};

struct ReproductionCase {
  std::string name;
  std::string description;
  std::vector<ValueCheck> checks;
  bool passed = false;
};

namespace repro {

class CaseBuilder {
 public:
  CaseBuilder(std::string name, std::string description) {
    c_.name = std::move(name);
    c_.description = std::move(description);
  }
  CaseBuilder& equal(std::string label, double expected, double computed, double tol = kReproductionTol) {
    ValueCheck v{std::move(label), expected, computed, tol, ValueCheck::Relation::Equal, false};
    v.passed = std::abs(computed - expected) <= tol;
    c_.checks.push_back(std::move(v));
    return *this;
  }
  /// computed must exceed bound by more than the strict margin.
  CaseBuilder& greater(std::string label, double bound, double computed) {
    ValueCheck v{std::move(label), bound, computed, kStrictMargin, ValueCheck::Relation::Greater, false};
    v.passed = computed - bound > kStrictMargin;
    c_.checks.push_back(std::move(v));
    return *this;
  }
  ReproductionCase done() {
    c_.passed = !c_.checks.empty();
    for (const auto& v : c_.checks) c_.passed = c_.passed && v.passed;
    return std::move(c_);
  }

 private:
  ReproductionCase c_;
};

inline constexpr std::uint64_t kRegistrySeed = 0x5eed2026;

inline ReproductionCase states_separation() {
  const Eigen::Index d = 4;
  const auto [rho, sigma] = build::orthogonal_half_mixed(d);
  return CaseBuilder("states_separation", "orthogonal maximally mixed halves, d = 4")
      .equal("d_av", 0.5, d_av_states(rho, sigma))
      .equal("d_tr", 1.0, trace_distance(rho, sigma))
      .equal("ratio", 2.0, trace_distance(rho, sigma) / d_av_states(rho, sigma))
      .done();
}

inline ReproductionCase states_dpi_counterexample() {
  CaseBuilder b("states_dpi_counterexample",
                "non-unital channel sending the two half-mixed states to |0> and |1>, d = 4, 6, 8");
  for (Eigen::Index d : {4, 6, 8}) {
    const auto [rho, sigma] = build::orthogonal_half_mixed(d);
    const ChannelChoi ch = build::half_detector_channel(d);
    const double before = d_av_states(rho, sigma);
    const double after = d_av_states(apply_channel(ch, rho), apply_channel(ch, sigma));
    const std::string tag = "_d" + std::to_string(d);
    b.equal("d_av_before" + tag, 1.0 / std::sqrt(static_cast<double>(d)), before)
        .equal("d_av_after" + tag, std::sqrt(0.5), after)
        .greater("after_exceeds_before" + tag, before, after);
  }
  return b.done();
}

inline ReproductionCase povm_swap() {
  const Eigen::Index d = 4;
  const Povm p = povm_computational(d);
  const Povm m = povm_swapped_computational(d);
  return CaseBuilder("povm_swap", "computational basis vs first two outcomes exchanged, d = 4")
      .equal("d_av", std::sqrt(2.0) / 4.0, d_av_povms(p, m))
      .equal("d_op", 1.0, operational_distance(p, m))
      .done();
}

inline ReproductionCase povm_dpi_counterexample() {
  CaseBuilder b("povm_dpi_counterexample",
                "swapped-outcome POVMs preceded by preparation of |0>, d = 3, 4, 8");
  for (Eigen::Index d : {3, 4, 8}) {
    const Povm p = povm_computational(d);
    const Povm m = povm_swapped_computational(d);
    const ChannelChoi prep = build::prep_channel(build::basis_vector(d, 0));
    const double before = d_av_povms(p, m);
    const double after = d_av_povms(povm_preprocess(prep, p), povm_preprocess(prep, m));
    const double dd = static_cast<double>(d);
    const std::string tag = "_d" + std::to_string(d);
    b.equal("d_av_before" + tag, std::sqrt(2.0) / dd, before)
        .equal("d_av_after" + tag, std::sqrt(1.0 + 1.0 / dd), after)
        .greater("after_exceeds_before" + tag, before, after);
  }
  return b.done();
}

inline ReproductionCase channel_separation(Eigen::Index d) {
  const ComplexMatrix a = build::alternating_signs(d);
  const ComplexVector psi = build::basis_vector(d, 0);
  const ChannelChoi lam = max_depolarizing_channel(d);
  const ChannelChoi gam = jamiolkowski_example_channel(a, psi, -1);
  const double dd = static_cast<double>(d);
  const DiamondSolve ds = diamond_distance(lam, gam);
  return CaseBuilder("channel_separation_d" + std::to_string(d),
                     "maximally depolarizing channel vs its rank-deficient perturbation, d = " + std::to_string(d))
      .equal("d_av", std::sqrt(2.0) / (2.0 * std::pow(dd, 1.5)), d_av_channels(lam, gam))
      .equal("d_diamond", 0.5, ds.value)
      .equal("cb_norm", 1.0, ds.cb_norm)
      .done();
}

inline ReproductionCase channel_postprocessing_counterexample() {
  const int n = 2;
  const Eigen::Index d = 4;
  const double dd = static_cast<double>(d);
  const ChannelChoi lam = state_prep_channel(build::first_qubit_with_mixed_rest(n, 0));
  const ChannelChoi gam = state_prep_channel(build::first_qubit_with_mixed_rest(n, 1));
  const ChannelChoi post = build::conditional_prep_channel(n, build::basis_vector(d, 0), build::basis_vector(d, 1));
  const double before = d_av_channels(lam, gam);
  const double after = d_av_channels(compose(post, lam), compose(post, gam));
  return CaseBuilder("channel_postprocessing_counterexample",
                     "preparations of orthogonal first-qubit states followed by a conditional re-preparation, 2 qubits")
      .equal("d_av_before", std::sqrt((1.0 / dd) * (1.0 + 1.0 / dd)), before)
      .equal("d_diamond_before", 1.0, diamond_distance(lam, gam).value)
      .equal("d_av_after", std::sqrt(0.5 * (1.0 + 1.0 / dd)), after)
      .greater("after_exceeds_before", before, after)
      .done();
}

inline ReproductionCase channel_preprocessing_counterexample() {
  CaseBuilder b("channel_preprocessing_counterexample",
                "U = I vs V = diag(1,-1,1,...) preceded by preparation of their optimal discriminator, d = 3, 4");
  for (Eigen::Index d : {3, 4}) {
    const double dd = static_cast<double>(d);
    const ChannelChoi lu = unitary_channel(ComplexMatrix::Identity(d, d));
    const ChannelChoi lv = unitary_channel(build::reflect_second(d));
    ComplexVector psi = build::basis_vector(d, 0) + build::basis_vector(d, 1);
    const ChannelChoi prep = build::prep_channel(psi);
    const double before = d_av_channels(lu, lv);
    const double after = d_av_channels(compose(lu, prep), compose(lv, prep));
    const std::string tag = "_d" + std::to_string(d);
    b.equal("d_av_before" + tag, std::sqrt(2.0 * (dd - 1.0)) / dd, before)
        .equal("d_av_after" + tag, 0.5 * std::sqrt(2.0 / dd + 2.0), after)
        .greater("after_exceeds_before" + tag, before, after);
  }
  return b.done();
}

inline ReproductionCase unitary_channels_formula() {
  CaseBuilder b("unitary_channels_formula", "unitary-pair formula vs Choi evaluation, 100 Haar pairs, d = 2..5");
  for (std::uint64_t i = 0; i < 100; ++i) {
    Stream s({kRegistrySeed, i});
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(i % 4);
    const ComplexMatrix u = sample_haar(d, s);
    const ComplexMatrix v = sample_haar(d, s);
    const nlohmann::json params = {{"u", matrix_to_json(u)}, {"v", matrix_to_json(v)}};
    b.equal("pair_" + std::to_string(i), closed_form("unitary_channels", params).value,
            d_av_channels(unitary_channel(u), unitary_channel(v)));
  }
  const ChannelChoi id = unitary_channel(ComplexMatrix::Identity(2, 2));
  b.equal("identity_vs_z", std::sqrt(0.5), d_av_channels(id, unitary_channel(pauli(3))));
  return b.done();
}

inline ReproductionCase pure_states() {
  CaseBuilder b("pure_states", "pure-state pair formulas for both distances, 20 random pairs, d = 2..6");
  for (std::uint64_t i = 0; i < 20; ++i) {
    Stream s({derive_seed(kRegistrySeed, 1), i});
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(i % 5);
    const ComplexVector a = random_pure_vector(d, s);
    const ComplexVector c = random_pure_vector(d, s);
    const double f = std::norm(a.dot(c));
    const auto cf = closed_form("two_pure_states", {{"overlap", f}});
    const DensityMatrix ra = DensityMatrix::pure(a);
    const DensityMatrix rc = DensityMatrix::pure(c);
    const std::string tag = "_" + std::to_string(i);
    b.equal("d_av" + tag, cf.value, d_av_states(ra, rc)).equal("d_tr" + tag, cf.companion("d_tr"), trace_distance(ra, rc));
  }
  const DensityMatrix z0 = DensityMatrix::basis(2, 0);
  const DensityMatrix z1 = DensityMatrix::basis(2, 1);
  b.equal("orthogonal_qubits_d_av", std::sqrt(0.5), d_av_states(z0, z1));
  b.equal("orthogonal_qubits_d_tr", 1.0, trace_distance(z0, z1));
  return b.done();
}

inline ReproductionCase uniform_states() {
  CaseBuilder b("uniform_states", "noisy pure state vs I/d: purity formula vs direct distance, 20 cases");
  for (std::uint64_t i = 0; i < 20; ++i) {
    Stream s({derive_seed(kRegistrySeed, 2), i});
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(i % 4);
    const ChannelChoi ch = random_channel(d, s, 1 + static_cast<Eigen::Index>(i % 3));
    const DensityMatrix out = apply_channel(ch, random_pure_state(d, s));
    b.equal("case_" + std::to_string(i), uniform_distance(out),
            d_av_states(out, DensityMatrix::maximally_mixed(d)));
  }
  b.equal("pure_qubit", 0.5 * std::sqrt(0.5), d_av_states(DensityMatrix::basis(2, 0), DensityMatrix::maximally_mixed(2)));
  return b.done();
}

inline ReproductionCase uniform_povms() {
  CaseBuilder b("uniform_povms", "d-outcome POVM vs trivial POVM: trace formula vs direct distance, 20 cases");
  for (std::uint64_t i = 0; i < 20; ++i) {
    Stream s({derive_seed(kRegistrySeed, 3), i});
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(i % 4);
    const Povm m = random_povm(d, static_cast<std::size_t>(d), s);
    b.equal("case_" + std::to_string(i), uniform_distance(m), d_av_povms(m, povm_trivial(d, static_cast<std::size_t>(d))));
  }
  b.equal("computational_qubit", 0.5 * std::sqrt(0.5), d_av_povms(povm_computational(2), povm_trivial(2, 2)));
  return b.done();
}

inline ReproductionCase uniform_channels() {
  CaseBuilder b("uniform_channels", "channel vs maximally depolarizing: purity formula vs direct distance, 20 cases");
  for (std::uint64_t i = 0; i < 20; ++i) {
    Stream s({derive_seed(kRegistrySeed, 4), i});
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(i % 3);
    const ChannelChoi ch = random_channel(d, s, 1 + static_cast<Eigen::Index>(i % 3));
    b.equal("case_" + std::to_string(i), uniform_distance(ch), d_av_channels(ch, max_depolarizing_channel(d)));
  }
  b.equal("identity_qubit", 0.5 * std::sqrt(0.75), d_av_channels(identity_channel(2), max_depolarizing_channel(2)));
  return b.done();
}

inline ReproductionCase pauli_eigenstates() {
  const std::vector<std::vector<double>> p = {{0.7, 0.1, 0.15, 0.05}, {0.8, 0.05, 0.1, 0.05}, {0.6, 0.2, 0.1, 0.1}};
  const std::string axes = "xyz";
  const std::vector<int> signs = {1, -1, 1};
  std::vector<ComplexMatrix> factors;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const ComplexVector v = build::pauli_eigenvector(axes[i], signs[i]);
    factors.push_back(v * v.adjoint());
  }
  const DensityMatrix psi = DensityMatrix::from_matrix(build::kron_all(factors));
  const ChannelChoi noise = pauli_product_channel(p);
  const DensityMatrix noisy = apply_channel(noise, psi);
  const nlohmann::json params = {{"p", p}, {"axes", {"x", "y", "z"}}};
  return CaseBuilder("pauli_eigenstates", "separable Pauli noise on a product of Pauli eigenstates, 3 qubits")
      .equal("vs_uniform", closed_form("pauli_eigenstate_uniform", params).value,
             d_av_states(noisy, DensityMatrix::maximally_mixed(8)))
      .equal("vs_ideal", closed_form("pauli_eigenstate_vs_ideal", params).value, d_av_states(noisy, psi))
      .done();
}

inline ReproductionCase bitflip_povm() {
  CaseBuilder b("bitflip_povm", "local symmetric bitflip readout noise vs ideal and trivial POVMs");
  const std::vector<std::vector<double>> rates = {{0.1, 0.1}, {0.05, 0.2, 0.1}, {0.3}};
  for (std::size_t k = 0; k < rates.size(); ++k) {
    const auto& p = rates[k];
    const Povm noisy = povm_from_stochastic(build::symmetric_bitflips(p));
    const Eigen::Index d = noisy.dim();
    const Povm ideal = povm_computational(d);
    const nlohmann::json params = {{"p", p}};
    const std::string tag = "_" + std::to_string(k);
    b.equal("d_av" + tag, closed_form("bitflip_povm_av", params).value, d_av_povms(noisy, ideal))
        .equal("d_op" + tag, closed_form("bitflip_povm_op", params).value, operational_distance(noisy, ideal))
        .equal("vs_trivial" + tag, closed_form("bitflip_povm_uniform", params).value,
               d_av_povms(noisy, povm_trivial(d, static_cast<std::size_t>(d))));
  }
  return b.done();
}

inline ReproductionCase pauli_channel() {
  CaseBuilder b("pauli_channel", "separable Pauli channels vs maximally depolarizing and identity");
  const std::vector<std::vector<std::vector<double>>> sets = {
      {{0.9, 0.1, 0.0, 0.0}}, {{0.85, 0.05, 0.07, 0.03}, {0.7, 0.1, 0.1, 0.1}}};
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const ChannelChoi ch = pauli_product_channel(sets[k]);
    const Eigen::Index d = ch.dim();
    const nlohmann::json params = {{"p", sets[k]}};
    const std::string tag = "_" + std::to_string(k);
    b.equal("vs_depolarizing" + tag, closed_form("pauli_channel_uniform", params).value,
            d_av_channels(ch, max_depolarizing_channel(d)))
        .equal("vs_identity" + tag, closed_form("pauli_channel_vs_identity", params).value,
               d_av_channels(ch, identity_channel(d)));
  }
  return b.done();
}

inline ReproductionCase state_prep_channels() {
  CaseBuilder b("state_prep_channels", "constant channels: sqrt(1 + 1/d) times the state distance, 20 random pairs");
  for (std::uint64_t i = 0; i < 20; ++i) {
    Stream s({derive_seed(kRegistrySeed, 5), i});
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(i % 3);
    const DensityMatrix rho = random_state(d, s);
    const DensityMatrix sigma = random_state(d, s);
    const nlohmann::json params = {{"rho", matrix_to_json(rho.mat())}, {"sigma", matrix_to_json(sigma.mat())}};
    b.equal("case_" + std::to_string(i), closed_form("state_prep_channels", params).value,
            d_av_channels(state_prep_channel(rho), state_prep_channel(sigma)));
  }
  return b.done();
}

inline ReproductionCase separable_rotations() {
  const std::vector<double> phi = {0.3, 0.5};
  const std::vector<std::array<double, 3>> axes = {{0.0, 0.6, 0.8}, {1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0)}};
  const ComplexMatrix v = tensor(build::qubit_rotation(axes[0], phi[0]), build::qubit_rotation(axes[1], phi[1]));
  const ChannelChoi id = identity_channel(4);
  const ChannelChoi rot = unitary_channel(v);
  const auto cf = closed_form("separable_rotation_bounds", {{"phi", phi}});
  const double av = d_av_channels(id, rot);
  const DiamondSolve ds = diamond_distance(id, rot);
  return CaseBuilder("separable_rotations", "identity vs a product of two single-qubit rotations")
      .equal("d_av", cf.value, av)
      .equal("d_diamond", cf.companion("d_diamond"), ds.value)
      .equal("d_diamond_analytic", cf.companion("d_diamond"), unitary_diamond_distance(ComplexMatrix::Identity(4, 4), v))
      .greater("d_av_upper_bound_holds", av, cf.companion("d_av_upper_bound"))
      .greater("cb_norm_lower_bound_holds", cf.companion("cb_norm_lower_bound"), ds.cb_norm)
      .done();
}

inline ReproductionCase classical_distance() {
  CaseBuilder b("classical_distance", "stochastic readout noise: classical distance equals 1 - tr(T)/d, 10 cases");
  for (std::uint64_t i = 0; i < 10; ++i) {
    Stream s({derive_seed(kRegistrySeed, 6), i});
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(i % 4);
    const StochasticMap t = random_stochastic(d, s);
    b.equal("case_" + std::to_string(i), 1.0 - t.matrix().trace() / static_cast<double>(d),
            d_av_classical(povm_from_stochastic(t), povm_computational(d)));
  }
  b.equal("bitflip_qubit", 0.1,
          d_av_classical(povm_from_stochastic(StochasticMap::symmetric_bitflip(0.1)), povm_computational(2)));
  return b.done();
}

inline ReproductionCase asym_bitflip() {
  const std::vector<double> p10 = {0.02, 0.1};
  const std::vector<double> p01 = {0.08, 0.04};
  const auto cf = closed_form("asym_bitflip_symmetrized", {{"p10", p10}, {"p01", p01}});
  std::vector<double> q;
  for (std::size_t i = 0; i < p10.size(); ++i) q.push_back(cf.companion("q_av_" + std::to_string(i)));
  const Povm asym = povm_from_stochastic(build::asymmetric_bitflips(p10, p01));
  const Povm sym = povm_from_stochastic(build::symmetric_bitflips(q));
  const Povm ideal = povm_computational(4);
  const Povm trivial = povm_trivial(4, 4);
  return CaseBuilder("asym_bitflip", "asymmetric bitflip vs its symmetrized version, 2 qubits")
      .equal("symmetrized_d_av", cf.value, d_av_povms(sym, ideal))
      .equal("symmetrized_vs_trivial", cf.companion("d_av_uniform"), d_av_povms(sym, trivial))
      .greater("asymmetric_not_closer", d_av_povms(sym, ideal) - kStrictMargin, d_av_povms(asym, ideal))
      .greater("asymmetric_not_closer_to_trivial", d_av_povms(sym, trivial) - kStrictMargin, d_av_povms(asym, trivial))
      .done();
}

using CaseFn = std::function<ReproductionCase()>;

inline const std::vector<std::pair<std::string, CaseFn>>& registry() {
  static const std::vector<std::pair<std::string, CaseFn>> table = {
      {"states_separation", states_separation},
      {"states_dpi_counterexample", states_dpi_counterexample},
      {"povm_swap", povm_swap},
      {"povm_dpi_counterexample", povm_dpi_counterexample},
      {"channel_separation_d2", [] { return channel_separation(2); }},
      {"channel_separation_d4", [] { return channel_separation(4); }},
      {"channel_postprocessing_counterexample", channel_postprocessing_counterexample},
      {"channel_preprocessing_counterexample", channel_preprocessing_counterexample},
      {"unitary_channels_formula", unitary_channels_formula},
      {"pure_states", pure_states},
      {"uniform_states", uniform_states},
      {"uniform_povms", uniform_povms},
      {"uniform_channels", uniform_channels},
      {"pauli_eigenstates", pauli_eigenstates},
      {"bitflip_povm", bitflip_povm},
      {"pauli_channel", pauli_channel},
      {"state_prep_channels", state_prep_channels},
      {"separable_rotations", separable_rotations},
      {"classical_distance", classical_distance},
      {"asym_bitflip", asym_bitflip},
  };
  return table;
}

}  // namespace repro

inline std::vector<std::string> reproduction_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : repro::registry()) out.push_back(name);
  return out;
}

/// Runs one named case, or every case for "all".
inline std::vector<ReproductionCase> reproduce(const std::string& name) {
  std::vector<ReproductionCase> out;
  for (const auto& [n, fn] : repro::registry())
    if (name == "all" || name == n) out.push_back(fn());
  if (out.empty()) throw Error(Errc::UnknownCase, "no reproduction case named '" + name + "'");
  return out;
}

inline nlohmann::json to_json(const ReproductionCase& c) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& v : c.checks)
    checks.push_back({{"label", v.label},
                      {"relation", v.relation == ValueCheck::Relation::Equal ? "equal" : "greater"},
                      {"expected", v.expected},
                      {"computed", v.computed},
                      {"tol", v.tol},
                      {"passed", v.passed}});
  return {{"name", c.name}, {"description", c.description}, {"checks", checks}, {"passed", c.passed}};
}

// ---------------------------------------------------------------------------
// Property suites

inline constexpr double kPropertySlack = 1e-9;

struct CheckRow {
  std::string suite;
  std::string check;
  Eigen::Index d = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<CheckRow> rows;
  std::vector<nlohmann::json> violations;

  std::size_t violation_count() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.holds ? 0 : 1;
    return n;
  }
};

inline constexpr const char* kPropcheckHeader = "# avdist-propcheck v1";

inline void write_csv(std::ostream& os, const SuiteReport& rep) {
  os << kPropcheckHeader << "\n" << "suite,check,d,trial,seed,lhs,rhs,holds\n";
  os.precision(17);
  for (const auto& r : rep.rows)
    os << r.suite << ',' << r.check << ',' << r.d << ',' << r.trial << ',' << r.seed << ',' << r.lhs << ','
       << r.rhs << ',' << (r.holds ? 1 : 0) << '\n';
}

namespace suites {

struct Trial {
  std::vector<CheckRow> rows;
  nlohmann::json objects;
};

class TrialBuilder {
 public:
  TrialBuilder(std::string suite, std::size_t trial, std::uint64_t seed)
      : suite_(std::move(suite)), trial_(trial), seed_(seed) {}

  /// lhs <= rhs + slack.
  void le(const std::string& check, Eigen::Index d, double lhs, double rhs, double slack = kPropertySlack) {
    t_.rows.push_back({suite_, check, d, trial_, seed_, lhs, rhs, lhs <= rhs + slack});
  }
  /// |lhs - rhs| <= tol.
  void eq(const std::string& check, Eigen::Index d, double lhs, double rhs, double tol) {
    t_.rows.push_back({suite_, check, d, trial_, seed_, lhs, rhs, std::abs(lhs - rhs) <= tol});
  }
  /// lhs > rhs + margin.
  void gt(const std::string& check, Eigen::Index d, double lhs, double rhs, double margin) {
    t_.rows.push_back({suite_, check, d, trial_, seed_, lhs, rhs, lhs > rhs + margin});
  }
  bool all_hold() const {
    for (const auto& r : t_.rows)
      if (!r.holds) return false;
    return true;
  }
  void attach(const std::string& key, nlohmann::json j) { t_.objects[key] = std::move(j); }
  Trial done() { return std::move(t_); }

 private:
  std::string suite_;
  std::size_t trial_;
  std::uint64_t seed_;
  Trial t_;
};

inline Eigen::Index pick(std::size_t trial, Eigen::Index lo, Eigen::Index hi) {
  return lo + static_cast<Eigen::Index>(trial % static_cast<std::size_t>(hi - lo + 1));
}

inline double channel_d(const ChannelChoi& a, const ChannelChoi& b) { return d_av_channels(a, b); }

inline Trial metric_trial(TrialBuilder tb, Stream& s, std::size_t trial) {
  {
    const Eigen::Index d = pick(trial, 2, 8);
    const auto a = random_state(d, s), b = random_state(d, s), c = random_state(d, s);
    tb.eq("state_symmetry", d, d_av_states(a, b), d_av_states(b, a), 0.0);
    tb.le("state_triangle", d, d_av_states(a, c), d_av_states(a, b) + d_av_states(b, c));
    tb.eq("state_self_zero", d, d_av_states(a, a), 0.0, 0.0);
    tb.gt("state_distinct_positive", d, d_av_states(a, b), 0.0, 0.0);
    if (!tb.all_hold()) tb.attach("states", {to_json(a), to_json(b), to_json(c)});
  }
  {
    const Eigen::Index d = pick(trial, 2, 5);
    const std::size_t n = static_cast<std::size_t>(pick(trial / 4, 2, 4));
    const auto a = random_povm(d, n, s), b = random_povm(d, n, s), c = random_povm(d, n, s);
    tb.eq("povm_symmetry", d, d_av_povms(a, b), d_av_povms(b, a), 0.0);
    tb.le("povm_triangle", d, d_av_povms(a, c), d_av_povms(a, b) + d_av_povms(b, c));
    tb.eq("povm_self_zero", d, d_av_povms(a, a), 0.0, 0.0);
    tb.gt("povm_distinct_positive", d, d_av_povms(a, b), 0.0, 0.0);
    if (!tb.all_hold()) tb.attach("povms", {to_json(a), to_json(b), to_json(c)});
  }
  {
    const Eigen::Index d = pick(trial, 2, 3);
    const auto a = random_channel(d, s), b = random_channel(d, s), c = random_channel(d, s);
    tb.eq("channel_symmetry", d, channel_d(a, b), channel_d(b, a), 0.0);
    tb.le("channel_triangle", d, channel_d(a, c), channel_d(a, b) + channel_d(b, c));
    tb.eq("channel_self_zero", d, channel_d(a, a), 0.0, 0.0);
    tb.gt("channel_distinct_positive", d, channel_d(a, b), 0.0, 0.0);
    if (!tb.all_hold()) tb.attach("channels", {to_json(a), to_json(b), to_json(c)});
  }
  return tb.done();
}

inline Trial subadditivity_trial(TrialBuilder tb, Stream& s, std::size_t trial) {
  {
    const Eigen::Index d1 = pick(trial, 2, 4), d2 = pick(trial / 3, 2, 3);
    const auto a1 = random_state(d1, s), b1 = random_state(d1, s);
    const auto a2 = random_state(d2, s), b2 = random_state(d2, s);
    const auto ta = DensityMatrix::from_matrix(tensor(a1.mat(), a2.mat()));
    const auto tbm = DensityMatrix::from_matrix(tensor(b1.mat(), b2.mat()));
    tb.le("state_subadditive", d1 * d2, d_av_states(ta, tbm), d_av_states(a1, b1) + d_av_states(a2, b2));
    if (!tb.all_hold()) tb.attach("states", {to_json(a1), to_json(b1), to_json(a2), to_json(b2)});
  }
  {
    const Eigen::Index d1 = pick(trial, 2, 3), d2 = pick(trial / 2, 2, 3);
    const auto m1 = random_povm(d1, 2, s), n1 = random_povm(d1, 2, s);
    const auto m2 = random_povm(d2, 3, s), n2 = random_povm(d2, 3, s);
    tb.le("povm_subadditive", d1 * d2, d_av_povms(povm_tensor(m1, m2), povm_tensor(n1, n2)),
          d_av_povms(m1, n1) + d_av_povms(m2, n2));
    if (!tb.all_hold()) tb.attach("povms", {to_json(m1), to_json(n1), to_json(m2), to_json(n2)});
  }
  {
    const Eigen::Index d1 = 2, d2 = pick(trial, 2, 3);
    const auto l1 = random_channel(d1, s), g1 = random_channel(d1, s);
    const auto l2 = random_channel(d2, s), g2 = random_channel(d2, s);
    tb.le("channel_subadditive", d1 * d2, channel_d(channel_tensor(l1, l2), channel_tensor(g1, g2)),
          channel_d(l1, g1) + channel_d(l2, g2));
    if (!tb.all_hold()) tb.attach("channels", {to_json(l1), to_json(g1), to_json(l2), to_json(g2)});
  }
  return tb.done();
}

inline Trial convexity_trial(TrialBuilder tb, Stream& s, std::size_t trial) {
  const auto w = random_probability_vector(3, s);
  {
    const Eigen::Index d = pick(trial, 2, 6);
    ComplexMatrix ma = ComplexMatrix::Zero(d, d), mb = ComplexMatrix::Zero(d, d);
    double rhs = 0.0;
    for (int k = 0; k < 3; ++k) {
      const auto a = random_state(d, s), b = random_state(d, s);
      ma += w[static_cast<std::size_t>(k)] * a.mat();
      mb += w[static_cast<std::size_t>(k)] * b.mat();
      rhs += w[static_cast<std::size_t>(k)] * d_av_states(a, b);
    }
    tb.le("state_joint_convexity", d,
          d_av_states(DensityMatrix::from_matrix(ma), DensityMatrix::from_matrix(mb)), rhs);
  }
  {
    const Eigen::Index d = pick(trial, 2, 4);
    std::vector<Povm> as, bs;
    double rhs = 0.0;
    for (int k = 0; k < 3; ++k) {
      as.push_back(random_povm(d, 3, s));
      bs.push_back(random_povm(d, 3, s));
      rhs += w[static_cast<std::size_t>(k)] * d_av_povms(as.back(), bs.back());
    }
    tb.le("povm_joint_convexity", d, d_av_povms(povm_mix(w, as), povm_mix(w, bs)), rhs);
  }
  {
    const Eigen::Index d = pick(trial, 2, 3);
    std::vector<ChannelChoi> as, bs;
    double rhs = 0.0;
    for (int k = 0; k < 3; ++k) {
      as.push_back(random_channel(d, s));
      bs.push_back(random_channel(d, s));
      rhs += w[static_cast<std::size_t>(k)] * channel_d(as.back(), bs.back());
    }
    tb.le("channel_joint_convexity", d, channel_d(channel_mix(w, as), channel_mix(w, bs)), rhs);
  }
  return tb.done();
}

inline Trial dpi_trial(TrialBuilder tb, Stream& s, std::size_t trial) {
  {
    const Eigen::Index d = pick(trial, 2, 6);
    const auto phi = random_mixed_unitary(d, 3, s);
    const auto a = random_state(d, s), b = random_state(d, s);
    tb.le("state_unital_dpi", d, d_av_states(apply_channel(phi, a), apply_channel(phi, b)), d_av_states(a, b));
    if (!tb.all_hold()) tb.attach("state_case", {to_json(phi), to_json(a), to_json(b)});
  }
  {
    const Eigen::Index d = pick(trial, 2, 4);
    const std::size_t n = 3;
    const auto phi = random_mixed_unitary(d, 3, s);
    const auto t = random_stochastic(static_cast<Eigen::Index>(n), s);
    const auto m = random_povm(d, n, s), nn = random_povm(d, n, s);
    const double base = d_av_povms(m, nn);
    tb.le("povm_unital_preprocessing", d, d_av_povms(povm_preprocess(phi, m), povm_preprocess(phi, nn)), base);
    tb.le("povm_postprocessing", d, d_av_povms(povm_postprocess(t, m), povm_postprocess(t, nn)), base);
    tb.le("povm_pre_and_post", d,
          d_av_povms(povm_postprocess(t, povm_preprocess(phi, m)), povm_postprocess(t, povm_preprocess(phi, nn))), base);
  }
  {
    const Eigen::Index d = pick(trial, 2, 3);
    const auto po = random_mixed_unitary(d, 3, s), pi = random_mixed_unitary(d, 3, s);
    const auto l = random_channel(d, s), g = random_channel(d, s);
    const double base = channel_d(l, g);
    tb.le("channel_unital_postprocessing", d, channel_d(compose(po, l), compose(po, g)), base);
    tb.le("channel_unital_preprocessing", d, channel_d(compose(l, pi), compose(g, pi)), base);
    tb.le("channel_unital_both", d, channel_d(compose(po, compose(l, pi)), compose(po, compose(g, pi))), base);
  }
  return tb.done();
}

inline Trial stability_trial(TrialBuilder tb, Stream& s, std::size_t trial) {
  const Eigen::Index d = pick(trial, 2, 3);
  const Eigen::Index anc = pick(trial / 2, 2, 3);
  const auto l = random_mixed_unitary(d, 3, s), g = random_mixed_unitary(d, 3, s);
  const auto id = identity_channel(anc);
  tb.eq("unital_stability", d, channel_d(channel_tensor(l, id), channel_tensor(g, id)), channel_d(l, g),
        kPropertySlack);
  return tb.done();
}

inline Trial chaining_trial(TrialBuilder tb, Stream& s, std::size_t trial) {
  const Eigen::Index d = pick(trial, 2, 3);
  const auto l1 = random_mixed_unitary(d, 3, s), l2 = random_mixed_unitary(d, 3, s);
  const auto g1 = random_mixed_unitary(d, 3, s), g2 = random_mixed_unitary(d, 3, s);
  tb.le("unital_chaining", d, channel_d(compose(l1, l2), compose(g1, g2)), channel_d(l1, g1) + channel_d(l2, g2));
  return tb.done();
}

inline Trial inequalities_trial(TrialBuilder tb, Stream& s, std::size_t trial) {
  const Eigen::Index d = pick(trial, 2, 3);
  const ComplexMatrix x = random_hermitian(d, s);
  const ComplexMatrix y = random_hermitian(d, s);
  const auto single = projector_inequality_check(x);
  const auto pair = projector_inequality_check(x, y);
  const auto same = projector_inequality_check(x, x);
  tb.le("fourth_moment", d, single.lhs, single.rhs, 1e-10);
  tb.le("mixed_fourth_moment", d, pair.lhs, pair.rhs, 1e-10);
  tb.le("constant_ordering", d, single.rhs * (kMixedMomentConstant / kFourthMomentConstant), same.rhs, 1e-10);
  if (!tb.all_hold()) tb.attach("operators", {matrix_to_json(x), matrix_to_json(y)});
  return tb.done();
}

inline Trial separations_trial(TrialBuilder tb, Stream& s, std::size_t trial, std::uint64_t seed) {
  {
    const Eigen::Index d = pick(trial, 2, 8);
    const auto a = random_state(d, s), b = random_state(d, s);
    const auto r = separation_report(a, b);
    tb.le("state_upper", d, r.d_worst, r.bound * r.d_av * (1.0 + 1e-6), 0.0);
    tb.le("state_lower", d, r.lower_constant * r.d_av, r.d_worst, kPropertySlack);
  }
  {
    const Eigen::Index d = pick(trial, 2, 6);
    const auto a = random_povm(d, static_cast<std::size_t>(d), s), b = random_povm(d, static_cast<std::size_t>(d), s);
    const auto r = separation_report(a, b);
    tb.le("povm_upper", d, r.d_worst, r.bound * r.d_av * (1.0 + 1e-6), 0.0);
    tb.le("povm_lower", d, r.lower_constant * r.d_av, r.d_worst, kPropertySlack);
  }
  {
    const Eigen::Index d = pick(trial, 2, 3);
    const auto a = random_channel(d, s), b = random_channel(d, s);
    DiamondConfig cfg;
    cfg.seed = derive_seed(seed, trial);
    const auto ds = diamond_distance(a, b, cfg);
    const double av = d_av_channels(a, b);
    const double bound = std::pow(static_cast<double>(d), 1.5);
    tb.le("channel_upper", d, ds.value, bound * av * (1.0 + 1e-6), 0.0);
    tb.le("channel_lower", d, 0.087 * av, ds.upper_bound, kPropertySlack);
    tb.le("channel_bracket_low", d, ds.lower_bound, ds.value, 1e-8);
    tb.le("channel_bracket_high", d, ds.value, ds.upper_bound, 1e-8);
    if (!tb.all_hold()) tb.attach("channels", {to_json(a), to_json(b)});
  }
  return tb.done();
}

inline Trial classical_trial(TrialBuilder tb, Stream& s, std::size_t trial) {
  {
    const Eigen::Index d = pick(trial, 2, 5);
    const Povm m = random_povm(d, static_cast<std::size_t>(d), s);
    const Povm p = povm_computational(d);
    tb.le("classical_part_lower_bound", d, 0.5 * d_av_classical(povm_diagonal_part(m), p), d_av_povms(m, p));
    tb.le("classical_part_closer", d, d_av_povms(povm_diagonal_part(m), p), d_av_povms(m, p));
  }
  {
    const std::size_t n = static_cast<std::size_t>(pick(trial, 1, 3));
    std::vector<double> p10, p01, q;
    for (std::size_t i = 0; i < n; ++i) {
      p10.push_back(0.5 * s.uniform());
      p01.push_back(0.5 * s.uniform());
      q.push_back(0.5 * (p10.back() + p01.back()));
    }
    const Povm asym = povm_from_stochastic(build::asymmetric_bitflips(p10, p01));
    const Povm sym = povm_from_stochastic(build::symmetric_bitflips(q));
    const Eigen::Index d = asym.dim();
    const Povm ideal = povm_computational(d);
    const Povm trivial = povm_trivial(d, static_cast<std::size_t>(d));
    tb.le("symmetrized_bitflip_vs_ideal", d, d_av_povms(sym, ideal), d_av_povms(asym, ideal));
    tb.le("symmetrized_bitflip_vs_trivial", d, d_av_povms(sym, trivial), d_av_povms(asym, trivial));
  }
  return tb.done();
}

/// The four data-processing counterexamples; each must violate monotonicity
/// by more than the strict margin. Independent of the trial stream.
inline std::vector<Trial> counterexamples(const std::string& suite, std::uint64_t seed) {
  std::vector<Trial> out;
  std::size_t trial = 0;
  for (Eigen::Index d : {4, 6, 8}) {
    TrialBuilder tb(suite, trial++, seed);
    const auto [rho, sigma] = build::orthogonal_half_mixed(d);
    const ChannelChoi ch = build::half_detector_channel(d);
    tb.gt("state_nonunital_dpi_violation", d, d_av_states(apply_channel(ch, rho), apply_channel(ch, sigma)),
          d_av_states(rho, sigma), kStrictMargin);
    out.push_back(tb.done());
  }
  for (Eigen::Index d : {3, 4, 8}) {
    TrialBuilder tb(suite, trial++, seed);
    const Povm p = povm_computational(d);
    const Povm m = povm_swapped_computational(d);
    const ChannelChoi prep = build::prep_channel(build::basis_vector(d, 0));
    tb.gt("povm_nonunital_preprocessing_violation", d, d_av_povms(povm_preprocess(prep, p), povm_preprocess(prep, m)),
          d_av_povms(p, m), kStrictMargin);
    out.push_back(tb.done());
  }
  for (int n : {2, 3}) {
    TrialBuilder tb(suite, trial++, seed);
    const Eigen::Index d = Eigen::Index{1} << n;
    const ChannelChoi lam = state_prep_channel(build::first_qubit_with_mixed_rest(n, 0));
    const ChannelChoi gam = state_prep_channel(build::first_qubit_with_mixed_rest(n, 1));
    const ChannelChoi post =
        build::conditional_prep_channel(n, build::basis_vector(d, 0), build::basis_vector(d, 1));
    tb.gt("channel_postprocessing_violation", d, channel_d(compose(post, lam), compose(post, gam)),
          channel_d(lam, gam), kStrictMargin);
    out.push_back(tb.done());
  }
  for (Eigen::Index d : {3, 4, 6}) {
    TrialBuilder tb(suite, trial++, seed);
    const ChannelChoi lu = identity_channel(d);
    const ChannelChoi lv = unitary_channel(build::reflect_second(d));
    const ChannelChoi prep = build::prep_channel(build::basis_vector(d, 0) + build::basis_vector(d, 1));
    tb.gt("channel_preprocessing_violation", d, channel_d(compose(lu, prep), compose(lv, prep)), channel_d(lu, lv),
          kStrictMargin);
    out.push_back(tb.done());
  }
  return out;
}

inline std::uint64_t suite_tag(const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
  return h;
}

}  // namespace suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"metric",       "subadditivity", "convexity",
                                                 "dpi",          "stability",     "chaining",
                                                 "inequalities", "separations",   "classical",
                                                 "counterexamples"};
  return names;
}

/// Runs a randomized property sweep. Trial i draws its objects from stream
/// (derive_seed(seed, suite), i); rows are assembled in trial order.
inline SuiteReport run_property_suite(const std::string& suite, std::size_t trials, std::uint64_t seed,
                                      unsigned workers = 1) {
  if (trials < 1) throw Error(Errc::InvalidArgument, "trials must be >= 1");
  using suites::Trial;
  using suites::TrialBuilder;
  std::function<Trial(TrialBuilder, Stream&, std::size_t)> body;
  if (suite == "metric") body = suites::metric_trial;
  else if (suite == "subadditivity") body = suites::subadditivity_trial;
  else if (suite == "convexity") body = suites::convexity_trial;
  else if (suite == "dpi") body = suites::dpi_trial;
  else if (suite == "stability") body = suites::stability_trial;
  else if (suite == "chaining") body = suites::chaining_trial;
  else if (suite == "inequalities") body = suites::inequalities_trial;
  else if (suite == "classical") body = suites::classical_trial;
  else if (suite == "separations")
    body = [seed](TrialBuilder tb, Stream& s, std::size_t t) { return suites::separations_trial(std::move(tb), s, t, seed); };
  else if (suite != "counterexamples")
    throw Error(Errc::UnknownCase, "no property suite named '" + suite + "'");

  SuiteReport rep;
  rep.suite = suite;
  rep.seed = seed;
  std::vector<Trial> results;
  if (suite == "counterexamples") {
    results = suites::counterexamples(suite, seed);
  } else {
    const std::uint64_t base = derive_seed(seed, suites::suite_tag(suite));
    results.resize(trials);
    parallel_for(trials, workers, [&](std::size_t i) {
      Stream s({base, i});
      results[i] = body(TrialBuilder(suite, i, seed), s, i);
    });
  }
  rep.trials = results.size();
  for (auto& t : results) {
    bool ok = true;
    for (auto& r : t.rows) {
      ok = ok && r.holds;
      rep.rows.push_back(std::move(r));
    }
    if (!ok) {
      nlohmann::json v = {{"suite", suite}, {"seed", seed}, {"trial", rep.rows.back().trial}, {"failed", nlohmann::json::array()}};
      for (const auto& r : rep.rows)
        if (!r.holds && r.trial == rep.rows.back().trial)
          v["failed"].push_back({{"check", r.check}, {"d", r.d}, {"lhs", r.lhs}, {"rhs", r.rhs}});
      v["objects"] = t.objects.is_null() ? nlohmann::json::object() : t.objects;
      rep.violations.push_back(std::move(v));
    }
  }
  return rep;
}

}  // namespace avdist

#endif  // AVDIST_HARNESS_HPP
