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

// Closed-form distances for named families of objects. These evaluate the
// formulas directly and never build the objects.

#ifndef AVDIST_CLOSED_FORM_HPP
#define AVDIST_CLOSED_FORM_HPP

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "avdist/io.hpp"
#include "avdist/worst.hpp"

namespace avdist {

struct ClosedFormResult {
  std::string name;
  nlohmann::json params;
  double value = 0.0;
  std::vector<std::pair<std::string, double>> companions;

  double companion(const std::string& key) const {
    for (const auto& [k, v] : companions)
      if (k == key) return v;
    throw Error(Errc::InvalidArgument, "no companion value '" + key + "'");
  }
};

namespace cf {

inline std::vector<double> number_list(const nlohmann::json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_array() || params[key].empty())
    throw Error(Errc::InvalidArgument, std::string("parameter '") + key + "' must be a non-empty array");
  std::vector<double> out;
  for (const auto& x : params[key]) {
    if (!x.is_number()) throw Error(Errc::InvalidArgument, std::string("'") + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

inline double number(const nlohmann::json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number())
    throw Error(Errc::InvalidArgument, std::string("parameter '") + key + "' must be a number");
  return params[key].get<double>();
}

inline void require(bool ok, const std::string& condition) {
  if (!ok) throw Error(Errc::OutOfValidityRegion, "requires " + condition);
}

inline double product(const std::vector<double>& xs, const std::function<double(double)>& f) {
  double r = 1.0;
  for (double x : xs) r *= f(x);
  return r;
}

inline double qubit_dim(std::size_t n) { return std::pow(2.0, static_cast<double>(n)); }

inline void require_unit_interval(const std::vector<double>& xs, const char* name) {
  for (double x : xs) require(x >= 0.0 && x <= 1.0, std::string(name) + " in [0, 1], got " + detail::num(x));
}

/// Stabilizing probabilities q_i, either given directly or from Pauli
/// probabilities (p_I, p_X, p_Y, p_Z) and the eigenstate axis of each qubit.
inline std::vector<double> stabilizer_probabilities(const nlohmann::json& params) {
  std::vector<double> q;
  if (params.contains("q")) {
    q = number_list(params, "q");
  } else {
    if (!params.contains("p") || !params.contains("axes"))
      throw Error(Errc::InvalidArgument, "give either 'q' or both 'p' and 'axes'");
    const auto& p = params["p"];
    const auto& axes = params["axes"];
    if (!p.is_array() || !axes.is_array() || p.size() != axes.size() || p.empty())
      throw Error(Errc::InvalidArgument, "'p' and 'axes' must be arrays of equal length");
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto probs = p[i].get<std::vector<double>>();
      require_probability_vector(probs, 4);
      const std::string axis = axes[i].get<std::string>();
      int which = 0;
      if (axis == "x") which = 1;
      else if (axis == "y") which = 2;
      else if (axis == "z") which = 3;
      else throw Error(Errc::InvalidArgument, "axis must be x, y or z");
      q.push_back(probs[0] + probs[static_cast<std::size_t>(which)]);
    }
  }
  for (double x : q) require(x >= 0.5 && x <= 1.0 + 1e-12, "every stabilizing probability q >= 1/2, got " + detail::num(x));
  return q;
}

inline std::vector<std::vector<double>> pauli_probabilities(const nlohmann::json& params) {
  if (!params.contains("p") || !params["p"].is_array() || params["p"].empty())
    throw Error(Errc::InvalidArgument, "parameter 'p' must be a non-empty array of 4-vectors");
  std::vector<std::vector<double>> out;
  for (const auto& row : params["p"]) {
    out.push_back(row.get<std::vector<double>>());
    require_probability_vector(out.back(), 4);
  }
  return out;
}

inline double bitflip_av(const std::vector<double>& p) {
  const double diag = product(p, [](double x) { return 1.0 - x; });
  const double row = product(p, [](double x) { return 1.0 - 2.0 * x * (1.0 - x); });
  return 0.5 * std::sqrt(std::max(0.0, 1.0 - 2.0 * diag + row));
}

inline double bitflip_op(const std::vector<double>& p) {
  return 1.0 - product(p, [](double x) { return 1.0 - x; });
}

inline double bitflip_uniform(const std::vector<double>& p) {
  const double row = product(p, [](double x) { return 1.0 - 2.0 * x * (1.0 - x); });
  return 0.5 * std::sqrt(std::max(0.0, row - 1.0 / qubit_dim(p.size())));
}

using Formula = std::function<ClosedFormResult(const nlohmann::json&)>;

inline const std::map<std::string, Formula>& catalog() {
  static const std::map<std::string, Formula> table = {
      {"two_pure_states",
       [](const nlohmann::json& params) {
         const double f = number(params, "overlap");
         require(f >= 0.0 && f <= 1.0, "overlap tr(psi phi) in [0, 1]");
         ClosedFormResult r;
         r.value = std::sqrt(0.5 * (1.0 - f));
         r.companions = {{"d_tr", std::sqrt(1.0 - f)}};
         return r;
       }},
      {"pauli_eigenstate_uniform",
       [](const nlohmann::json& params) {
         const auto q = stabilizer_probabilities(params);
         const double purity = product(q, [](double x) { return 1.0 - 2.0 * x * (1.0 - x); });
         ClosedFormResult r;
         r.value = 0.5 * std::sqrt(std::max(0.0, purity - 1.0 / qubit_dim(q.size())));
         return r;
       }},
      {"pauli_eigenstate_vs_ideal",
       [](const nlohmann::json& params) {
         const auto q = stabilizer_probabilities(params);
         const double purity = product(q, [](double x) { return 1.0 - 2.0 * x * (1.0 - x); });
         const double overlap = product(q, [](double x) { return x; });
         ClosedFormResult r;
         r.value = 0.5 * std::sqrt(std::max(0.0, 1.0 - 2.0 * overlap + purity));
         return r;
       }},
      {"bitflip_povm_av",
       [](const nlohmann::json& params) {
         const auto p = number_list(params, "p");
         require_unit_interval(p, "bitflip probability");
         ClosedFormResult r;
         r.value = bitflip_av(p);
         r.companions = {{"d_op", bitflip_op(p)}};
         return r;
       }},
      {"bitflip_povm_op",
       [](const nlohmann::json& params) {
         const auto p = number_list(params, "p");
         require_unit_interval(p, "bitflip probability");
         ClosedFormResult r;
         r.value = bitflip_op(p);
         r.companions = {{"d_av", bitflip_av(p)}};
         return r;
       }},
      {"bitflip_povm_uniform",
       [](const nlohmann::json& params) {
         const auto p = number_list(params, "p");
         require_unit_interval(p, "bitflip probability");
         ClosedFormResult r;
         r.value = bitflip_uniform(p);
         return r;
       }},
      {"unitary_channels",
       [](const nlohmann::json& params) {
         double d = 0.0;
         double t = 0.0;
         ClosedFormResult r;
         if (params.contains("u")) {
           const ComplexMatrix u = matrix_from_json(params.at("u"));
           const ComplexMatrix v = matrix_from_json(params.at("v"));
           if (!is_unitary(u, 1e-9) || !is_unitary(v, 1e-9))
             throw Error(Errc::NotUnitary, "u and v must be unitary");
           detail::require_same_dim(u.rows(), v.rows());
           d = static_cast<double>(u.rows());
           t = std::abs((u.adjoint() * v).trace());
           r.companions = {{"d_diamond", unitary_diamond_distance(u, v)}};
         } else {
           d = number(params, "d");
           t = number(params, "abs_trace");
         }
         require(d >= 1.0 && t >= 0.0 && t <= d * (1.0 + 1e-12), "0 <= |tr U^dagger V| <= d");
         r.value = std::sqrt(std::max(0.0, 0.5 * (1.0 - t * t / (d * d))));
         return r;
       }},
      {"state_prep_channels",
       [](const nlohmann::json& params) {
         double d = 0.0;
         double hs = 0.0;
         if (params.contains("rho")) {
           const DensityMatrix rho = DensityMatrix::from_matrix(matrix_from_json(params.at("rho")));
           const DensityMatrix sigma = DensityMatrix::from_matrix(matrix_from_json(params.at("sigma")));
           detail::require_same_dim(rho.dim(), sigma.dim());
           d = static_cast<double>(rho.dim());
           hs = std::sqrt((rho.mat() - sigma.mat()).squaredNorm());
         } else {
           d = number(params, "d");
           hs = number(params, "hs_distance");
         }
         require(d >= 1.0 && hs >= 0.0, "d >= 1 and ||rho - sigma||_HS >= 0");
         ClosedFormResult r;
         r.value = std::sqrt(1.0 + 1.0 / d) * 0.5 * hs;
         return r;
       }},
      {"separable_rotation_bounds",
       [](const nlohmann::json& params) {
         const auto phi = number_list(params, "phi");
         double sum = 0.0;
         double lo = phi.front();
         double hi = phi.front();
         for (double x : phi) {
           require(x > 0.0, "every rotation angle > 0");
           sum += x;
           lo = std::min(lo, x);
           hi = std::max(hi, x);
         }
         require(sum <= std::numbers::pi / 2.0 + 1e-12, "sum of angles <= pi/2");
         const double n = static_cast<double>(phi.size());
         const double cos2 = product(phi, [](double x) { return std::pow(std::cos(x / 2.0), 2); });
         ClosedFormResult r;
         r.value = std::sqrt(0.5 * (1.0 - cos2));
         const double diamond = std::sin(sum / 2.0);
         r.companions = {{"d_av_upper_bound", std::sqrt(n) * hi / std::sqrt(8.0)},
                         {"d_diamond", diamond},
                         {"cb_norm", 2.0 * diamond},
                         {"cb_norm_lower_bound", n * lo / std::sqrt(2.0)}};
         return r;
       }},
      {"pauli_channel_uniform",
       [](const nlohmann::json& params) {
         const auto p = pauli_probabilities(params);
         double purity = 1.0;
         for (const auto& v : p) purity *= v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
         const double d = qubit_dim(p.size());
         ClosedFormResult r;
         r.value = 0.5 * std::sqrt(std::max(0.0, purity - 1.0 / (d * d)));
         return r;
       }},
      {"pauli_channel_vs_identity",
       [](const nlohmann::json& params) {
         const auto p = pauli_probabilities(params);
         double purity = 1.0;
         double fid = 1.0;
         for (const auto& v : p) {
           purity *= v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
           fid *= v[0];
         }
         ClosedFormResult r;
         r.value = 0.5 * std::sqrt(std::max(0.0, 1.0 + purity - 2.0 * fid));
         return r;
       }},
      {"asym_bitflip_symmetrized",
       [](const nlohmann::json& params) {
         const auto p10 = number_list(params, "p10");
         const auto p01 = number_list(params, "p01");
         if (p10.size() != p01.size())
           throw Error(Errc::InvalidArgument, "'p10' and 'p01' must have equal length");
         require_unit_interval(p10, "p(1|0)");
         require_unit_interval(p01, "p(0|1)");
         std::vector<double> q;
         for (std::size_t i = 0; i < p10.size(); ++i) q.push_back(0.5 * (p10[i] + p01[i]));
         ClosedFormResult r;
         r.value = bitflip_av(q);
         r.companions.emplace_back("d_av_uniform", bitflip_uniform(q));
         for (std::size_t i = 0; i < q.size(); ++i) r.companions.emplace_back("q_av_" + std::to_string(i), q[i]);
         return r;
       }},
  };
  return table;
}

}  // namespace cf

inline std::vector<std::string> closed_form_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : cf::catalog()) names.push_back(k);
  return names;
}

inline ClosedFormResult closed_form(const std::string& name, const nlohmann::json& params) {
  const auto& table = cf::catalog();
  const auto it = table.find(name);
  if (it == table.end()) throw Error(Errc::UnknownCase, "no closed form named '" + name + "'");
  ClosedFormResult r = it->second(params);
  r.name = name;
  r.params = params;
  if (!std::isfinite(r.value) || r.value < 0.0)
    throw Error(Errc::NonFinite, "closed form produced " + detail::num(r.value));
  return r;
}

}  // namespace avdist

#endif  // AVDIST_CLOSED_FORM_HPP
