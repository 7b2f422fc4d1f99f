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

// avdist command-line front end. Exit codes: 0 pass, 1 violation, 2 input error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "avdist/avdist.hpp"

namespace {

using avdist::Error;
using avdist::Errc;
using nlohmann::json;

struct Globals {
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string out;
  std::string format = "json";
};

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + g.out + "'");
  f << text;
}

/// Flat key/value records become two-column CSV; anything else falls back to JSON.
std::string render(const Globals& g, const json& j) {
  if (g.format == "csv" && j.is_object()) {
    std::ostringstream os;
    os.precision(17);
    os << "key,value\n";
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured()) continue;
      os << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    return os.str();
  }
  return j.dump(2) + "\n";
}

avdist::QuantumObject load_object(const std::string& path) {
  return avdist::object_from_json(avdist::read_json_file(path));
}

std::string kind_of(const avdist::QuantumObject& o) {
  if (std::holds_alternative<avdist::DensityMatrix>(o)) return "state";
  if (std::holds_alternative<avdist::Povm>(o)) return "povm";
  return "channel";
}

Eigen::Index dim_of(const avdist::QuantumObject& o) {
  return std::visit([](const auto& x) { return x.dim(); }, o);
}

void require_same_kind(const avdist::QuantumObject& a, const avdist::QuantumObject& b) {
  if (a.index() != b.index())
    throw Error(Errc::InvalidArgument, "objects differ in kind: " + kind_of(a) + " vs " + kind_of(b));
}

int log2_exact(Eigen::Index d) {
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  if ((Eigen::Index{1} << n) != d) throw Error(Errc::InvalidArgument, "brickwork needs d = 2^n, got " + std::to_string(d));
  return n;
}

/// "haar", "brickwork" or a path to an ensemble JSON file.
avdist::UnitaryEnsemble make_ensemble(const std::string& choice, Eigen::Index d, int depth) {
  if (choice == "haar") return avdist::UnitaryEnsemble::haar(d);
  if (choice == "brickwork") return avdist::UnitaryEnsemble::brickwork(log2_exact(d), depth);
  return avdist::ensemble_from_json(avdist::read_json_file(choice));
}

json parse_params(const std::string& text) {
  if (text.empty()) return json::object();
  try {
    return json::parse(text);
  } catch (const json::exception&) {
    return avdist::read_json_file(text);
  }
}

json estimate_json(const avdist::EstimateReport& r) {
  return {{"mean", r.mean}, {"std_err", r.std_err}, {"n_samples", r.n_samples},
          {"ci95_lo", r.ci95_lo}, {"ci95_hi", r.ci95_hi}, {"seed", r.seed}};
}

json separation_json(const avdist::SeparationReport& r) {
  return {{"d_av", r.d_av},   {"d_worst", r.d_worst}, {"ratio", r.ratio},
          {"bound", r.bound}, {"lower_constant", r.lower_constant}, {"ok", r.ok}};
}

int cmd_distance(const Globals& g, const std::string& pa, const std::string& pb) {
  const auto a = load_object(pa), b = load_object(pb);
  require_same_kind(a, b);
  json j = {{"kind", kind_of(a)}, {"d", dim_of(a)}};
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, avdist::DensityMatrix>) {
          j["d_av"] = avdist::d_av_states(x, y);
        } else if constexpr (std::is_same_v<T, avdist::Povm>) {
          j["d_av"] = avdist::d_av_povms(x, y);
          j["d_av_classical"] = avdist::d_av_classical(x, y);
        } else {
          j["d_av"] = avdist::d_av_channels(x, y);
        }
      },
      a);
  emit(g, render(g, j));
  return kExitPass;
}

int cmd_worst(const Globals& g, const std::string& pa, const std::string& pb, bool separation) {
  const auto a = load_object(pa), b = load_object(pb);
  require_same_kind(a, b);
  json j = {{"kind", kind_of(a)}, {"d", dim_of(a)}};
  bool ok = true;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, avdist::DensityMatrix>) {
          j["d_tr"] = avdist::trace_distance(x, y);
          if (separation) j["separation"] = separation_json(avdist::separation_report(x, y));
          ok = !separation || avdist::separation_report(x, y).ok;
        } else if constexpr (std::is_same_v<T, avdist::Povm>) {
          j["d_op"] = avdist::operational_distance(x, y);
          if (separation) {
            const auto r = avdist::separation_report(x, y);
            j["separation"] = separation_json(r);
            ok = r.ok;
          }
        } else {
          avdist::DiamondConfig cfg;
          cfg.seed = g.seed;
          cfg.workers = g.workers;
          const auto ds = avdist::diamond_distance(x, y, cfg);
          j["d_diamond"] = ds.value;
          j["cb_norm"] = ds.cb_norm;
          j["lower_bound"] = ds.lower_bound;
          j["upper_bound"] = ds.upper_bound;
          j["iterations"] = ds.iterations;
          j["converged"] = ds.converged;
          if (separation) {
            const auto r = avdist::separation_report(x, y, cfg);
            j["separation"] = separation_json(r);
            ok = r.ok;
          }
        }
      },
      a);
  emit(g, render(g, j));
  return ok ? kExitPass : kExitViolation;
}

struct EstimateOpts {
  std::string ensemble = "haar";
  int depth = 0;
  std::size_t samples = 2000;
  double delta_prime = 0.0;
};

avdist::EstimateReport run_estimate(const Globals& g, const avdist::QuantumObject& a, const avdist::QuantumObject& b,
                                    const EstimateOpts& o) {
  const auto ens = make_ensemble(o.ensemble, dim_of(a), o.depth);
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, avdist::DensityMatrix>)
          return avdist::estimate_avg_tv_states(x, y, ens, o.samples, g.seed, g.workers);
        else if constexpr (std::is_same_v<T, avdist::Povm>)
          return avdist::estimate_avg_tv_povms(x, y, ens, o.samples, g.seed, g.workers);
        else
          return avdist::estimate_avg_tv_channels(x, y, ens, o.samples, g.seed, g.workers);
      },
      a);
}

double d_av_of(const avdist::QuantumObject& a, const avdist::QuantumObject& b) {
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return avdist::detail::distance_of(x, std::get<T>(b));
      },
      a);
}

int cmd_estimate(const Globals& g, const std::string& pa, const std::string& pb, const EstimateOpts& o,
                 bool verify) {
  const auto a = load_object(pa), b = load_object(pb);
  require_same_kind(a, b);
  const auto est = run_estimate(g, a, b, o);
  json j = {{"kind", kind_of(a)}, {"d", dim_of(a)}, {"ensemble", o.ensemble}};
  j.update(estimate_json(est));
  if (!verify) {
    emit(g, render(g, j));
    return kExitPass;
  }
  const auto kind = avdist::parse_kind(kind_of(a));
  const auto r = avdist::bound_check(est, d_av_of(a, b), kind, dim_of(a), o.delta_prime);
  j.update({{"delta_prime", r.delta_prime}, {"d_av", r.d_av}, {"lower", r.lower}, {"upper", r.upper},
            {"c", r.k.c}, {"C", r.k.C}, {"l", r.k.l}, {"u", r.k.u}, {"passed", r.passed}});
  emit(g, render(g, j));
  return r.passed ? kExitPass : kExitViolation;
}

int cmd_closed_form(const Globals& g, const std::string& name, const std::string& params, bool list) {
  if (list) {
    emit(g, json(avdist::closed_form_names()).dump(2) + "\n");
    return kExitPass;
  }
  const auto r = avdist::closed_form(name, parse_params(params));
  json j = {{"name", r.name}, {"value", r.value}};
  for (const auto& [k, v] : r.companions) j[k] = v;
  emit(g, render(g, j));
  return kExitPass;
}

int cmd_reproduce(const Globals& g, const std::string& name, bool list) {
  if (list) {
    emit(g, json(avdist::reproduction_names()).dump(2) + "\n");
    return kExitPass;
  }
  const auto cases = avdist::reproduce(name);
  bool ok = true;
  for (const auto& c : cases) ok = ok && c.passed;
  if (g.format == "csv") {
    std::ostringstream os;
    os.precision(17);
    os << "case,label,relation,expected,computed,tol,passed\n";
    for (const auto& c : cases)
      for (const auto& v : c.checks)
        os << c.name << ',' << v.label << ',' << (v.relation == avdist::ValueCheck::Relation::Equal ? "equal" : "greater")
           << ',' << v.expected << ',' << v.computed << ',' << v.tol << ',' << (v.passed ? 1 : 0) << '\n';
    emit(g, os.str());
  } else {
    json arr = json::array();
    for (const auto& c : cases) arr.push_back(avdist::to_json(c));
    emit(g, json{{"passed", ok}, {"cases", arr}}.dump(2) + "\n");
  }
  for (const auto& c : cases)
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
  return ok ? kExitPass : kExitViolation;
}

int cmd_propcheck(const Globals& g, const std::string& suite, std::size_t trials, const std::string& violations_path) {
  std::vector<std::string> names = suite == "all" ? avdist::suite_names() : std::vector<std::string>{suite};
  std::ostringstream os;
  json all = json::array();
  std::size_t n_viol = 0;
  bool header = true;
  for (const auto& s : names) {
    const auto rep = avdist::run_property_suite(s, trials, g.seed, g.workers);
    n_viol += rep.violation_count();
    for (const auto& v : rep.violations) all.push_back(v);
    if (g.format == "csv") {
      std::ostringstream part;
      avdist::write_csv(part, rep);
      std::string text = part.str();
      if (!header) text = text.substr(text.find('\n', text.find('\n') + 1) + 1);
      header = false;
      os << text;
    } else {
      json rows = json::array();
      for (const auto& r : rep.rows)
        rows.push_back({{"check", r.check}, {"d", r.d}, {"trial", r.trial}, {"lhs", r.lhs}, {"rhs", r.rhs},
                        {"holds", r.holds}});
      os << json{{"suite", s}, {"seed", g.seed}, {"trials", rep.trials}, {"violations", rep.violation_count()},
                 {"rows", rows}}
                .dump()
         << "\n";
    }
  }
  emit(g, os.str());
  if (!violations_path.empty() || (n_viol > 0 && g.format == "csv")) {
    const std::string path = violations_path.empty() ? "propcheck_violations.json" : violations_path;
    std::ofstream f(path);
    f << all.dump(2) << "\n";
  } else if (n_viol > 0) {
    std::cerr << all.dump(2) << "\n";
  }
  std::cerr << n_viol << " violation(s)\n";
  return n_viol == 0 ? kExitPass : kExitViolation;
}

int cmd_constants(const Globals& g, const std::string& kind, Eigen::Index d, double delta_prime) {
  const auto k = avdist::constants(avdist::parse_kind(kind), d, delta_prime);
  emit(g, render(g, {{"kind", kind}, {"d", d}, {"delta_prime", delta_prime}, {"c", k.c}, {"C", k.C}, {"l", k.l},
                     {"u", k.u}}));
  return kExitPass;
}

int cmd_frame_potential(const Globals& g, const std::string& ensemble, Eigen::Index d, int depth, int k,
                        std::size_t samples) {
  const auto ens = make_ensemble(ensemble, d, depth);
  const auto r = avdist::frame_potential(ens, k, samples, g.seed, g.workers);
  json j = {{"ensemble", ensemble}, {"d", ens.dim()}, {"k", k}, {"haar_value", r.haar_value}};
  j.update(estimate_json(r.estimate));
  emit(g, render(g, j));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"avdist: average-case and worst-case distances between quantum states, measurements and channels"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "master seed")->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string pa, pb;
  auto* distance = app.add_subcommand("distance", "average-case distance between two objects");
  distance->add_option("a", pa, "first object (JSON file)")->required();
  distance->add_option("b", pb, "second object (JSON file)")->required();

  auto* worst = app.add_subcommand("worst", "worst-case distance between two objects");
  worst->add_option("a", pa)->required();
  worst->add_option("b", pb)->required();

  auto* separation = app.add_subcommand("separation", "average vs worst-case ratio check");
  separation->add_option("a", pa)->required();
  separation->add_option("b", pb)->required();

  EstimateOpts eo;
  auto add_estimate_opts = [&](CLI::App* sub) {
    sub->add_option("a", pa)->required();
    sub->add_option("b", pb)->required();
    sub->add_option("--ensemble", eo.ensemble, "haar, brickwork or ensemble JSON file")->capture_default_str();
    sub->add_option("--depth", eo.depth, "brickwork depth (0: default)")->capture_default_str();
    sub->add_option("--samples", eo.samples, "Monte Carlo samples")->capture_default_str();
  };
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo average TV under random circuits");
  add_estimate_opts(estimate);
  auto* verify = app.add_subcommand("verify-bounds", "check the estimate against the average-distance sandwich");
  add_estimate_opts(verify);
  verify->add_option("--delta-prime", eo.delta_prime, "design error delta' in [0, 1/3]")->capture_default_str();

  std::string name, params;
  bool list = false;
  auto* cf = app.add_subcommand("closed-form", "evaluate a closed-form distance formula");
  cf->add_option("name", name);
  cf->add_option("--params", params, "JSON text or file");
  cf->add_flag("--list", list, "list formula names");

  auto* repro = app.add_subcommand("reproduce", "run reproduction cases");
  repro->add_option("name", name, "case name or 'all'")->default_val("all");
  repro->add_flag("--list", list, "list case names");

  std::string suite, violations_path;
  std::size_t trials = 500;
  auto* prop = app.add_subcommand("propcheck", "randomized property suite");
  prop->add_option("suite", suite, "suite name or 'all'")->required();
  prop->add_option("--trials", trials)->capture_default_str();
  prop->add_option("--violations", violations_path, "write violating instances here");

  std::string kind;
  Eigen::Index d = 2;
  double delta_prime = 0.0;
  auto* cons = app.add_subcommand("constants", "bound constants c, C, l, u");
  cons->add_option("kind", kind, "state, povm or channel")->required();
  cons->add_option("d", d)->required();
  cons->add_option("delta_prime", delta_prime)->default_val(0.0);

  std::string ensemble = "haar";
  int depth = 0, k = 2;
  std::size_t samples = 10000;
  auto* fp = app.add_subcommand("frame-potential", "Monte Carlo frame potential");
  fp->add_option("--ensemble", ensemble, "haar, brickwork or ensemble JSON file")->capture_default_str();
  fp->add_option("--dim", d, "dimension")->capture_default_str();
  fp->add_option("--depth", depth)->capture_default_str();
  fp->add_option("--k", k)->capture_default_str();
  fp->add_option("--samples", samples)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*distance) return cmd_distance(g, pa, pb);
    if (*worst) return cmd_worst(g, pa, pb, false);
    if (*separation) return cmd_worst(g, pa, pb, true);
    if (*estimate) return cmd_estimate(g, pa, pb, eo, false);
    if (*verify) return cmd_estimate(g, pa, pb, eo, true);
    if (*cf) {
      if (!list && name.empty()) throw Error(Errc::InvalidArgument, "closed-form needs a name or --list");
      return cmd_closed_form(g, name, params, list);
    }
    if (*repro) return cmd_reproduce(g, name, list);
    if (*prop) return cmd_propcheck(g, suite, trials, violations_path);
    if (*cons) return cmd_constants(g, kind, d, delta_prime);
    if (*fp) return cmd_frame_potential(g, ensemble, d, depth, k, samples);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
