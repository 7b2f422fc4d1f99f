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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "avdist/avdist.hpp"

namespace {

using namespace avdist;

// Pinned tolerances.
constexpr double kGoldenTol = 1e-9;
constexpr double kGoldenSeconds = 60.0;
constexpr std::size_t kSandwichPairs = 50;
constexpr std::size_t kSandwichSamples = 2000;
constexpr double kSandwichSeconds = 15.0 * 60.0;
constexpr double kMomentSe = 5.0;
constexpr std::size_t kMomentSamples = 100000;
constexpr int kMomentInputs = 10;
constexpr std::size_t kInequalityTrials = 1000;
constexpr std::size_t kSuiteTrials = 500;
constexpr double kSeparationRelSlack = 1e-6;
constexpr double kSaturationTol = 1e-9;
constexpr std::size_t kDiamondPairs = 100;
constexpr double kDiamondTol = 1e-4;
constexpr double kBracketTol = 1e-8;
constexpr std::size_t kDiscriminationTrials = 2000;
constexpr double kBrickworkSe = 5.0;
constexpr std::size_t kBrickworkSamples = 20000;
constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Object sets shared by the sandwich and separation criteria.
struct ObjectSets {
  std::vector<std::pair<DensityMatrix, DensityMatrix>> states;
  std::vector<std::pair<Povm, Povm>> povms;
  std::vector<std::pair<ChannelChoi, ChannelChoi>> channels;
};

const ObjectSets& object_sets() {
  static const ObjectSets sets = [] {
    ObjectSets o;
    std::uint64_t id = 0;
    for (Eigen::Index d = 2; d <= 8; ++d)
      for (std::size_t i = 0; i < kSandwichPairs; ++i) {
        Stream s({derive_seed(kSeed, 1), id++});
        o.states.emplace_back(random_state(d, s), random_state(d, s));
      }
    for (Eigen::Index d = 2; d <= 6; ++d)
      for (std::size_t i = 0; i < kSandwichPairs; ++i) {
        Stream s({derive_seed(kSeed, 2), id++});
        o.povms.emplace_back(random_povm(d, static_cast<std::size_t>(d), s),
                             random_povm(d, static_cast<std::size_t>(d), s));
      }
    for (Eigen::Index d = 2; d <= 4; ++d)
      for (std::size_t i = 0; i < kSandwichPairs; ++i) {
        Stream s({derive_seed(kSeed, 3), id++});
        o.channels.emplace_back(unitary_channel(sample_haar(d, s)), unitary_channel(sample_haar(d, s)));
        o.channels.emplace_back(random_channel(d, s), random_channel(d, s));
      }
    return o;
  }();
  return sets;
}

Outcome golden() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cases = reproduce("all");
  std::size_t failed = 0, checks = 0;
  double worst = 0.0;
  for (const auto& c : cases)
    for (const auto& v : c.checks) {
      ++checks;
      if (v.relation == ValueCheck::Relation::Equal) {
        worst = std::max(worst, std::abs(v.computed - v.expected));
        if (!(std::abs(v.computed - v.expected) <= kGoldenTol)) ++failed;
      } else if (!v.passed) {
        ++failed;
      }
    }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << cases.size() << " cases, " << checks << " checks, " << failed << " failed, max |err| "
     << fmt("%.2e", worst) << ", " << fmt("%.2f", secs) << " s";
  return {failed == 0 && secs < kGoldenSeconds, os.str()};
}

Outcome sandwiches() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& o = object_sets();
  std::size_t total = 0, failed = 0;
  std::uint64_t id = 0;
  for (const auto& [a, b] : o.states) {
    const auto est = estimate_avg_tv_states(a, b, UnitaryEnsemble::haar(a.dim()), kSandwichSamples, derive_seed(kSeed, 10 + id++));
    ++total;
    failed += bound_check(est, d_av_states(a, b), ObjectKind::State, a.dim(), 0.0).passed ? 0 : 1;
  }
  for (const auto& [a, b] : o.povms) {
    const auto est = estimate_avg_tv_povms(a, b, UnitaryEnsemble::haar(a.dim()), kSandwichSamples, derive_seed(kSeed, 10 + id++));
    ++total;
    failed += bound_check(est, d_av_povms(a, b), ObjectKind::Povm, a.dim(), 0.0).passed ? 0 : 1;
  }
  for (const auto& [a, b] : o.channels) {
    const auto est = estimate_avg_tv_channels(a, b, UnitaryEnsemble::haar(a.dim()), kSandwichSamples, derive_seed(kSeed, 10 + id++));
    ++total;
    failed += bound_check(est, d_av_channels(a, b), ObjectKind::Channel, a.dim(), 0.0).passed ? 0 : 1;
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << total << " instances (" << o.states.size() << " state, " << o.povms.size() << " POVM, " << o.channels.size()
     << " channel), " << failed << " outside, " << fmt("%.1f", secs) << " s";
  return {failed == 0 && secs <= kSandwichSeconds, os.str()};
}

Outcome moments() {
  std::size_t total = 0, failed = 0;
  double worst_z = 0.0;
  for (Eigen::Index d : {2, 3})
    for (int k : {2, 4})
      for (int i = 0; i < kMomentInputs; ++i) {
        Stream s({derive_seed(kSeed, 20), static_cast<std::uint64_t>(total)});
        const ComplexMatrix x = random_hermitian(d, s);
        const double exact = k == 2 ? second_moment_exact(x, d) : kth_moment_exact(x, d, k);
        const std::uint64_t base = derive_seed(kSeed, 21 + total);
        const auto xs = parallel_map(kMomentSamples, 1, [&](std::size_t j) {
          const ComplexMatrix u = sample_haar(d, SeedSpec{base, j});
          return std::pow((u * x * u.adjoint())(0, 0).real(), k);
        });
        const auto r = summarize(xs, base);
        const double z = std::abs(r.mean - exact) / r.std_err;
        worst_z = std::max(worst_z, z);
        ++total;
        failed += z <= kMomentSe ? 0 : 1;
      }
  std::ostringstream os;
  os << total << " (d, k, X) cases, " << failed << " beyond " << kMomentSe << " SE, max |z| " << fmt("%.2f", worst_z);
  return {failed == 0, os.str()};
}

Outcome inequalities() {
  const auto rep = run_property_suite("inequalities", kInequalityTrials, kSeed);
  std::ostringstream os;
  os << rep.trials << " draws, " << rep.rows.size() << " checks, " << rep.violation_count() << " violations";
  return {rep.violation_count() == 0, os.str()};
}

Outcome property_suites() {
  std::size_t rows = 0, viol = 0;
  for (const char* s : {"metric", "subadditivity", "convexity", "dpi", "stability", "chaining"}) {
    const auto rep = run_property_suite(s, kSuiteTrials, kSeed);
    rows += rep.rows.size();
    viol += rep.violation_count();
  }
  const auto ce = run_property_suite("counterexamples", 1, kSeed);
  double min_margin = 1e300;
  bool strict = !ce.rows.empty();
  for (const auto& r : ce.rows) {
    min_margin = std::min(min_margin, r.lhs - r.rhs);
    strict = strict && r.holds && r.lhs - r.rhs > kStrictMargin;
  }
  std::ostringstream os;
  os << rows << " checks over 6 suites, " << viol << " violations; " << ce.rows.size()
     << " counterexamples, min margin " << fmt("%.3e", min_margin);
  return {viol == 0 && strict, os.str()};
}

Outcome separations() {
  const auto& o = object_sets();
  std::size_t total = 0, failed = 0;
  double worst = 0.0;
  auto take = [&](const SeparationReport& r) {
    ++total;
    worst = std::max(worst, r.ratio / r.bound);
    failed += r.ratio <= r.bound * (1.0 + kSeparationRelSlack) ? 0 : 1;
  };
  for (const auto& [a, b] : o.states) take(separation_report(a, b));
  for (const auto& [a, b] : o.povms) take(separation_report(a, b));
  std::uint64_t id = 0;
  for (const auto& [a, b] : o.channels) {
    DiamondConfig cfg;
    cfg.seed = derive_seed(kSeed, 30 + id++);
    take(separation_report(a, b, cfg));
  }
  const auto [rho, sigma] = build::orthogonal_half_mixed(4);
  const double rs = separation_report(rho, sigma).ratio;
  const double rp = separation_report(povm_computational(4), povm_swapped_computational(4)).ratio;
  ComplexVector psi = ComplexVector::Zero(2);
  psi(0) = 1.0;
  const double rc = separation_report(max_depolarizing_channel(2), jamiolkowski_example_channel(pauli(3), psi, -1)).ratio;
  const bool saturate = std::abs(rs - 2.0) <= kSaturationTol && std::abs(rp - 2.0 * std::sqrt(2.0)) <= kSaturationTol &&
                        std::abs(rc - 2.0) <= kSaturationTol;
  std::ostringstream os;
  os << total << " pairs, " << failed << " over bound, max ratio/bound " << fmt("%.4f", worst)
     << "; saturating ratios " << fmt("%.12f", rs) << ", " << fmt("%.12f", rp) << ", " << fmt("%.12f", rc);
  return {failed == 0 && saturate, os.str()};
}

Outcome diamond() {
  std::size_t failed = 0, unbracketed = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < kDiamondPairs; ++i) {
    Stream s({derive_seed(kSeed, 40), i});
    const ComplexMatrix u = sample_haar(2, s), v = sample_haar(2, s);
    DiamondConfig cfg;
    cfg.seed = derive_seed(kSeed, 41 + i);
    const auto ds = diamond_distance(unitary_channel(u), unitary_channel(v), cfg);
    const double err = std::abs(ds.value - unitary_diamond_distance(u, v));
    worst = std::max(worst, err);
    failed += err <= kDiamondTol ? 0 : 1;
    unbracketed += (ds.lower_bound <= ds.value + kBracketTol && ds.value <= ds.upper_bound + kBracketTol) ? 0 : 1;
  }
  std::ostringstream os;
  os << kDiamondPairs << " qubit unitary pairs, max |err| " << fmt("%.2e", worst) << ", " << failed
     << " beyond tol, " << unbracketed << " unbracketed";
  return {failed == 0 && unbracketed == 0, os.str()};
}

Outcome discrimination() {
  bool ok = true;
  std::ostringstream os;
  for (std::size_t shots : {1u, 11u, 51u, 101u}) {
    const auto r = simulate_discrimination(DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1), UnitaryEnsemble::haar(2),
                                           shots, kDiscriminationTrials, derive_seed(kSeed, 50 + shots));
    ok = ok && r.empirical_error <= r.hoeffding_bound;
    os << "s=" << shots << ": " << fmt("%.4f", r.empirical_error) << " <= " << fmt("%.3g", r.hoeffding_bound) << "; ";
  }
  return {ok, os.str()};
}

Outcome reproducibility() {
  Stream s({derive_seed(kSeed, 60), 0});
  const DensityMatrix a = random_state(4, s), b = random_state(4, s);
  const Povm m = random_povm(3, 3, s), n = random_povm(3, 3, s);
  const ChannelChoi la = random_channel(2, s), lb = random_channel(2, s);
  auto run = [&](unsigned w) {
    std::ostringstream os;
    os.precision(17);
    const auto e1 = estimate_avg_tv_states(a, b, UnitaryEnsemble::haar(4), 2000, 1, w);
    const auto e2 = estimate_avg_tv_povms(m, n, UnitaryEnsemble::haar(3), 2000, 2, w);
    const auto e3 = estimate_avg_tv_channels(la, lb, UnitaryEnsemble::brickwork(1, 3), 2000, 3, w);
    const auto fp = frame_potential(UnitaryEnsemble::haar(3), 2, 2000, 4, w);
    os << e1.mean << e1.std_err << e2.mean << e2.std_err << e3.mean << e3.std_err << fp.estimate.mean;
    for (const char* suite : {"dpi", "separations"}) write_csv(os, run_property_suite(suite, 50, 5, w));
    return os.str();
  };
  const std::string one = run(1);
  const bool same = one == run(2) && one == run(8);
  return {same, std::string("estimators, frame potential and two suites at 1/2/8 workers: ") +
                    (same ? "bit-identical" : "DIFFER") + " (" + std::to_string(one.size()) + " bytes)"};
}

Outcome brickwork() {
  std::ostringstream os;
  bool ok = true;
  for (int n : {2, 3}) {
    const Eigen::Index d = Eigen::Index{1} << n;
    Stream s({derive_seed(kSeed, 70), static_cast<std::uint64_t>(n)});
    const DensityMatrix a = DensityMatrix::basis(d, 0), b = random_state(d, s);
    const auto h = estimate_avg_tv_states(a, b, UnitaryEnsemble::haar(d), kBrickworkSamples, derive_seed(kSeed, 71));
    const auto bw = estimate_avg_tv_states(a, b, UnitaryEnsemble::brickwork(n), kBrickworkSamples, derive_seed(kSeed, 72));
    const double z = std::abs(h.mean - bw.mean) / std::hypot(h.std_err, bw.std_err);
    ok = ok && z <= kBrickworkSe;
    os << "n=" << n << " depth " << default_brickwork_depth(n) << ": haar " << fmt("%.5f", h.mean) << ", brickwork "
       << fmt("%.5f", bw.mean) << ", |z| " << fmt("%.2f", z) << "; ";
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"golden reproductions", golden},
      {"average-distance sandwiches", sandwiches},
      {"Haar moment identities", moments},
      {"projector inequalities", inequalities},
      {"property suites", property_suites},
      {"separation ratios", separations},
      {"diamond solver", diamond},
      {"discrimination bound", discrimination},
      {"worker-count reproducibility", reproducibility},
      {"brickwork vs Haar", brickwork},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
