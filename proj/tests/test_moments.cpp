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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "avdist/ensembles.hpp"
#include "avdist/moments.hpp"
#include "avdist/random_objects.hpp"
#include "oracles.hpp"

namespace avdist {
namespace {

TEST(SymProjector, TraceIdempotentHermitian) {
  for (Eigen::Index d : {2, 3}) {
    for (int k = 1; k <= 4; ++k) {
      const auto p = sym_projector(d, k);
      EXPECT_LE((p.mat * p.mat - p.mat).norm(), 1e-10);
      EXPECT_LE((p.mat - p.mat.adjoint()).norm(), 1e-14);
      EXPECT_NEAR(p.mat.trace().real(), oracle::binom(static_cast<int>(d) + k - 1, k), 1e-8);
    }
  }
  EXPECT_NEAR(sym_projector(2, 4).mat.trace().real(), 5.0, 1e-12);
}

TEST(SymProjector, TwoCopyFormWithSwap) {
  const std::array<int, 2> swap = {1, 0};
  const ComplexMatrix want = (ComplexMatrix::Identity(4, 4) + permutation_operator(2, swap)) / 2.0;
  EXPECT_LE((sym_projector(2, 2).mat - want).norm(), 1e-15);
  EXPECT_NEAR(sym_projector(2, 2).mat.trace().real(), 3.0, 1e-15);
}

TEST(SymProjector, FixesSymmetricProductVectors) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Stream s({31, i});
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(i % 2);
    const int k = 2 + static_cast<int>(i % 3);
    const ComplexVector psi = random_pure_vector(d, s);
    ComplexMatrix v = psi;
    for (int j = 1; j < k; ++j) v = tensor(v, psi);
    EXPECT_LE((sym_projector(d, k).mat * v - v).norm(), 1e-12);
  }
}

TEST(SymProjector, Limits) {
  try {
    sym_projector(2, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::KTooLarge);
  }
  try {
    sym_projector(9, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionTooLarge);
  }
}

TEST(SymTrace, AgreesWithCycleEnumeration) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Stream s({32, i});
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(i % 2);
    const ComplexMatrix x = random_hermitian(d, s), y = random_hermitian(d, s);
    const auto p4 = sym_projector(d, 4);
    EXPECT_NEAR(sym_trace(p4, {x, x, y, y}), oracle::sym_trace_cycles({x, x, y, y}), 1e-9);
    EXPECT_NEAR(sym_trace(p4, {x, x, x, x}), oracle::sym_trace_cycles({x, x, x, x}), 1e-9);
  }
}

TEST(Moments, ExactValues) {
  EXPECT_NEAR(second_moment_exact(pauli(3), 2), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(second_moment_exact(ComplexMatrix::Identity(3, 3), 3), 1.0, 1e-15);
  EXPECT_NEAR(kth_moment_exact(pauli(3), 2, 4), 0.2, 1e-12);
  EXPECT_NEAR(kth_moment_exact(pauli(3), 2, 2), 1.0 / 3.0, 1e-12);
  for (int k = 1; k <= 4; ++k) EXPECT_NEAR(kth_moment_exact(ComplexMatrix::Identity(3, 3), 3, k), 1.0, 1e-12);
  Stream s({33, 0});
  const ComplexMatrix delta = random_state(3, s).mat() - random_state(3, s).mat();
  EXPECT_NEAR(second_moment_exact(delta, 3), (delta * delta).trace().real() / 12.0, 1e-14);
}

TEST(Moments, SecondMomentMatchesHaarMonteCarlo) {
  const auto mc = oracle::haar_moment(pauli(3), 2, 100000, 901);
  EXPECT_LE(std::abs(mc.mean - second_moment_exact(pauli(3), 2)), 5.0 * mc.se);
}

TEST(ProjectorInequality, KnownCases) {
  const auto zz = projector_inequality_check(pauli(3), pauli(3));
  EXPECT_NEAR(zz.lhs, oracle::sym_trace_cycles({pauli(3), pauli(3), pauli(3), pauli(3)}), 1e-12);
  EXPECT_NEAR(zz.lhs, 1.0, 1e-12);
  EXPECT_NEAR(zz.rhs, 13.0 / 6.0, 1e-12);
  EXPECT_TRUE(zz.holds);
  const auto id = projector_inequality_check(ComplexMatrix::Identity(2, 2));
  EXPECT_NEAR(id.lhs, 5.0, 1e-12);
  EXPECT_NEAR(id.rhs, 15.15, 1e-12);
  EXPECT_TRUE(id.holds);
}

TEST(FramePotential, HaarValues) {
  EXPECT_EQ(haar_frame_potential(2, 1), 1.0);
  EXPECT_EQ(haar_frame_potential(4, 2), 2.0);
  EXPECT_EQ(haar_frame_potential(2, 3), 5.0);  // permutations of 3 avoiding an increasing run of 3
  const auto r1 = frame_potential(UnitaryEnsemble::haar(2), 1, 20000, 5);
  EXPECT_LE(std::abs(r1.estimate.mean - 1.0), 5.0 * r1.estimate.std_err);
  const auto r2 = frame_potential(UnitaryEnsemble::haar(4), 2, 20000, 6);
  EXPECT_LE(std::abs(r2.estimate.mean - 2.0), 5.0 * r2.estimate.std_err);
}

TEST(FramePotential, SingletonEnsemble) {
  const auto ens = UnitaryEnsemble::fixed({ComplexMatrix::Identity(3, 3)}, {1.0});
  const auto r = frame_potential(ens, 2, 50, 1);
  EXPECT_DOUBLE_EQ(r.estimate.mean, 81.0);
  EXPECT_DOUBLE_EQ(r.estimate.std_err, 0.0);
}

TEST(Haar, UnitarityAndFirstMoment) {
  std::vector<double> xs;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const ComplexMatrix u = sample_haar(3, SeedSpec{77, i});
    if (i < 100) {
      EXPECT_LE((u.adjoint() * u - ComplexMatrix::Identity(3, 3)).norm(), 1e-10);
      for (Eigen::Index c = 0; c < 3; ++c) EXPECT_NEAR(u.col(c).norm(), 1.0, 1e-10);
    }
    xs.push_back(std::norm(u.trace()));
  }
  const auto m = oracle::summarize(xs);
  EXPECT_LE(std::abs(m.mean - 1.0), 5.0 * m.se);
}

TEST(Haar, SecondMomentOfRotatedZ) {
  std::vector<double> xs;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const ComplexMatrix u = sample_haar(2, SeedSpec{78, i});
    xs.push_back(std::pow((u * pauli(3) * u.adjoint())(0, 0).real(), 2));
  }
  const auto m = oracle::summarize(xs);
  EXPECT_LE(std::abs(m.mean - 1.0 / 3.0), 5.0 * m.se);
}

TEST(Haar, SeedingContract) {
  const ComplexMatrix a = sample_haar(2, SeedSpec{5, 0});
  const ComplexMatrix b = sample_haar(2, SeedSpec{5, 0});
  const ComplexMatrix c = sample_haar(2, SeedSpec{5, 1});
  EXPECT_EQ(a, b);
  EXPECT_NE(a(0, 0), c(0, 0));
}

TEST(Brickwork, UnitaryAndLimits) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const ComplexMatrix u = sample_brickwork(3, 4, SeedSpec{79, i});
    EXPECT_LE((u.adjoint() * u - ComplexMatrix::Identity(8, 8)).norm(), 1e-9);
  }
  try {
    sample_brickwork(9, 2, SeedSpec{1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooManyQubits);
  }
  EXPECT_EQ(UnitaryEnsemble::brickwork(3).depth(), default_brickwork_depth(3));
}

TEST(Brickwork, DepthOneTwoQubitsIsHaarLike) {
  const auto r = frame_potential(UnitaryEnsemble::brickwork(2, 1), 1, 20000, 80);
  EXPECT_LE(std::abs(r.estimate.mean - 1.0), 5.0 * r.estimate.std_err);
}

TEST(UnitaryEnsemble, FixedListValidation) {
  const auto ens = UnitaryEnsemble::fixed({ComplexMatrix::Identity(2, 2)}, {1.0});
  Stream s({81, 0});
  EXPECT_EQ(ens.sample(s), ComplexMatrix::Identity(2, 2));
  try {
    UnitaryEnsemble::fixed({ComplexMatrix::Identity(2, 2), pauli(1)}, {0.5, 0.6});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidProbabilityVector);
  }
  try {
    UnitaryEnsemble::fixed({ComplexMatrix(2.0 * pauli(1))}, {1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotUnitary);
  }
}

}  // namespace
}  // namespace avdist
