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

#include <array>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "avdist/linalg.hpp"
#include "avdist/parallel.hpp"
#include "avdist/random_objects.hpp"
#include "avdist/rng.hpp"
#include "oracles.hpp"

namespace avdist {
namespace {

TEST(HermitianEig, IdentityAndPauliZ) {
  const auto id = hermitian_eig(ComplexMatrix::Identity(2, 2));
  EXPECT_DOUBLE_EQ(id.values(0), 1.0);
  EXPECT_DOUBLE_EQ(id.values(1), 1.0);
  const auto z = hermitian_eig(pauli(3));
  EXPECT_NEAR(z.values(0), -1.0, 1e-15);
  EXPECT_NEAR(z.values(1), 1.0, 1e-15);
}

TEST(HermitianEig, ReconstructsRandomHermitian) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Stream s({11, i});
    const ComplexMatrix h = random_hermitian(5, s);
    const auto e = hermitian_eig(h);
    for (Eigen::Index k = 1; k < 5; ++k) EXPECT_LE(e.values(k - 1), e.values(k));
    const ComplexMatrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LE((back - h).norm() / h.norm(), 1e-10);
  }
}

TEST(HermitianEig, RejectsNonHermitianAndNonSquare) {
  ComplexMatrix m = pauli(3);
  m(0, 1) = 0.5;
  try {
    hermitian_eig(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonHermitian);
  }
  try {
    hermitian_eig(ComplexMatrix::Zero(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonSquare);
  }
}

TEST(HermitianEig, RejectsNonFinite) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 0) = std::nan("");
  try {
    hermitian_eig(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonFinite);
  }
}

TEST(SchattenNorms, KnownValues) {
  const auto z = schatten_norms(pauli(3));
  EXPECT_NEAR(z.trace_norm, 2.0, 1e-14);
  EXPECT_NEAR(z.hs_norm, std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(z.op_norm, 1.0, 1e-14);
  const auto zero = schatten_norms(ComplexMatrix::Zero(3, 3));
  EXPECT_EQ(zero.trace_norm, 0.0);
  EXPECT_EQ(zero.hs_norm, 0.0);
  EXPECT_EQ(zero.op_norm, 0.0);
  ComplexMatrix delta = ComplexMatrix::Zero(4, 4);
  delta.diagonal() << 0.5, 0.5, -0.5, -0.5;
  const auto n = schatten_norms(delta);
  EXPECT_NEAR(n.trace_norm, 2.0, 1e-14);
  EXPECT_NEAR(n.hs_norm, 1.0, 1e-14);
  EXPECT_NEAR(n.op_norm, 0.5, 1e-14);
}

TEST(SchattenNorms, AgreeWithSvdOracle) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    Stream s({12, i});
    const ComplexMatrix h = random_hermitian(2 + static_cast<Eigen::Index>(i % 6), s);
    const auto n = schatten_norms(h);
    EXPECT_NEAR(n.trace_norm, oracle::trace_norm(h), 1e-10);
    EXPECT_NEAR(n.hs_norm, oracle::frobenius(h), 1e-10);
    EXPECT_NEAR(n.op_norm, oracle::op_norm(h), 1e-10);
  }
}

TEST(PartialTrace, Factorization) {
  Stream s({13, 0});
  const ComplexMatrix a = random_hermitian(3, s);
  const ComplexMatrix b = random_hermitian(2, s);
  const ComplexMatrix ab = tensor(a, b);
  EXPECT_LE((partial_trace(ab, 3, 2, Keep::First) - b.trace() * a).norm(), 1e-12);
  EXPECT_LE((partial_trace(ab, 3, 2, Keep::Second) - a.trace() * b).norm(), 1e-12);
}

TEST(PartialTrace, MaximallyEntangledMarginals) {
  const Eigen::Index d = 3;
  ComplexVector phi = ComplexVector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(3.0);
  const ComplexMatrix p = phi * phi.adjoint();
  const ComplexMatrix target = ComplexMatrix::Identity(d, d) / 3.0;
  EXPECT_LE((partial_trace(p, d, d, Keep::First) - target).norm(), 1e-14);
  EXPECT_LE((partial_trace(p, d, d, Keep::Second) - target).norm(), 1e-14);
}

TEST(PartialTrace, DimensionMismatch) {
  try {
    partial_trace(ComplexMatrix::Identity(6, 6), 2, 2, Keep::First);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(Tensor, Basics) {
  EXPECT_EQ(tensor(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)), ComplexMatrix::Identity(4, 4));
  EXPECT_EQ(tensor(pauli(3), pauli(3)).trace(), Complex(0.0, 0.0));
  for (std::uint64_t i = 0; i < 10; ++i) {
    Stream s({14, i});
    const ComplexMatrix a = random_hermitian(2, s), b = random_hermitian(3, s);
    EXPECT_NEAR(hs_norm(tensor(a, b)), hs_norm(a) * hs_norm(b), 1e-12);
    EXPECT_LE((tensor(a, b) - oracle::kron(a, b)).norm(), 1e-14);
  }
}

TEST(PermutationOperator, IdentityAndSwap) {
  const std::array<int, 3> id3 = {0, 1, 2};
  EXPECT_EQ(permutation_operator(2, id3), ComplexMatrix::Identity(8, 8));
  const std::array<int, 2> swap = {1, 0};
  const ComplexMatrix s = permutation_operator(2, swap);
  for (std::uint64_t i = 0; i < 20; ++i) {
    Stream st({15, i});
    const ComplexMatrix rho = random_state(2, st).mat();
    EXPECT_NEAR((s * tensor(rho, rho)).trace().real(), (rho * rho).trace().real(), 1e-12);
  }
}

TEST(PermutationOperator, CompositionLawOverS3) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  // P_a P_b = P_{a∘b} for one fixed composition order; find it from the first
  // non-commuting pair and check every pair against it.
  auto compose = [](const std::array<int, 3>& a, const std::array<int, 3>& b, bool a_first) {
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = a_first ? b[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])] : a[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])];
    return c;
  };
  int order = -1;
  for (const auto& a : perms)
    for (const auto& b : perms) {
      const ComplexMatrix prod = permutation_operator(2, a) * permutation_operator(2, b);
      const bool first = (prod - permutation_operator(2, compose(a, b, true))).norm() < 1e-12;
      const bool second = (prod - permutation_operator(2, compose(a, b, false))).norm() < 1e-12;
      ASSERT_TRUE(first || second);
      if (first != second) {
        const int this_order = first ? 0 : 1;
        if (order < 0) order = this_order;
        EXPECT_EQ(order, this_order);
      }
    }
  EXPECT_GE(order, 0);
}

TEST(PermutationOperator, RejectsBadInput) {
  const std::array<int, 2> bad = {0, 0};
  try {
    permutation_operator(2, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
  const std::array<int, 5> big = {0, 1, 2, 3, 4};
  try {
    permutation_operator(2, big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::KTooLarge);
  }
}

TEST(MatrixFunctions, SqrtAndAbs) {
  Stream s({16, 0});
  const ComplexMatrix rho = random_state(4, s).mat();
  const ComplexMatrix r = psd_sqrt(rho);
  EXPECT_LE((r * r - rho).norm(), 1e-12);
  const ComplexMatrix h = random_hermitian(4, s);
  EXPECT_NEAR(matrix_abs(h).trace().real(), oracle::trace_norm(h), 1e-10);
  const ComplexMatrix inv = psd_inverse_sqrt(rho);
  EXPECT_LE((inv * rho * inv - ComplexMatrix::Identity(4, 4)).norm(), 1e-8);
}

TEST(Rng, StreamsAreDeterministicAndDistinct) {
  Stream a({42, 0}), b({42, 0}), c({42, 1}), e({43, 0});
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    EXPECT_NE(x, c.next_u64());
    EXPECT_NE(x, e.next_u64());
  }
  EXPECT_EQ(a.counter(), 100u);
  EXPECT_NE(derive_seed(1, 2), derive_seed(1, 3));
  EXPECT_NE(derive_seed(1, 2), derive_seed(2, 2));
}

TEST(Rng, NormalMoments) {
  Stream s({44, 0});
  std::vector<double> xs;
  for (int i = 0; i < 100000; ++i) xs.push_back(s.normal());
  const auto m = oracle::summarize(xs);
  EXPECT_LE(std::abs(m.mean), 5.0 * m.se);
  double var = 0.0;
  for (double x : xs) var += x * x;
  EXPECT_NEAR(var / 100000.0, 1.0, 0.02);
}

TEST(Parallel, WorkerCountInvariant) {
  auto fn = [](std::size_t i) {
    Stream s({7, i});
    return s.normal();
  };
  const auto one = summarize(parallel_map(1000, 1, fn), 7);
  for (unsigned w : {2u, 3u, 8u}) {
    const auto many = summarize(parallel_map(1000, w, fn), 7);
    EXPECT_EQ(one.mean, many.mean);
    EXPECT_EQ(one.std_err, many.std_err);
  }
}

TEST(Parallel, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(10, 4,
                            [](std::size_t i) {
                              if (i == 5) throw Error(Errc::InvalidArgument, "boom");
                            }),
               Error);
}

TEST(Summarize, MatchesOracle) {
  const std::vector<double> xs = {0.1, 0.4, 0.35, 0.2, 0.9};
  const auto r = summarize(xs, 0);
  const auto o = oracle::summarize(xs);
  EXPECT_NEAR(r.mean, o.mean, 1e-15);
  EXPECT_NEAR(r.std_err, o.se, 1e-15);
  EXPECT_NEAR(r.ci95_hi - r.mean, 1.96 * o.se, 1e-15);
}

}  // namespace
}  // namespace avdist
