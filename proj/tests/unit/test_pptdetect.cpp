// Copyright 2026 The chandet Authors
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

#include <gtest/gtest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <random>
#include <vector>

#include "chandet/pptdetect.hpp"
#include "ensembles.hpp"

namespace chandet {
namespace {

Channel cnot_channel() { return unitary_channel(cnot_gate()); }

// Choi operator of M o T~_A assembled by hand: the noisy transpose applied
// to the output half of |a><a|, then every Kraus operator of M on (A, B).
ComplexMatrix composite_choi_oracle(const Channel& ch) {
  const int d = ch.dims()[0];
  const int n = d * d;
  const double p = spa_noise(d);
  const ComplexMatrix alpha = max_entangled(n).projector().with_dims({d, d, d, d});
  const ComplexMatrix noisy = partial_transpose(alpha, 0) * Complex(1.0 - p) +
                              ComplexMatrix::identity({d, d, d, d}) * Complex(p / (n * n));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (const auto& a : ch.kraus()) {
    const Eigen::MatrixXcd big = Eigen::kroneckerProduct(a.data(), Eigen::MatrixXcd::Identity(n, n));
    out += big * noisy.data() * big.adjoint();
  }
  return ComplexMatrix(out, {d, d, d, d});
}

Channel random_unital_channel(int d, std::mt19937_64& rng) {
  const int terms = 2;
  std::vector<ComplexMatrix> us;
  for (int k = 0; k < terms; ++k) us.push_back(haar_unitary(d * d, rng).with_dims({d, d}));
  const auto probs = ensembles::dirichlet(terms, rng);
  return random_unitary_channel(probs, us);
}

TEST(PptConjugate, IdentityIsItsOwnConjugate) {
  const PptConjugate c = ppt_conjugate(identity_channel({2, 2}));
  EXPECT_LT(c.superoperator.matrix.max_abs_diff(ComplexMatrix::identity({16})), 1e-15);
  EXPECT_LT(c.choi.matrix.max_abs_diff(max_entangled(4).projector().with_dims({2, 2, 2, 2})), 1e-15);
  EXPECT_GE(hermitian_eig(c.choi.matrix).values(0), -1e-12);
}

TEST(PptConjugate, CnotHasOneNegativeEigenvalue) {
  const auto values = hermitian_eig(ppt_conjugate(cnot_channel()).choi.matrix).values;
  EXPECT_NEAR(values(0), -0.5, 1e-12);
  EXPECT_GT(values(1), -1e-12);
}

TEST(PptConjugate, FullyMixingProductIsMaximallyMixed) {
  const Channel dep = tensor_product(depolarizing_channel(0.75), depolarizing_channel(0.75));
  const PptConjugate c = ppt_conjugate(dep);
  EXPECT_LT(c.choi.matrix.max_abs_diff(ComplexMatrix::identity({2, 2, 2, 2}) * Complex(1.0 / 16)), 1e-12);
}

TEST(PptConjugate, MatchesDirectConjugation) {
  std::mt19937_64 rng(3);
  const Channel ch = ensembles::random_channel({2, 2}, 2, rng);
  const PptConjugate c = ppt_conjugate(ch);
  const ComplexMatrix rho = ensembles::random_density({2, 2}, rng);
  const ComplexMatrix direct = partial_transpose(ch.apply(partial_transpose(rho, 0)), 0);
  EXPECT_LT(apply_superoperator(c.superoperator, rho).max_abs_diff(direct), 1e-12);
  EXPECT_THROW(ppt_conjugate(identity_channel({2, 3})), DimensionError);
}

TEST(SpaTranspose, NoiseWeights) {
  EXPECT_EQ(spa_noise(2), 8.0 / 9.0);
  EXPECT_EQ(spa_noise(3), 27.0 / 28.0);
}

TEST(SpaTranspose, IsCompletelyPositiveAtThreshold) {
  for (int d : {2, 3}) {
    const Channel spa = spa_transpose(d);
    EXPECT_GE(hermitian_eig(spa.choi().matrix).values(0), -1e-10);
    EXPECT_TRUE(classify(spa).tp);
    EXPECT_LT(spa.choi().matrix.max_abs_diff(noisy_transpose_choi(d, spa_noise(d)).matrix), 1e-10);
  }
}

TEST(SpaTranspose, LessNoiseIsNotCompletelyPositive) {
  EXPECT_LT(hermitian_eig(noisy_transpose_choi(2, 8.0 / 9.0 - 0.01).matrix).values(0), -1e-4);
  EXPECT_LT(hermitian_eig(noisy_transpose_choi(3, 27.0 / 28.0 - 0.01).matrix).values(0), -1e-4);
}

TEST(SpaTranspose, ActsAsNoisyTranspose) {
  std::mt19937_64 rng(5);
  const Channel spa = spa_transpose(2);
  const double p = spa_noise(2);
  const ComplexMatrix rho = ensembles::random_density({2, 2}, rng);
  const ComplexMatrix expected =
      partial_transpose(rho, 0) * Complex(1.0 - p) + ComplexMatrix::identity({2, 2}) * Complex(p / 4);
  EXPECT_LT(spa.apply(rho).max_abs_diff(expected), 1e-12);
}

TEST(SpaComposite, IsCompletelyPositiveForRandomChannels) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = trial % 2 ? 3 : 2;
    const Channel ch = ensembles::random_channel({d, d}, 1 + trial % 3, rng);
    const ComplexMatrix c = choi_from_superoperator(compose(ch, spa_transpose(d))).matrix;
    EXPECT_GE(hermitian_eig(c).values(0), -1e-10);
    EXPECT_LT(spa_composite(ch).choi().matrix.max_abs_diff(composite_choi_oracle(ch)), 1e-10);
  }
}

TEST(PptWitnessTest, Cnot) {
  const PptWitness pw = ppt_witness(cnot_channel());
  EXPECT_NEAR(pw.lambda_minus, -0.5, 1e-12);
  EXPECT_EQ(pw.multiplicity, 1);
  EXPECT_EQ(pw.witness.kind(), WitnessKind::ppt);
  EXPECT_NEAR(pw.witness.op().trace().real(), 1.0, 1e-12);
  const auto values = hermitian_eig(pw.witness.op()).values;
  EXPECT_GE(values(0), -0.5 - 1e-12);
  EXPECT_LE(values(values.size() - 1), 0.5 + 1e-12);
  // Tr[W C_{M o T_A}] = <l-|C_{M_T}|l->
  const Superoperator m_ta = compose(cnot_channel(), transpose_superoperator(0, {2, 2}));
  EXPECT_NEAR(evaluate_witness(pw.witness, choi_from_superoperator(m_ta).matrix), -0.5, 1e-12);
}

TEST(PptWitnessTest, IdentityIsUndetectable) {
  try {
    ppt_witness(identity_channel({2, 2}));
    FAIL() << "expected PptUndetectable";
  } catch (const PptUndetectable& e) {
    EXPECT_GE(e.min_eigenvalue(), -1e-10);
  }
}

TEST(DetectNpt, CnotWorkedExample) {
  const NptReport r = detect_npt(cnot_channel());
  EXPECT_EQ(r.d, 2);
  EXPECT_NEAR(r.lambda_minus, -0.5, 1e-9);
  EXPECT_EQ(r.noise_p, 8.0 / 9.0);
  ASSERT_TRUE(r.expectation.has_value());
  EXPECT_NEAR(*r.expectation, 0.0, 1e-10);
  EXPECT_TRUE(r.unital);
  EXPECT_NEAR(r.threshold, 1.0 / 18.0, 1e-15);
  EXPECT_EQ(r.verdict, NptVerdict::npt_detected);
  EXPECT_NEAR(*r.expectation, (1 - r.noise_p) * r.lambda_minus + r.noise_p / 16, 1e-10);
  EXPECT_NEAR(*r.two_term_value, *r.expectation, 1e-10);
}

TEST(DetectNpt, IdentityReportsDiagnostic) {
  const NptReport r = detect_npt(identity_channel({2, 2}));
  EXPECT_EQ(r.verdict, NptVerdict::not_detected);
  EXPECT_FALSE(r.expectation.has_value());
  EXPECT_FALSE(r.diagnostic.empty());
}

TEST(DetectNpt, FullyDepolarizingIsAboveBound) {
  const Channel dep = fully_depolarizing_channel(ComplexMatrix::identity({2, 2}) * Complex(0.25));
  const NptReport r = detect_npt(dep);
  EXPECT_EQ(r.verdict, NptVerdict::not_detected);
  const PptWitness pw = ppt_witness(cnot_channel());
  const double value = evaluate_witness(pw.witness, spa_composite(dep));
  EXPECT_GE(value, spa_noise(2) / 16 - 1e-10);
}

TEST(DetectNpt, TwoTermFormMatchesDirectValue) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int d = trial % 3 == 2 ? 3 : 2;
    const Channel ch = ensembles::random_channel({d, d}, 1 + trial % 2, rng);
    const NptReport r = detect_npt(ch);
    if (!r.expectation) continue;
    ++checked;
    const double p = r.noise_p;
    EXPECT_NEAR(*r.expectation, (1 - p) * *r.first_term + p * *r.second_term_mt, 1e-10);
    EXPECT_NEAR(*r.first_term, r.lambda_minus, 1e-10);
    const PptWitness pw = ppt_witness(ch);
    EXPECT_NEAR(*r.expectation, evaluate_witness(pw.witness, composite_choi_oracle(ch)), 1e-10);
    EXPECT_EQ(r.verdict == NptVerdict::npt_detected, *r.expectation < r.threshold - 1e-12);
    EXPECT_EQ(r.threshold, r.unital ? p / std::pow(d, 4) : 0.0);
  }
  EXPECT_GE(checked, 15);
}

TEST(DetectNpt, UnitalChannelsFollowClosedForm) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = trial % 2 ? 3 : 2;
    const Channel ch = random_unital_channel(d, rng);
    const NptReport r = detect_npt(ch);
    ASSERT_TRUE(r.expectation.has_value());
    EXPECT_TRUE(r.unital);
    EXPECT_NEAR(*r.expectation, (1 - r.noise_p) * r.lambda_minus + r.noise_p / std::pow(d, 4), 1e-10);
    EXPECT_NEAR(*r.second_term_mt, *r.second_term_m, 1e-12);
  }
}

TEST(DetectNpt, NonUnitalSecondTermUsesConjugatedMap) {
  // Amplitude damping on the first qubit followed by a CNOT is NPT and not unital.
  const double g = 0.6;
  const Complex k0[] = {1.0, std::sqrt(1 - g)};
  Eigen::MatrixXcd k1 = Eigen::MatrixXcd::Zero(2, 2);
  k1(0, 1) = std::sqrt(g);
  const Channel damp({ComplexMatrix::diagonal(k0, {2}), ComplexMatrix(k1)}, {2});
  const Channel first = tensor_product(damp, identity_channel({2}));
  const Channel ch = kraus_from_choi(choi_from_superoperator(compose(cnot_channel(), first)));
  const NptReport r = detect_npt(Channel(ch.kraus(), ch.dims()));
  ASSERT_TRUE(r.expectation.has_value());
  EXPECT_FALSE(r.unital);
  EXPECT_EQ(r.threshold, 0.0);
  const double p = r.noise_p;
  EXPECT_NEAR(*r.expectation, (1 - p) * r.lambda_minus + p * *r.second_term_mt, 1e-10);
}

TEST(DetectNpt, NoFalsePositivesOnPptChannels) {
  std::mt19937_64 rng(17);
  std::vector<PptWitness> witnesses{ppt_witness(cnot_channel())};
  witnesses.push_back(ppt_witness(ensembles::random_channel({2, 2}, 1, rng)));
  for (int trial = 0; trial < 20; ++trial) {
    const Channel ch = ensembles::random_ppt_channel(2, rng);
    const Channel composite = spa_composite(ch);
    for (const auto& pw : witnesses) EXPECT_GE(evaluate_witness(pw.witness, composite), -1e-10);
    EXPECT_EQ(detect_npt(ch).verdict, NptVerdict::not_detected);
  }
}

TEST(DetectNpt, DegenerateMinimumIsReported) {
  Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  const NptReport r = detect_npt(unitary_channel(ComplexMatrix(swap, {2, 2})));
  EXPECT_GE(r.multiplicity, 1);
  if (r.multiplicity > 1) EXPECT_NE(r.diagnostic.find("multiplicity"), std::string::npos);
}

}  // namespace
}  // namespace chandet
