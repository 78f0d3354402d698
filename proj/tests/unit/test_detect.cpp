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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "chandet/detect.hpp"
#include "ensembles.hpp"

namespace chandet {
namespace {

const double kSqrtHalf = 1.0 / std::sqrt(2.0);

double z3_sigma(int sign) { return std::sqrt((9.0 + sign * std::sqrt(17.0)) / 2.0) / 3.0; }

ComplexMatrix z3() { return z3_gate(); }
ComplexMatrix cnot() { return cnot_gate(); }

// Schmidt coefficients of |U> across the AC|BD cut, squared; these equal the
// squared operator-Schmidt coefficients of U.
std::vector<double> ac_bd_spectrum(const ComplexMatrix& u) {
  const ComplexMatrix c = unitary_channel(u).choi().matrix;
  const int keep_ac[] = {0, 2};
  const EigenSystem es = hermitian_eig(partial_trace(c, keep_ac));
  std::vector<double> out;
  for (Eigen::Index k = es.values.size() - 1; k >= 0; --k) {
    if (es.values(k) > 1e-20) out.push_back(es.values(k));
  }
  return out;
}

TEST(OperatorSchmidt, Cnot) {
  const SchmidtDecomposition s = operator_schmidt(cnot(), 2, 2);
  EXPECT_EQ(s.rank, 2);
  ASSERT_EQ(s.sigmas.size(), 2u);
  EXPECT_NEAR(s.sigmas[0], kSqrtHalf, 1e-12);
  EXPECT_NEAR(s.sigmas[1], kSqrtHalf, 1e-12);
}

TEST(OperatorSchmidt, Z3ClosedForm) {
  const SchmidtDecomposition s = operator_schmidt(z3(), 3, 3);
  EXPECT_EQ(s.rank, 2);
  EXPECT_NEAR(s.sigmas[0], z3_sigma(+1), 1e-9);
  EXPECT_NEAR(s.sigmas[1], z3_sigma(-1), 1e-9);
  EXPECT_NEAR(s.sigmas[0], 0.853851, 1e-6);
  EXPECT_NEAR(s.sigmas[1], 0.520518, 1e-6);
  EXPECT_NEAR(s.sigmas[0] * s.sigmas[0] + s.sigmas[1] * s.sigmas[1], 1.0, 1e-10);
  for (int i = 0; i < 2; ++i) {
    for (const auto* f : {&s.a_factors[i], &s.b_factors[i]}) {
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          if (r != c) EXPECT_LT(std::abs((*f)(r, c)), 1e-12);
    }
    // Factors are diagonal but not unitary.
    EXPECT_GT(s.a_factors[i].unitarity_defect(), 0.1);
  }
}

TEST(OperatorSchmidt, ProductUnitaryHasRankOne) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ComplexMatrix u = kron(haar_unitary(3, seed), haar_unitary(3, seed + 100));
    const SchmidtDecomposition s = operator_schmidt(u, 3, 3);
    EXPECT_EQ(s.rank, 1);
    EXPECT_NEAR(s.sigmas[0], 1.0, 1e-12);
  }
}

TEST(OperatorSchmidt, ReconstructionNormalisationAndGauge) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int dA = 2 + trial % 2, dB = 2 + (trial / 2) % 2;
    const ComplexMatrix o = ensembles::ginibre({dA, dB}, rng);
    const SchmidtDecomposition s = operator_schmidt(o, dA, dB);
    EXPECT_LT(reconstruct(s).max_abs_diff(o), 1e-10);
    EXPECT_GE(s.rank, 1);
    EXPECT_LE(s.rank, std::min(dA * dA, dB * dB));
    for (int i = 0; i < s.rank; ++i) {
      if (i > 0) EXPECT_GE(s.sigmas[i - 1], s.sigmas[i]);
      EXPECT_GT(s.sigmas[i], 1e-12);
      for (int j = 0; j < s.rank; ++j) {
        const double expect_a = i == j ? dA : 0.0, expect_b = i == j ? dB : 0.0;
        EXPECT_LT(std::abs(trace_product(s.a_factors[i].adjoint(), s.a_factors[j]) - expect_a), 1e-9);
        EXPECT_LT(std::abs(trace_product(s.b_factors[i].adjoint(), s.b_factors[j]) - expect_b), 1e-9);
      }
      // First entry of A_i above the noise floor is real and positive.
      const ComplexMatrix& a = s.a_factors[i];
      for (Eigen::Index k = 0; k < a.side() * a.side(); ++k) {
        const Complex v = a(k / a.side(), k % a.side());
        if (std::abs(v) > 1e-12) {
          EXPECT_GT(v.real(), 0.0);
          EXPECT_LT(std::abs(v.imag()), 1e-12);
          break;
        }
      }
    }
  }
}

TEST(OperatorSchmidt, UnitarySigmasMatchAcBdSpectrum) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int d = seed % 2 ? 3 : 2;
    const ComplexMatrix u = haar_unitary(d * d, seed).with_dims({d, d});
    const SchmidtDecomposition s = operator_schmidt(u, d, d);
    const auto oracle = ac_bd_spectrum(u);
    double total = 0.0;
    for (double v : s.sigmas) total += v * v;
    EXPECT_NEAR(total, 1.0, 1e-10);
    for (int i = 0; i < s.rank; ++i) EXPECT_NEAR(s.sigmas[i] * s.sigmas[i], oracle[static_cast<std::size_t>(i)], 1e-10);
  }
}

TEST(OperatorSchmidt, RejectsMismatchedDims) {
  EXPECT_THROW(operator_schmidt(ComplexMatrix::identity({2, 2}), 2, 3), DimensionError);
}

TEST(AlphaSru, CnotOptimum) {
  const SruOptimum opt = alpha_sru_optimize(cnot(), 20, 0);
  EXPECT_NEAR(opt.alpha_sru, kSqrtHalf, 1e-6);
  EXPECT_NEAR(local_unitary_overlap(cnot(), opt.ua, opt.ub), opt.alpha_sru, 1e-12);
  EXPECT_LE(opt.ua.unitarity_defect(), 1e-10);
  EXPECT_LE(opt.ub.unitarity_defect(), 1e-10);
}

TEST(AlphaSru, CnotKnownMaximiser) {
  const Complex s_diag[] = {1.0, Complex(0.0, 1.0)};
  const ComplexMatrix s = ComplexMatrix::diagonal(s_diag, {2});
  // exp(-i pi X / 4) = (I - i X)/sqrt(2)
  const ComplexMatrix rx = (ComplexMatrix::identity({2}) - Complex(0.0, 1.0) * pauli('X')) * Complex(kSqrtHalf);
  EXPECT_GE(local_unitary_overlap(cnot(), s, rx), kSqrtHalf - 1e-10);
}

TEST(AlphaSru, Z3NearPublishedValue) {
  const SruOptimum opt = alpha_sru_optimize(z3(), 50, 0);
  EXPECT_NEAR(opt.alpha_sru, 0.786, 0.01);
  EXPECT_LT(opt.alpha_sru, operator_schmidt(z3(), 3, 3).sigmas[0]);
}

TEST(AlphaSru, ProductUnitaryReachesOne) {
  const ComplexMatrix u = kron(haar_unitary(3, 1), haar_unitary(3, 2));
  EXPECT_GE(alpha_sru_optimize(u, 5, 0).alpha_sru, 1.0 - 1e-9);
}

TEST(AlphaSru, NeverExceedsLeadingSchmidtCoefficient) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int d = seed % 2 ? 3 : 2;
    const ComplexMatrix u = haar_unitary(d * d, 500 + seed).with_dims({d, d});
    const double sigma1 = operator_schmidt(u, d, d).sigmas[0];
    EXPECT_LE(alpha_sru_optimize(u, 10, seed).alpha_sru, sigma1 + 1e-9);
  }
}

TEST(AlphaSru, TwoQubitCartanProperty) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexMatrix u = haar_unitary(4, 900 + seed).with_dims({2, 2});
    EXPECT_NEAR(alpha_sru_optimize(u, 20, seed).alpha_sru, operator_schmidt(u, 2, 2).sigmas[0], 1e-6);
  }
}

TEST(AlphaSru, AscentIsMonotone) {
  const AscentResult r = alternating_polar_ascent(z3(), haar_unitary(3, 7));
  ASSERT_FALSE(r.history.empty());
  for (std::size_t k = 1; k < r.history.size(); ++k) EXPECT_GE(r.history[k], r.history[k - 1] - 1e-14);
  EXPECT_NEAR(r.value, r.history.back(), 1e-15);
}

TEST(AlphaSru, DeterministicPerSeedAndRejectsNonUnitary) {
  const SruOptimum a = alpha_sru_optimize(z3(), 5, 11);
  const SruOptimum b = alpha_sru_optimize(z3(), 5, 11);
  EXPECT_EQ(a.alpha_sru, b.alpha_sru);
  EXPECT_EQ(a.best_start, b.best_start);
  EXPECT_THROW(alpha_sru_optimize(ComplexMatrix::identity({2, 2}) * Complex(2.0), 3, 0), ValidationError);
}

TEST(SruWitness, CnotValues) {
  const Witness w = build_sru_witness(cnot(), 0.5);
  EXPECT_EQ(w.kind(), WitnessKind::sru);
  EXPECT_NEAR(*w.alpha_s_sq(), 0.5, 1e-12);
  EXPECT_NEAR(evaluate_witness(w, unitary_channel(cnot())), -0.5, 1e-12);
  EXPECT_NEAR(evaluate_witness(w, identity_channel({2, 2})), 0.25, 1e-12);
}

TEST(SruWitness, IdentityOverlapOracle) {
  // |<a|CNOT (x) I|a>|^2 on the 16-dimensional Choi space.
  const Eigen::VectorXcd alpha = max_entangled(4).amplitudes();
  const Eigen::VectorXcd cv = choi_vector(cnot()).amplitudes();
  const double overlap_sq = std::norm(alpha.dot(cv));
  EXPECT_NEAR(overlap_sq, std::norm(cnot().trace() / 4.0), 1e-12);
  EXPECT_NEAR(evaluate_witness(build_sru_witness(cnot(), 0.5), identity_channel({2, 2})), 0.5 - overlap_sq, 1e-12);
}

TEST(SruWitness, ChoiVectorMatchesChannelChoi) {
  const ComplexMatrix u = haar_unitary(9, 3).with_dims({3, 3});
  EXPECT_LT(choi_vector(u).projector().max_abs_diff(unitary_channel(u).choi().matrix), 1e-12);
}

TEST(SruWitness, NonNegativeOnSruChannels) {
  std::mt19937_64 rng(41);
  const Witness w = build_sru_witness(cnot(), 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_GE(evaluate_witness(w, ensembles::random_sru(2, 2, rng)), -1e-9);
  }
}

TEST(SruWitness, Z3Value) {
  const double alpha = 0.786;
  const Witness w = build_sru_witness(z3(), alpha * alpha);
  EXPECT_NEAR(evaluate_witness(w, unitary_channel(z3())), alpha * alpha - 1.0, 1e-12);
  EXPECT_NEAR(*w.alpha_s_sq(), z3_sigma(+1) * z3_sigma(+1), 1e-9);
}

TEST(SruWitness, RejectsBadInput) {
  EXPECT_THROW(build_sru_witness(ComplexMatrix::identity({2, 2}) * Complex(2.0), 0.5), ValidationError);
  EXPECT_THROW(build_sru_witness(cnot(), 0.0), ValidationError);
  EXPECT_THROW(build_sru_witness(cnot(), 0.9), ValidationError);  // above alpha_S^2 = 1/2
}

TEST(EbWitness, WernerCurve) {
  const Witness w = eb_witness();
  for (double p : {0.0, 0.25, 0.5, 1.0}) {
    EXPECT_NEAR(evaluate_witness(w, depolarizing_channel(p)), p - 0.5, 1e-12);
  }
  EXPECT_NEAR(evaluate_witness(w, max_entangled(2).projector()), -0.5, 1e-12);
  EXPECT_NEAR(w.max_eigenvalue(), 0.5, 1e-12);
}

TEST(EbWitness, PauliForm) {
  const ComplexMatrix expected = (pauli_string("II") - pauli_string("XX") + pauli_string("YY") - pauli_string("ZZ")) *
                                 Complex(0.25);
  EXPECT_LT(eb_witness().op().max_abs_diff(expected), 1e-15);
}

TEST(EbWitness, NonNegativeOnSeparableStates) {
  std::mt19937_64 rng(43);
  const Witness w = eb_witness();
  for (int trial = 0; trial < 200; ++trial) {
    EXPECT_GE(evaluate_witness(w, ensembles::random_separable_state(rng)), -1e-9);
  }
}

TEST(StabilizerWitness, CnotValues) {
  const Witness w = stabilizer_witness(cnot_choi_stabilizers());
  EXPECT_EQ(w.kind(), WitnessKind::stabilizer);
  EXPECT_NEAR(evaluate_witness(w, unitary_channel(cnot())), -1.0, 1e-12);
  EXPECT_NEAR(evaluate_witness(w, ComplexMatrix::identity({2, 2, 2, 2}) * Complex(1.0 / 16)), 2.0, 1e-12);
}

TEST(StabilizerWitness, GeneratorsStabiliseTheCnotChoiState) {
  // The projector of a stabilizer state is the uniform average of its group.
  const auto gens = cnot_choi_stabilizers();
  ComplexMatrix group_sum = ComplexMatrix::zero({2, 2, 2, 2});
  for (int mask = 0; mask < 16; ++mask) {
    ComplexMatrix g = ComplexMatrix::identity({2, 2, 2, 2});
    for (int k = 0; k < 4; ++k)
      if (mask & (1 << k)) g = g * pauli_string(gens[k]);
    group_sum = group_sum + g;
  }
  EXPECT_LT((group_sum * Complex(1.0 / 16)).max_abs_diff(unitary_channel(cnot()).choi().matrix), 1e-12);
}

TEST(StabilizerWitness, RejectsInvalidGenerators) {
  EXPECT_THROW(stabilizer_witness({"XIII", "ZIII", "IIZI", "IIIZ"}), ValidationError);
  EXPECT_THROW(stabilizer_witness({"XXXI", "IXIX", "XIXX", "ZZIZ"}), ValidationError);
  EXPECT_THROW(stabilizer_witness({"XX", "ZZ"}), DimensionError);
}

TEST(StabilizerWitness, SignedPauliParsing) {
  EXPECT_EQ(parse_signed_pauli("-ZIZI").sign, -1);
  EXPECT_EQ(parse_signed_pauli("-ZIZI").letters, "ZIZI");
  EXPECT_EQ(parse_signed_pauli("+XX").sign, 1);
  EXPECT_EQ(parse_signed_pauli("XY").letters, "XY");
  EXPECT_THROW(parse_signed_pauli("XQ"), DimensionError);
  // A sign flip on one generator changes the targeted state.
  const Witness w = stabilizer_witness({"XXXI", "IXIX", "ZIZI", "-ZZIZ"});
  EXPECT_GT(evaluate_witness(w, unitary_channel(cnot())), -1.0 + 0.5);
}

TEST(EvaluateWitness, RejectsDimensionMismatch) {
  EXPECT_THROW(evaluate_witness(eb_witness(), identity_channel({2, 2})), DimensionError);
}

TEST(Verdicts, TieredClassification) {
  const double a_sru = 0.786 * 0.786;
  const Witness w = build_sru_witness(z3(), a_sru);
  EXPECT_EQ(classify_violation(a_sru - 1.0, w), Verdict::not_separable);
  EXPECT_EQ(classify_violation(-0.05, w), Verdict::not_sru);
  EXPECT_EQ(classify_violation(0.1, w), Verdict::undetected);
  EXPECT_NEAR(a_sru - *w.alpha_s_sq(), -0.111, 2e-3);
  EXPECT_THROW(classify_violation(-1.0, eb_witness()), std::invalid_argument);
}

TEST(Bounds, DepolarizingQuarter) {
  const BoundReport b = robustness_bounds(-0.25, eb_witness());
  EXPECT_NEAR(b.w_max, 0.5, 1e-12);
  EXPECT_NEAR(b.robustness_lb, 0.5, 1e-12);
  EXPECT_NEAR(b.mu_c_lb, 1.0 / 3.0, 1e-12);
  EXPECT_LE(b.mu_c_lb, (2.0 - 4 * 0.25) / (3.0 - 4 * 0.25));
}

TEST(Bounds, NonNegativeValueGivesZero) {
  for (double c : {0.0, 0.3}) {
    const BoundReport b = robustness_bounds(c, eb_witness());
    EXPECT_EQ(b.robustness_lb, 0.0);
    EXPECT_EQ(b.mu_c_lb, 0.0);
  }
}

TEST(Bounds, MatchClosedFormAlongWernerFamily) {
  for (double p = 0.0; p < 0.5; p += 0.05) {
    const double c = evaluate_witness(eb_witness(), depolarizing_channel(p));
    EXPECT_NEAR(robustness_bounds(c, eb_witness()).mu_c_lb, (1 - 2 * p) / (2 - 2 * p), 1e-12);
  }
}

}  // namespace
}  // namespace chandet
