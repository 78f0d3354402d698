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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chandet/channels.hpp"
#include "chandet/qmath.hpp"

namespace chandet {

// --- Operator Schmidt decomposition ----------------------------------------

// O = sum_i sigma_i A_i (x) B_i with Tr[A_i^dagger A_j] = dA delta_ij and
// Tr[B_i^dagger B_j] = dB delta_ij. Sigmas are descending and > 1e-12. Each
// A_i has its first nonzero entry (row-major) real and positive; the
// compensating phase lives in B_i.
struct SchmidtDecomposition {
  std::vector<double> sigmas;
  std::vector<ComplexMatrix> a_factors;
  std::vector<ComplexMatrix> b_factors;
  int rank = 0;
};

// Realigns o into a dA^2 x dB^2 matrix and takes its SVD.
SchmidtDecomposition operator_schmidt(const ComplexMatrix& o, int dA, int dB);
ComplexMatrix reconstruct(const SchmidtDecomposition& s);

// --- Maximal overlap with separable random unitaries ------------------------

// |Tr[(ua (x) ub)^dagger u]| / (dA dB), i.e. |<ua (x) ub|u>| between the
// corresponding Choi vectors.
double local_unitary_overlap(const ComplexMatrix& u, const ComplexMatrix& ua, const ComplexMatrix& ub);

struct AscentOptions {
  double tolerance = 1e-12;  // stop once a sweep gains less than this
  int max_sweeps = 500;
};

struct AscentResult {
  double value = 0.0;
  ComplexMatrix ua;
  ComplexMatrix ub;
  std::vector<double> history;  // objective after each sweep
};

// One run of alternating polar ascent from `initial_ub`. Each half-step
// replaces one local unitary by the polar factor of the partial trace
// against the other, which maximises the overlap exactly in that block.
AscentResult alternating_polar_ascent(const ComplexMatrix& u, const ComplexMatrix& initial_ub,
                                      const AscentOptions& options = {});

struct SruOptimum {
  double alpha_sru = 0.0;
  ComplexMatrix ua;
  ComplexMatrix ub;
  int best_start = 0;
  int starts = 0;
};

// Best of `starts` ascent runs, run k starting from haar_unitary(dB, seed + k).
// `u` must be unitary on dims {dA, dB}.
SruOptimum alpha_sru_optimize(const ComplexMatrix& u, int starts = 50, std::uint64_t seed = 0,
                              const AscentOptions& options = {});

// --- Witnesses ---------------------------------------------------------------

enum class WitnessKind { eb, sru, stabilizer, ppt };
std::string_view to_string(WitnessKind kind);

class Witness {
 public:
  // Throws ValidationError if the operator is not Hermitian within
  // kHermitianTol or if alpha_sru_sq exceeds alpha_s_sq.
  Witness(ComplexMatrix op, WitnessKind kind, std::optional<double> alpha_sru_sq = std::nullopt,
          std::optional<double> alpha_s_sq = std::nullopt);

  const ComplexMatrix& op() const { return op_; }
  WitnessKind kind() const { return kind_; }
  std::optional<double> alpha_sru_sq() const { return alpha_sru_sq_; }
  std::optional<double> alpha_s_sq() const { return alpha_s_sq_; }
  double max_eigenvalue() const;

 private:
  ComplexMatrix op_;
  WitnessKind kind_;
  std::optional<double> alpha_sru_sq_;
  std::optional<double> alpha_s_sq_;
};

// (U (x) I)|a> on the four-partite Choi space of a gate on {dA, dB}.
PureState choi_vector(const ComplexMatrix& u);

// alpha_sq I - |U><U|; also records sigma_1^2 from the operator Schmidt
// decomposition of u as the separable-map reference.
Witness build_sru_witness(const ComplexMatrix& u, double alpha_sq);

// (II - XX + YY - ZZ) / 4 on a qubit and its ancilla.
Witness eb_witness();

// Parses "+XXXI", "-ZIZI" or "XXXI".
struct SignedPauli {
  int sign = 1;
  std::string letters;
};
SignedPauli parse_signed_pauli(std::string_view text);

// 3I - 2[P1 P2 + P3 P4] with P_i = (I + g_i)/2 for exactly four commuting,
// independent generators given in order.
Witness stabilizer_witness(const std::vector<std::string>& generators);

// Generators of the stabilizer group of the CNOT Choi state.
std::vector<std::string> cnot_choi_stabilizers();

// Exact Tr[W C_M]. Throws DimensionError on mismatched dims and
// ValidationError when the imaginary part exceeds 1e-10.
double evaluate_witness(const Witness& w, const Channel& ch);
double evaluate_witness(const Witness& w, const ComplexMatrix& state);

enum class Verdict { undetected, not_sru, not_separable };
std::string_view to_string(Verdict v);

// not_separable below alpha_sru^2 - alpha_s^2, not_sru below zero.
Verdict classify_violation(double value, const Witness& w);

struct BoundReport {
  double c = 0.0;
  double w_max = 0.0;
  double robustness_lb = 0.0;
  double mu_c_lb = 0.0;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

// Generalized-robustness lower bound |c|/w_max and the induced lower bound
// on the critical mixing weight; both zero when c >= 0.
BoundReport robustness_bounds(double c, const Witness& w);

}  // namespace chandet
