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

#include <cmath>
#include <string>

#include "chandet/pptdetect.hpp"

namespace chandet {

namespace {

int equal_qudit_dim(const Dims& dims, const char* who) {
  if (dims.size() != 2 || dims[0] != dims[1]) {
    throw DimensionError(std::string(who) + ": expected a channel on two equal qudits");
  }
  return dims[0];
}

ComplexMatrix identity_over(const Dims& dims, double scale) {
  return Complex(scale) * ComplexMatrix::identity(dims);
}

double expectation_in(const Eigen::VectorXcd& v, const ComplexMatrix& m) {
  return (v.adjoint() * m.data() * v)(0, 0).real();
}

}  // namespace

std::string_view to_string(NptVerdict v) {
  return v == NptVerdict::npt_detected ? "npt_detected" : "not_detected";
}

PptConjugate ppt_conjugate(const Channel& ch) {
  equal_qudit_dim(ch.dims(), "ppt_conjugate");
  const Superoperator transpose = transpose_superoperator(0, ch.dims());
  Superoperator s = compose(transpose, compose(ch, transpose));
  ChoiMatrix c = choi_from_superoperator(s);
  return PptConjugate{std::move(s), std::move(c)};
}

double spa_noise(int d) {
  const double cube = static_cast<double>(d) * d * d;
  return cube / (cube + 1.0);
}

ChoiMatrix noisy_transpose_choi(int d, double p) {
  if (d < 2) throw DimensionError("noisy transpose needs d >= 2");
  const Dims dims{d, d};
  const Superoperator transpose = transpose_superoperator(0, dims);
  // D[rho] = Tr[rho] I/d^2, i.e. vec(I/d^2) vec(I)^T
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  const Eigen::VectorXcd vec_id = Eigen::MatrixXcd::Identity(n, n).reshaped();
  const Eigen::MatrixXcd depolarize = (vec_id / static_cast<double>(n)) * vec_id.transpose();
  const ComplexMatrix mixed((1.0 - p) * transpose.matrix.data() + p * depolarize, transpose.matrix.dims());
  return choi_from_superoperator(Superoperator{mixed, dims});
}

Channel spa_transpose(int d) {
  const Channel raw = kraus_from_choi(noisy_transpose_choi(d, spa_noise(d)));
  return Channel(raw.kraus(), raw.dims(), true);
}

PptWitness ppt_witness(const Channel& ch) {
  const PptConjugate conj = ppt_conjugate(ch);
  const EigenSystem eig = hermitian_eig(conj.choi.matrix);
  const double lambda = eig.values(0);
  if (lambda >= -kSpectralTol) {
    throw PptUndetectable("conjugated Choi operator is positive semidefinite (minimum eigenvalue " +
                              std::to_string(lambda) + "); the map is PPT or undetectable this way",
                          lambda);
  }
  int multiplicity = 0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) - lambda <= kSpectralTol) ++multiplicity;
  }
  Eigen::VectorXcd v = eig.vectors.col(0);
  const ComplexMatrix projector(v * v.adjoint(), conj.choi.matrix.dims());
  Witness w(partial_transpose(projector, 0), WitnessKind::ppt);
  return PptWitness{std::move(w), lambda, multiplicity, std::move(v)};
}

Channel spa_composite(const Channel& ch) {
  const int d = equal_qudit_dim(ch.dims(), "spa_composite");
  const Channel spa = spa_transpose(d);
  const Channel raw = kraus_from_choi(choi_from_superoperator(compose(ch, spa)));
  return Channel(raw.kraus(), raw.dims(), ch.trace_preserving_required());
}

NptReport detect_npt(const Channel& ch) {
  NptReport report;
  report.d = equal_qudit_dim(ch.dims(), "detect_npt");
  const int d = report.d;
  report.noise_p = spa_noise(d);
  report.unital = classify(ch).unital;
  const double d4 = std::pow(static_cast<double>(d), 4);
  report.threshold = report.unital ? report.noise_p / d4 : 0.0;

  std::optional<PptWitness> witness;
  try {
    witness = ppt_witness(ch);
  } catch (const PptUndetectable& e) {
    report.lambda_minus = e.min_eigenvalue();
    report.multiplicity = 0;
    report.verdict = NptVerdict::not_detected;
    report.diagnostic = e.what();
    return report;
  }
  report.lambda_minus = witness->lambda_minus;
  report.multiplicity = witness->multiplicity;

  const double p = report.noise_p;
  const Superoperator spa = Superoperator{
      superoperator_from_choi(noisy_transpose_choi(d, p)).matrix, ch.dims()};
  const ChoiMatrix composite = choi_from_superoperator(compose(ch, spa));
  report.expectation = evaluate_witness(witness->witness, composite.matrix);

  const PptConjugate conj = ppt_conjugate(ch);
  const Dims dims = ch.dims();
  const ComplexMatrix mixed_in = identity_over(dims, 1.0 / (d * d));
  const ComplexMatrix mixed_anc = identity_over(dims, 1.0 / (d * d));
  const Eigen::VectorXcd& v = witness->lambda_vector;
  report.first_term = expectation_in(v, conj.choi.matrix);
  report.second_term_mt = expectation_in(v, kron(apply_superoperator(conj.superoperator, mixed_in), mixed_anc));
  report.second_term_m = expectation_in(v, kron(apply_superoperator(ch.superoperator(), mixed_in), mixed_anc));
  report.two_term_value = (1.0 - p) * *report.first_term + p * *report.second_term_mt;
  const double mismatch = std::abs(*report.two_term_value - *report.expectation);
  if (mismatch > kSpectralTol) {
    throw ValidationError("detect_npt: direct and two-term expectations differ by " + std::to_string(mismatch));
  }

  report.verdict = *report.expectation < report.threshold - 1e-12 ? NptVerdict::npt_detected : NptVerdict::not_detected;
  if (report.multiplicity > 1) {
    report.diagnostic = "most negative eigenvalue has multiplicity " + std::to_string(report.multiplicity) +
                        "; using the first eigenvector returned by the solver";
  }
  return report;
}

}  // namespace chandet
