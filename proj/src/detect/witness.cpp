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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chandet/detect.hpp"

namespace chandet {

namespace {

// Binary symplectic form (x | z) of a Pauli string.
std::vector<std::uint8_t> symplectic(const std::string& letters) {
  const std::size_t n = letters.size();
  std::vector<std::uint8_t> v(2 * n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const char c = letters[k];
    v[k] = (c == 'X' || c == 'Y') ? 1 : 0;
    v[n + k] = (c == 'Z' || c == 'Y') ? 1 : 0;
  }
  return v;
}

bool commute(const std::string& p, const std::string& q) {
  int anti = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != 'I' && q[k] != 'I' && p[k] != q[k]) ++anti;
  }
  return anti % 2 == 0;
}

std::size_t gf2_rank(std::vector<std::vector<std::uint8_t>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [c](const auto& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c] != 0) {
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::eb: return "eb";
    case WitnessKind::sru: return "sru";
    case WitnessKind::stabilizer: return "stabilizer";
    case WitnessKind::ppt: return "ppt";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::undetected: return "undetected";
    case Verdict::not_sru: return "not_sru";
    case Verdict::not_separable: return "not_separable";
  }
  return "unknown";
}

Witness::Witness(ComplexMatrix op, WitnessKind kind, std::optional<double> alpha_sru_sq,
                 std::optional<double> alpha_s_sq)
    : op_(std::move(op)), kind_(kind), alpha_sru_sq_(alpha_sru_sq), alpha_s_sq_(alpha_s_sq) {
  const double defect = op_.hermiticity_defect();
  if (defect > kHermitianTol) throw ValidationError("witness operator is not Hermitian (defect " + std::to_string(defect) + ")");
  if (alpha_sru_sq_ && alpha_s_sq_ && *alpha_sru_sq_ > *alpha_s_sq_ + 1e-9) {
    throw ValidationError("witness: alpha_SRU^2 = " + std::to_string(*alpha_sru_sq_) + " exceeds alpha_S^2 = " +
                          std::to_string(*alpha_s_sq_));
  }
}

double Witness::max_eigenvalue() const { return hermitian_eig(op_).values.maxCoeff(); }

PureState choi_vector(const ComplexMatrix& u) {
  const Eigen::Index n = u.side();
  Eigen::VectorXcd v(n * n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index k = 0; k < n; ++k) v(r * n + k) = scale * u(r, k);
  }
  Dims dims = u.dims();
  dims.insert(dims.end(), u.dims().begin(), u.dims().end());
  return PureState(std::move(v), std::move(dims));
}

Witness build_sru_witness(const ComplexMatrix& u, double alpha_sq) {
  if (u.num_subsystems() != 2) throw DimensionError("build_sru_witness: gate must act on two subsystems");
  const double defect = u.unitarity_defect();
  if (defect > kSpectralTol) throw ValidationError("build_sru_witness: gate is not unitary (defect " + std::to_string(defect) + ")");
  if (!(alpha_sq > 0.0 && alpha_sq <= 1.0 + kHermitianTol)) throw ValidationError("build_sru_witness: alpha^2 must lie in (0, 1]");
  const auto schmidt = operator_schmidt(u, u.dims()[0], u.dims()[1]);
  const double alpha_s_sq = schmidt.sigmas.front() * schmidt.sigmas.front();
  const ComplexMatrix projector = choi_vector(u).projector();
  ComplexMatrix op = Complex(alpha_sq) * ComplexMatrix::identity(projector.dims()) - projector;
  return Witness(std::move(op), WitnessKind::sru, alpha_sq, alpha_s_sq);
}

Witness eb_witness() {
  const ComplexMatrix op = Complex(0.25) * (pauli_string("II") - pauli_string("XX") + pauli_string("YY") -
                                            pauli_string("ZZ"));
  return Witness(op.with_dims(Dims{2, 2}), WitnessKind::eb);
}

SignedPauli parse_signed_pauli(std::string_view text) {
  SignedPauli out;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    out.sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  if (text.empty()) throw DimensionError("empty Pauli string");
  for (char c : text) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw DimensionError("invalid Pauli letter '" + std::string(1, c) + "'");
    }
  }
  out.letters = std::string(text);
  return out;
}

Witness stabilizer_witness(const std::vector<std::string>& generators) {
  if (generators.size() != 4) throw DimensionError("stabilizer_witness: expected exactly four generators");
  std::vector<SignedPauli> gens;
  for (const auto& g : generators) gens.push_back(parse_signed_pauli(g));
  const std::size_t n = gens.front().letters.size();
  std::vector<std::vector<std::uint8_t>> rows;
  for (const auto& g : gens) {
    if (g.letters.size() != n) throw DimensionError("stabilizer_witness: generators differ in length");
    rows.push_back(symplectic(g.letters));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i].letters, gens[j].letters)) {
        throw ValidationError("stabilizer_witness: generators " + gens[i].letters + " and " + gens[j].letters +
                              " anticommute");
      }
    }
  }
  if (gf2_rank(rows) != gens.size()) throw ValidationError("stabilizer_witness: generators are not independent");

  const Dims dims(n, 2);
  const ComplexMatrix id = ComplexMatrix::identity(dims);
  std::vector<ComplexMatrix> projectors;
  for (const auto& g : gens) {
    projectors.push_back(Complex(0.5) * (id + Complex(g.sign) * pauli_string(g.letters).with_dims(dims)));
  }
  const ComplexMatrix pairs = projectors[0] * projectors[1] + projectors[2] * projectors[3];
  ComplexMatrix op = Complex(3.0) * id - Complex(2.0) * pairs;
  return Witness(std::move(op), WitnessKind::stabilizer);
}

std::vector<std::string> cnot_choi_stabilizers() { return {"XXXI", "IXIX", "ZIZI", "ZZIZ"}; }

double evaluate_witness(const Witness& w, const ComplexMatrix& state) {
  if (w.op().dims() != state.dims()) throw DimensionError("evaluate_witness: witness and state dims differ");
  const Complex value = trace_product(w.op(), state);
  if (std::abs(value.imag()) > kSpectralTol) {
    throw ValidationError("evaluate_witness: expectation has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

double evaluate_witness(const Witness& w, const Channel& ch) { return evaluate_witness(w, ch.choi().matrix); }

Verdict classify_violation(double value, const Witness& w) {
  if (!w.alpha_sru_sq() || !w.alpha_s_sq()) {
    throw std::invalid_argument("classify_violation: witness lacks alpha_SRU^2 or alpha_S^2");
  }
  if (value < *w.alpha_sru_sq() - *w.alpha_s_sq()) return Verdict::not_separable;
  if (value < 0.0) return Verdict::not_sru;
  return Verdict::undetected;
}

BoundReport robustness_bounds(double c, const Witness& w) {
  BoundReport out;
  out.c = c;
  out.w_max = w.max_eigenvalue();
  if (out.w_max <= 0.0) throw ValidationError("robustness_bounds: witness has no positive eigenvalue");
  if (c < 0.0) {
    out.robustness_lb = std::abs(c) / out.w_max;
    out.mu_c_lb = 1.0 - 1.0 / (1.0 + out.robustness_lb);
  }
  return out;
}

}  // namespace chandet
