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

#include "chandet/detect.hpp"

namespace chandet {

SchmidtDecomposition operator_schmidt(const ComplexMatrix& o, int dA, int dB) {
  if (dA < 1 || dB < 1 || o.side() != static_cast<Eigen::Index>(dA) * dB) {
    throw DimensionError("operator_schmidt: operator side " + std::to_string(o.side()) + " does not match " +
                         std::to_string(dA) + "x" + std::to_string(dB));
  }
  // R[(a a'), (b b')] = O[(a b), (a' b')]
  const Eigen::Index na = dA;
  const Eigen::Index nb = dB;
  Eigen::MatrixXcd realigned(na * na, nb * nb);
  for (Eigen::Index a = 0; a < na; ++a) {
    for (Eigen::Index ap = 0; ap < na; ++ap) {
      for (Eigen::Index b = 0; b < nb; ++b) {
        for (Eigen::Index bp = 0; bp < nb; ++bp) {
          realigned(a * na + ap, b * nb + bp) = o(a * nb + b, ap * nb + bp);
        }
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(realigned, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& singular = svd.singularValues();
  const double norm = std::sqrt(static_cast<double>(dA) * dB);

  SchmidtDecomposition out;
  for (Eigen::Index i = 0; i < singular.size(); ++i) {
    const double sigma = singular(i) / norm;
    if (sigma <= 1e-12) break;
    Eigen::MatrixXcd a(na, na);
    Eigen::MatrixXcd b(nb, nb);
    for (Eigen::Index r = 0; r < na; ++r) {
      for (Eigen::Index c = 0; c < na; ++c) a(r, c) = svd.matrixU()(r * na + c, i);
    }
    for (Eigen::Index r = 0; r < nb; ++r) {
      for (Eigen::Index c = 0; c < nb; ++c) b(r, c) = std::conj(svd.matrixV()(r * nb + c, i));
    }
    a *= std::sqrt(static_cast<double>(dA));
    b *= std::sqrt(static_cast<double>(dB));
    // phase gauge
    for (Eigen::Index k = 0; k < a.size(); ++k) {
      const Complex entry = a(k / na, k % na);
      if (std::abs(entry) > 1e-12) {
        const Complex phase = entry / std::abs(entry);
        a *= std::conj(phase);
        b *= phase;
        break;
      }
    }
    out.sigmas.push_back(sigma);
    out.a_factors.emplace_back(std::move(a), Dims{dA});
    out.b_factors.emplace_back(std::move(b), Dims{dB});
  }
  out.rank = static_cast<int>(out.sigmas.size());
  return out;
}

ComplexMatrix reconstruct(const SchmidtDecomposition& s) {
  if (s.rank == 0) throw DimensionError("reconstruct: empty decomposition");
  ComplexMatrix out = s.sigmas[0] * kron(s.a_factors[0], s.b_factors[0]);
  for (int i = 1; i < s.rank; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out = out + s.sigmas[k] * kron(s.a_factors[k], s.b_factors[k]);
  }
  return out;
}

}  // namespace chandet
