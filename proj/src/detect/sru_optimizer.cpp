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

#include <string>

#include "chandet/detect.hpp"

namespace chandet {

namespace {

void require_bipartite(const ComplexMatrix& u) {
  if (u.num_subsystems() != 2) {
    throw DimensionError("expected an operator on two subsystems, got " + std::to_string(u.num_subsystems()));
  }
}

}  // namespace

double local_unitary_overlap(const ComplexMatrix& u, const ComplexMatrix& ua, const ComplexMatrix& ub) {
  const ComplexMatrix product_op = kron(ua, ub);
  return std::abs(trace_product(product_op.adjoint(), u)) / static_cast<double>(u.side());
}

AscentResult alternating_polar_ascent(const ComplexMatrix& u, const ComplexMatrix& initial_ub,
                                      const AscentOptions& options) {
  require_bipartite(u);
  const int dA = u.dims()[0];
  const int dB = u.dims()[1];
  if (initial_ub.side() != dB) throw DimensionError("initial U_B has the wrong dimension");
  const ComplexMatrix id_a = ComplexMatrix::identity(Dims{dA});
  const ComplexMatrix id_b = ComplexMatrix::identity(Dims{dB});
  const std::vector<int> keep_a{0};
  const std::vector<int> keep_b{1};

  AscentResult result;
  ComplexMatrix ub = initial_ub.with_dims(Dims{dB});
  ComplexMatrix ua = id_a;
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    // Tr[(UA^dagger (x) UB^dagger) U] = Tr[UA^dagger F], F = Tr_B[(I (x) UB^dagger) U]
    const ComplexMatrix f = partial_trace(kron(id_a, ub.adjoint()) * u, keep_a);
    ua = ComplexMatrix(polar_unitary(f.data()), Dims{dA});
    const ComplexMatrix g = partial_trace(kron(ua.adjoint(), id_b) * u, keep_b);
    ub = ComplexMatrix(polar_unitary(g.data()), Dims{dB});
    const double value = local_unitary_overlap(u, ua, ub);
    const bool converged = !result.history.empty() && value - result.history.back() < options.tolerance;
    result.history.push_back(value);
    if (converged) break;
  }
  result.value = result.history.back();
  result.ua = std::move(ua);
  result.ub = std::move(ub);
  return result;
}

SruOptimum alpha_sru_optimize(const ComplexMatrix& u, int starts, std::uint64_t seed, const AscentOptions& options) {
  require_bipartite(u);
  const double defect = u.unitarity_defect();
  if (defect > kSpectralTol) {
    throw ValidationError("alpha_sru_optimize: input is not unitary (defect " + std::to_string(defect) + ")");
  }
  if (starts < 1) throw DimensionError("alpha_sru_optimize: need at least one start");
  const int dB = u.dims()[1];

  SruOptimum best;
  best.starts = starts;
  best.alpha_sru = -1.0;
  for (int k = 0; k < starts; ++k) {
    const ComplexMatrix initial = haar_unitary(dB, seed + static_cast<std::uint64_t>(k));
    AscentResult run = alternating_polar_ascent(u, initial, options);
    if (run.value > best.alpha_sru) {
      best.alpha_sru = run.value;
      best.ua = std::move(run.ua);
      best.ub = std::move(run.ub);
      best.best_start = k;
    }
  }
  return best;
}

}  // namespace chandet
