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

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "chandet/qmath.hpp"

namespace chandet {

// Choi operator C = (M (x) I)[|a><a|] with the normalised maximally
// entangled |a> over the whole system. Subsystems are ordered outputs first,
// then ancillas: a channel on dims {dA, dB} has a Choi on {dA, dB, dA, dB},
// i.e. (A, B, C, D) with |a> = |a>_AC |a>_BD.
struct ChoiMatrix {
  ComplexMatrix matrix;
  Dims source_dims;
};

// Linear map on column-stacked operators: S vec(rho) = vec(M[rho]), with
// vec(rho)[i + D j] = rho(i, j). Need not be completely positive.
struct Superoperator {
  ComplexMatrix matrix;
  Dims system_dims;
};

struct ChannelFlags {
  bool cp = false;
  bool tp = false;
  bool unital = false;
};

// Completely positive map in Kraus form M[rho] = sum_k A_k rho A_k^dagger.
// Choi and superoperator are computed at construction; instances are
// immutable.
class Channel {
 public:
  // Throws ValidationError if `trace_preserving_required` and the Kraus set
  // misses sum A^dagger A = I by more than kSpectralTol.
  Channel(std::vector<ComplexMatrix> kraus, Dims dims, bool trace_preserving_required = true);

  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const Dims& dims() const { return dims_; }
  int dimension() const { return static_cast<int>(product(dims_)); }
  bool trace_preserving_required() const { return tp_required_; }
  const ChoiMatrix& choi() const { return choi_; }
  const Superoperator& superoperator() const { return superop_; }

  ComplexMatrix apply(const ComplexMatrix& rho) const;

 private:
  std::vector<ComplexMatrix> kraus_;
  Dims dims_;
  bool tp_required_;
  ChoiMatrix choi_;
  Superoperator superop_;
};

// max |sum A^dagger A - I| and max |sum A A^dagger - I|.
double tp_deficit(const std::vector<ComplexMatrix>& kraus);
double unital_deficit(const std::vector<ComplexMatrix>& kraus);

const ChoiMatrix& choi_of(const Channel& ch);
const Superoperator& superoperator_of(const Channel& ch);

// Both directions of the reshuffle C[(a,i),(b,j)] = S[a + D b, i + D j] / D.
ChoiMatrix choi_from_superoperator(const Superoperator& s);
Superoperator superoperator_from_choi(const ChoiMatrix& c);

// Partial transposition of one subsystem as a (non-CP) superoperator.
Superoperator transpose_superoperator(int subsystem, const Dims& dims);

// S applied to an operator through column stacking.
ComplexMatrix apply_superoperator(const Superoperator& s, const ComplexMatrix& rho);

// Superoperator of outer o inner (inner acts first).
Superoperator compose(const Superoperator& outer, const Superoperator& inner);
Superoperator compose(const Channel& outer, const Channel& inner);
Superoperator compose(const Superoperator& outer, const Channel& inner);
Superoperator compose(const Channel& outer, const Superoperator& inner);

// Kraus operators from the eigenpairs of a PSD Choi operator; eigenvalues at
// or below kSpectralTol are dropped. Throws ValidationError below -1e-9.
// The result does not demand trace preservation.
Channel kraus_from_choi(const ChoiMatrix& c);

// cp from the Choi spectrum, tp and unital from the Kraus sums, all at
// kSpectralTol.
ChannelFlags classify(const Channel& ch);

// Kraus operators of M1 (x) M2 acting on the concatenated dims.
Channel tensor_product(const Channel& first, const Channel& second);

// --- Named channels and gates ---------------------------------------------

ComplexMatrix cnot_gate();  // control is the first qubit
ComplexMatrix z3_gate();    // diag(1,...,1,-1) on two qutrits

Channel identity_channel(const Dims& dims);
// Weight 1-p on the identity and p/(d^2-1) on every other Weyl operator
// X^a Z^b; for d = 2 this is {sqrt(1-p) I, sqrt(p/3) X, Y, Z}.
Channel depolarizing_channel(double p, int d = 2);
// rho -> sigma Tr[rho].
Channel fully_depolarizing_channel(const ComplexMatrix& sigma);
Channel unitary_channel(const ComplexMatrix& u);
Channel random_unitary_channel(std::span<const double> probabilities, std::span<const ComplexMatrix> unitaries);
// sum_k p_k (V_k (x) W_k) rho (V_k (x) W_k)^dagger
Channel sru_channel(std::span<const double> probabilities, std::span<const ComplexMatrix> a_unitaries,
                    std::span<const ComplexMatrix> b_unitaries);

enum class ChannelName { identity, depolarizing, fully_depolarizing, unitary, cnot, z3, random_unitary, sru };

// Throws DimensionError for names outside ChannelName.
ChannelName parse_channel_name(std::string_view name);
std::string_view to_string(ChannelName name);

struct ChannelParams {
  Dims dims;  // identity
  double p = 0.0;
  int d = 2;
  std::optional<ComplexMatrix> sigma;    // fully_depolarizing
  std::optional<ComplexMatrix> unitary;  // unitary
  std::vector<double> probabilities;     // random_unitary, sru
  std::vector<ComplexMatrix> unitaries;  // random_unitary; A side for sru
  std::vector<ComplexMatrix> b_unitaries;
};

Channel make_named_channel(ChannelName name, const ChannelParams& params);

}  // namespace chandet
