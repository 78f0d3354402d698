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

#include "chandet/qmath.hpp"

namespace chandet {

ComplexMatrix pauli(char letter) {
  Eigen::Matrix2cd m;
  switch (letter) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw DimensionError(std::string("unknown Pauli letter '") + letter + "'");
  }
  return ComplexMatrix(Eigen::MatrixXcd(m), Dims{2});
}

ComplexMatrix pauli_string(std::string_view letters) {
  if (letters.empty()) throw DimensionError("empty Pauli string");
  ComplexMatrix out = pauli(letters.front());
  for (std::size_t k = 1; k < letters.size(); ++k) out = kron(out, pauli(letters[k]));
  return out;
}

}  // namespace chandet
