// Copyright 2026 The qunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUNC_INSTANCE_HPP
#define QUNC_INSTANCE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qunc/linalg.hpp"
#include "qunc/states.hpp"

namespace qunc {

/// Malformed JSON or a document that does not follow the instance schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed document whose operators violate a state/observable invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw contents of an instance file. Matrices are row-major nested arrays of
/// [re, im] pairs:
///
///   {"dim": 2,
///    "rho": [[[0.7, 0], [0, 0]], [[0, 0], [0.3, 0]]],
///    "observables": {"X": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]},
///    "s_values": [0.5, 1.0]}
///
/// "s_values" is optional. Observables keep their file order.
struct InstanceFile {
  int dim = 0;
  ComplexMatrix rho;
  std::vector<std::pair<std::string, ComplexMatrix>> observables;
  std::vector<double> s_values;
};

struct Instance {
  DensityMatrix rho;
  std::vector<std::pair<std::string, Observable>> observables;
  std::vector<double> s_values;
};

/// Throws ParseError.
InstanceFile parse_instance(const std::string& text);

/// Throws IoError, ParseError.
InstanceFile read_instance_file(const std::string& path);

/// Serialises with round-trip (17 significant digit) doubles.
std::string dump_instance(const InstanceFile& instance);

/// Throws ValidationError naming the violated invariant.
Instance validate_instance(const InstanceFile& instance);

}  // namespace qunc

#endif  // QUNC_INSTANCE_HPP
