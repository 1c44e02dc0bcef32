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

#include "qunc/instance.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "qunc/errors.hpp"

namespace qunc {

namespace {

using Json = nlohmann::ordered_json;

ComplexMatrix parse_matrix(const Json& j, int dim, const std::string& what) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(dim)) {
    throw ParseError(what + ": expected " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      throw ParseError(what + ": row " + std::to_string(i) + " must hold " +
                       std::to_string(dim) + " entries");
    }
    for (int k = 0; k < dim; ++k) {
      const Json& e = row[static_cast<std::size_t>(k)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ParseError(what + ": entry (" + std::to_string(i) + ", " + std::to_string(k) +
                         ") must be a [re, im] pair of numbers");
      }
      m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

std::string number(double v) { return Json(v).dump(); }

// One matrix row per line keeps witness output and hand-edited files readable.
void write_matrix(std::ostream& os, const ComplexMatrix& m, const std::string& indent) {
  os << "[\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << indent << "  [";
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (k > 0) os << ", ";
      os << "[" << number(m(i, k).real()) << ", " << number(m(i, k).imag()) << "]";
    }
    os << "]" << (i + 1 < m.rows() ? "," : "") << "\n";
  }
  os << indent << "]";
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");

  InstanceFile out;
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<int>() < 1) {
    throw ParseError("\"dim\" must be a positive integer");
  }
  out.dim = doc["dim"].get<int>();
  if (!doc.contains("rho")) throw ParseError("missing \"rho\"");
  out.rho = parse_matrix(doc["rho"], out.dim, "rho");

  if (!doc.contains("observables") || !doc["observables"].is_object()) {
    throw ParseError("\"observables\" must be an object of named matrices");
  }
  for (const auto& [name, value] : doc["observables"].items()) {
    out.observables.emplace_back(name, parse_matrix(value, out.dim, "observable " + name));
  }

  if (doc.contains("s_values")) {
    const Json& s = doc["s_values"];
    if (!s.is_array()) throw ParseError("\"s_values\" must be an array of numbers");
    for (const Json& v : s) {
      if (!v.is_number()) throw ParseError("\"s_values\" must be an array of numbers");
      out.s_values.push_back(v.get<double>());
    }
  }
  return out;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string dump_instance(const InstanceFile& instance) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << instance.dim << ",\n  \"rho\": ";
  write_matrix(os, instance.rho, "  ");
  os << ",\n  \"observables\": {";
  for (std::size_t k = 0; k < instance.observables.size(); ++k) {
    const auto& [name, m] = instance.observables[k];
    os << (k == 0 ? "\n" : ",\n") << "    " << Json(name).dump() << ": ";
    write_matrix(os, m, "    ");
  }
  os << (instance.observables.empty() ? "}" : "\n  }");
  if (!instance.s_values.empty()) {
    os << ",\n  \"s_values\": [";
    for (std::size_t k = 0; k < instance.s_values.size(); ++k) {
      os << (k == 0 ? "" : ", ") << number(instance.s_values[k]);
    }
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

Instance validate_instance(const InstanceFile& instance) {
  const auto fail = [](const std::string& what, const Error& e) -> ValidationError {
    return ValidationError(what + ": " + e.what());
  };
  std::optional<DensityMatrix> rho;
  try {
    rho.emplace(make_density(instance.rho));
  } catch (const Error& e) {
    throw fail("rho", e);
  }
  Instance out{*rho, {}, instance.s_values};
  for (const auto& [name, m] : instance.observables) {
    try {
      out.observables.emplace_back(name, make_observable(m));
    } catch (const Error& e) {
      throw fail("observable " + name, e);
    }
  }
  for (double s : instance.s_values) {
    if (!(s >= 0.5) || !std::isfinite(s)) {
      throw ValidationError("s_values: InvalidS: " + std::to_string(s) + " is outside [1/2, inf)");
    }
  }
  return out;
}

}  // namespace qunc
