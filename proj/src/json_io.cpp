// Copyright 2026 The hamsim Authors
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

#include "hamsim/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hamsim::json_io {

namespace {

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) throw ValidationError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ValidationError(where + ": number is not finite");
  return v;
}

Complex complex_at(const json& j, const std::string& where) {
  if (j.is_number()) return {number_at(j, where), 0.0};
  if (!j.is_array() || j.size() != 2) {
    throw ValidationError(where + ": expected [re, im]");
  }
  return {number_at(j[0], where + "[0]"), number_at(j[1], where + "[1]")};
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(where + ": missing key \"" + key + "\"");
  }
  return j.at(key);
}

void write_number(std::ostringstream& os, double v) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

bool is_flat(const json& j) {
  for (const auto& e : j) {
    if (e.is_structured() && !(e.is_array() && is_flat(e))) return false;
  }
  return true;
}

void write(std::ostringstream& os, const json& j, int depth) {
  const std::string pad(2 * depth, ' ');
  const std::string inner(2 * (depth + 1), ' ');
  switch (j.type()) {
    case json::value_t::number_float:
      write_number(os, j.get<double>());
      return;
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Numeric arrays (vectors, complex entries, matrices) stay on one line.
      const bool flat = is_flat(j);
      os << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << (flat ? ", " : ",");
        if (!flat) os << '\n' << inner;
        write(os, e, depth + 1);
        first = false;
      }
      if (!flat) os << '\n' << pad;
      os << ']';
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        os << '\n' << inner << json(it.key()).dump() << ": ";
        write(os, it.value(), depth + 1);
        first = false;
      }
      os << '\n' << pad << '}';
      return;
    }
    default:
      os << j.dump();
      return;
  }
}

}  // namespace

CMat matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ValidationError(where + ": expected a matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) {
    throw ValidationError(where + "[0]: expected a row array");
  }
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[r];
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ValidationError(rw + ": rows must all have " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_at(row[c], rw + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

json matrix_to_json(const CMat& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Vec3 vec3_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw ValidationError(where + ": expected 3 numbers");
  return Vec3(number_at(j[0], where + "[0]"), number_at(j[1], where + "[1]"),
              number_at(j[2], where + "[2]"));
}

json vec_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

PauliHamiltonian hamiltonian_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected a Hamiltonian object");
  const bool has_matrix = j.contains("matrix");
  const bool has_pauli = j.contains("pauli");
  if (has_matrix == has_pauli) {
    throw ValidationError(where + ": give exactly one of \"matrix\" or \"pauli\"");
  }
  if (has_matrix) {
    const CMat m = matrix_from_json(j.at("matrix"), where + ".matrix");
    if (m.rows() != 4 || m.cols() != 4) {
      throw ValidationError(where + ".matrix: two-qubit Hamiltonian must be 4x4");
    }
    try {
      return from_matrix(m);
    } catch (const ValidationError& e) {
      throw ValidationError(where + ".matrix: " + e.what());
    }
  }
  const json& p = j.at("pauli");
  const std::string pw = where + ".pauli";
  PauliHamiltonian out;
  if (p.contains("a")) out.a = number_at(p.at("a"), pw + ".a");
  if (p.contains("m")) out.m = vec3_from_json(p.at("m"), pw + ".m");
  if (p.contains("n")) out.n = vec3_from_json(p.at("n"), pw + ".n");
  const json& h = member(p, "h", pw);
  if (!h.is_array() || h.size() != 3) throw ValidationError(pw + ".h: expected 3x3");
  for (int i = 0; i < 3; ++i) {
    out.h.row(i) = vec3_from_json(h[i], pw + ".h[" + std::to_string(i) + "]").transpose();
  }
  return out;
}

json hamiltonian_to_json(const PauliHamiltonian& p) {
  json h = json::array();
  for (int i = 0; i < 3; ++i) h.push_back(vec_to_json(p.h.row(i).transpose()));
  return {{"pauli", {{"a", p.a}, {"m", vec_to_json(p.m)}, {"n", vec_to_json(p.n)}, {"h", h}}}};
}

json canonical_form_to_json(const CanonicalForm& c) {
  return {{"h", vec_to_json(c.h)},
          {"u", matrix_to_json(c.u)},
          {"v", matrix_to_json(c.v)},
          {"removed_local_terms",
           {{"a", c.removed_a}, {"m", vec_to_json(c.removed_m)}, {"n", vec_to_json(c.removed_n)}}}};
}

json protocol_to_json(const SimulationProtocol& p) {
  json terms = json::array();
  for (const ProtocolTerm& t : p.terms) {
    json perm = json::array();
    for (int i : t.perm) perm.push_back(i + 1);
    terms.push_back({{"p", t.p},
                     {"permutation", perm},
                     {"u", matrix_to_json(t.pair.u)},
                     {"v", matrix_to_json(t.pair.v)}});
  }
  return {{"s", p.s},
          {"source_h", vec_to_json(p.source_h)},
          {"target_h", vec_to_json(p.target_h)},
          {"terms", terms}};
}

SimulationProtocol protocol_from_json(const json& j) {
  const std::string where = "protocol";
  SimulationProtocol out;
  out.s = number_at(member(j, "s", where), where + ".s");
  out.source_h = vec3_from_json(member(j, "source_h", where), where + ".source_h");
  out.target_h = vec3_from_json(member(j, "target_h", where), where + ".target_h");
  const json& terms = member(j, "terms", where);
  if (!terms.is_array() || terms.empty()) {
    throw ValidationError(where + ".terms: expected a nonempty array");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string tw = where + ".terms[" + std::to_string(k) + "]";
    ProtocolTerm t;
    t.p = number_at(member(terms[k], "p", tw), tw + ".p");
    if (t.p < 0.0) throw ValidationError(tw + ".p: probability is negative");
    t.pair.u = matrix_from_json(member(terms[k], "u", tw), tw + ".u");
    t.pair.v = matrix_from_json(member(terms[k], "v", tw), tw + ".v");
    for (const CMat* m : {&t.pair.u, &t.pair.v}) {
      if (m->rows() != 2 || m->cols() != 2 || unitarity_defect(*m) > 1e-10) {
        throw ValidationError(tw + ": u and v must be 2x2 unitaries");
      }
    }
    if (terms[k].contains("permutation")) {
      const json& perm = terms[k].at("permutation");
      if (!perm.is_array() || perm.size() != 4) {
        throw ValidationError(tw + ".permutation: expected 4 entries");
      }
      for (int i = 0; i < 4; ++i) {
        if (!perm[i].is_number_integer() || perm[i].get<int>() < 1 || perm[i].get<int>() > 4) {
          throw ValidationError(tw + ".permutation: entries must be integers 1..4");
        }
        t.perm[i] = perm[i].get<int>() - 1;
      }
    }
    total += t.p;
    out.terms.push_back(std::move(t));
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError(where + ".terms: probabilities must sum to 1");
  }
  return out;
}

json trotter_to_json(const TrotterReport& r) {
  return {{"times", r.times},
          {"errors", r.errors},
          {"fitted_slope", r.fitted_slope},
          {"exact", r.exact},
          {"window", r.window}};
}

std::string dump(const json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << '\n';
  return os.str();
}

}  // namespace hamsim::json_io
