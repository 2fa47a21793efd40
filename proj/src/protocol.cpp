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

#include "hamsim/protocol.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace hamsim {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTableTol = 1e-12;

CMat half_turn(int axis, double sign) {
  return (pauli(0) + sign * kI * pauli(axis)) / std::sqrt(2.0);
}

Perm4 adjacent_swap(int j) {
  Perm4 p = kIdentityPerm;
  std::swap(p[j], p[j + 1]);
  return p;
}

// Bubble-sorts the one-line notation of `perm`. Each swap of positions
// (j, j+1) right-composes with τ_j, so perm = τ_{j_m} ∘ … ∘ τ_{j_1} and
// the swaps come out in first-applied-first order.
std::vector<int> bubble_word(const Perm4& perm) {
  Perm4 line = perm;
  std::vector<int> word;
  for (int pass = 0; pass < 3; ++pass) {
    for (int j = 0; j < 3 - pass; ++j) {
      if (line[j] > line[j + 1]) {
        std::swap(line[j], line[j + 1]);
        word.push_back(j);
      }
    }
  }
  return word;
}

struct AncillaLayout {
  int d_a, d_a_anc, d_b, d_b_anc;

  int total() const { return d_a * d_a_anc * d_b * d_b_anc; }
  int system() const { return d_a * d_b; }
  int index(int a, int a_anc, int b, int b_anc) const {
    return ((a * d_a_anc + a_anc) * d_b + b) * d_b_anc + b_anc;
  }
};

AncillaLayout layout_of(const AncillaConjugation& c) {
  return {c.d_a, c.d_a_anc, c.d_b, c.d_b_anc};
}

// H⊗I_{A'B'} in the (A, A', B, B') ordering.
CMat embed_with_ancillas(const CMat& h, const AncillaLayout& l) {
  CMat out = CMat::Zero(l.total(), l.total());
  for (int a = 0; a < l.d_a; ++a) {
    for (int b = 0; b < l.d_b; ++b) {
      for (int c = 0; c < l.d_a; ++c) {
        for (int e = 0; e < l.d_b; ++e) {
          const Complex val = h(a * l.d_b + b, c * l.d_b + e);
          if (val == Complex{}) continue;
          for (int x = 0; x < l.d_a_anc; ++x) {
            for (int y = 0; y < l.d_b_anc; ++y) {
              out(l.index(a, x, b, y), l.index(c, x, e, y)) = val;
            }
          }
        }
      }
    }
  }
  return out;
}

// Isometry AB -> AA'BB' onto the blank-ancilla slice.
CMat blank_ancilla_isometry(const AncillaLayout& l) {
  CMat j = CMat::Zero(l.total(), l.system());
  for (int a = 0; a < l.d_a; ++a) {
    for (int b = 0; b < l.d_b; ++b) j(l.index(a, 0, b, 0), a * l.d_b + b) = 1.0;
  }
  return j;
}

CMat phase_diagonal(int shift, int dim) {
  CMat d = CMat::Zero(dim, dim);
  for (int l = 0; l < dim; ++l) {
    d(l, l) = std::exp(kI * (2.0 * std::numbers::pi * shift * l / dim));
  }
  return d;
}

void require_system_operator(const CMat& h, const AncillaConjugation& conj) {
  const int dim = conj.d_a * conj.d_b;
  if (h.rows() != dim || h.cols() != dim) {
    std::ostringstream os;
    os << "Hamiltonian is " << h.rows() << "x" << h.cols() << " but the system A⊗B has dimension "
       << dim;
    throw ValidationError(os.str());
  }
}

}  // namespace

LocalUnitaryPair bell_swap_generator(int which) {
  switch (which) {
    case 0:
      return {half_turn(1, -1.0), half_turn(1, -1.0)};
    case 1:
      // Same sign on both sides. The mixed-sign pair (I+iσ3)⊗(I-iσ3)
      // fixes Φ2, Φ3 and exchanges Φ1, Φ4 instead.
      return {half_turn(3, -1.0), half_turn(3, -1.0)};
    case 2:
      return {half_turn(1, +1.0), half_turn(1, -1.0)};
    default:
      throw ValidationError("Bell swap generator index must be 0, 1 or 2");
  }
}

double BellPermutationTable::projector_defect(const LocalUnitaryPair& pair,
                                              const Perm4& perm) {
  const CMat w = pair.product();
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    const CMat moved = w * bell_projector(i) * w.adjoint();
    worst = std::max(worst, (moved - bell_projector(perm[i])).norm());
  }
  return worst;
}

BellPermutationTable::BellPermutationTable() {
  std::array<LocalUnitaryPair, 3> gens;
  for (int j = 0; j < 3; ++j) {
    gens[j] = bell_swap_generator(j);
    const double defect = projector_defect(gens[j], adjacent_swap(j));
    if (defect > kTableTol) {
      std::ostringstream os;
      os << "Bell swap generator " << j << " fails its projector check (defect " << defect << ")";
      throw std::logic_error(os.str());
    }
  }
  for (const Perm4& perm : all_perms()) {
    const std::vector<int> word = bubble_word(perm);
    LocalUnitaryPair pair;
    for (int j : word) {
      pair.u = gens[j].u * pair.u;
      pair.v = gens[j].v * pair.v;
    }
    const double defect = projector_defect(pair, perm);
    if (defect > kTableTol) {
      std::ostringstream os;
      os << "composed Bell permutation fails its projector check (defect " << defect << ")";
      throw std::logic_error(os.str());
    }
    table_.emplace(perm, std::move(pair));
    words_.emplace(perm, word);
  }
}

const BellPermutationTable& BellPermutationTable::instance() {
  static const BellPermutationTable table;
  return table;
}

SimulationProtocol synthesize(const CanonicalForm& source,
                              const CanonicalForm& target, double s) {
  if (!std::isfinite(s) || s < 0.0) {
    throw ValidationError("simulation factor s must be finite and nonnegative");
  }
  const BellSpectrum lambda = lambda_from_h(source.h);
  const BellSpectrum lambda_t = lambda_from_h(target.h);
  const SimulationFactor opt = simulation_factor(lambda_t, lambda);
  if (!opt.unbounded() && s > opt.value * (1.0 + 1e-12) + 1e-14) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "s = " << s << " exceeds the optimal simulation factor " << opt.value;
    throw InfeasibleFactorError(msg.str(), opt.value);
  }
  const double s_eff = opt.unbounded() ? s : std::min(s, opt.value);

  const Vec4 mu = s_eff * lambda_t.values();
  const BirkhoffDecomposition dec = birkhoff_decompose(mu, lambda);

  const BellPermutationTable& table = BellPermutationTable::instance();
  SimulationProtocol out;
  out.s = s;
  out.source_h = source.h;
  out.target_h = target.h;
  for (const BirkhoffTerm& t : dec.terms) {
    out.terms.push_back({t.weight, table.at(t.perm), t.perm});
  }
  return out;
}

SimulationProtocol synthesize_optimal(const CanonicalForm& source,
                                      const CanonicalForm& target) {
  const SimulationFactor opt =
      simulation_factor(lambda_from_h(target.h), lambda_from_h(source.h));
  if (opt.unbounded()) {
    throw DomainError("target is zero: every s is achievable, pass an explicit s");
  }
  return synthesize(source, target, opt.value);
}

CMat reconstruct(const SimulationProtocol& protocol, const CMat& h) {
  CMat out = CMat::Zero(h.rows(), h.cols());
  for (const ProtocolTerm& t : protocol.terms) {
    const CMat w = t.pair.product();
    if (w.rows() != h.rows()) {
      throw ValidationError("protocol unitaries do not match the Hamiltonian dimension");
    }
    out += t.p * (w * h * w.adjoint());
  }
  return out;
}

void AncillaConjugation::validate() const {
  if (d_a < 1 || d_a_anc < 1 || d_b < 1 || d_b_anc < 1) {
    throw ValidationError("all subsystem dimensions must be positive");
  }
  const auto check = [](const CMat& m, int dim, const char* name) {
    if (m.rows() != dim || m.cols() != dim) {
      std::ostringstream os;
      os << name << " is " << m.rows() << "x" << m.cols() << ", expected " << dim << "x" << dim;
      throw ValidationError(os.str());
    }
    if (!m.allFinite() || unitarity_defect(m) > kTableTol * dim) {
      throw ValidationError(std::string(name) + " is not unitary");
    }
  };
  check(U, d_a * d_a_anc, "U");
  check(V, d_b * d_b_anc, "V");
}

CMat luanc_conjugate(const CMat& h, const AncillaConjugation& conj) {
  conj.validate();
  require_system_operator(h, conj);
  const AncillaLayout l = layout_of(conj);
  const CMat w = kron(conj.U, conj.V);
  const CMat conjugated = w * embed_with_ancillas(h, l) * w.adjoint();
  const CMat j = blank_ancilla_isometry(l);
  return j.adjoint() * conjugated * j;
}

TwirlEnsemble build_twirl(const AncillaConjugation& conj) {
  conj.validate();
  TwirlEnsemble out;
  const double p = 1.0 / (conj.d_a_anc * conj.d_b_anc);
  const CMat id_a = CMat::Identity(conj.d_a, conj.d_a);
  const CMat id_b = CMat::Identity(conj.d_b, conj.d_b);
  for (int a = 0; a < conj.d_a_anc; ++a) {
    const CMat ua = kron(id_a, phase_diagonal(a, conj.d_a_anc)) * conj.U;
    for (int b = 0; b < conj.d_b_anc; ++b) {
      const CMat vb = kron(id_b, phase_diagonal(b, conj.d_b_anc)) * conj.V;
      out.terms.push_back({p, ua, vb});
    }
  }
  return out;
}

double verify_twirl(const AncillaConjugation& conj, const CMat& h) {
  conj.validate();
  require_system_operator(h, conj);
  const AncillaLayout l = layout_of(conj);
  const CMat embedded = embed_with_ancillas(h, l);
  const CMat j = blank_ancilla_isometry(l);

  CMat twirled = CMat::Zero(l.total(), l.system());
  for (const TwirlTerm& t : build_twirl(conj).terms) {
    const CMat w = kron(t.U, t.V);
    twirled += t.p * (w * embedded * w.adjoint() * j);
  }
  const CMat w = kron(conj.U, conj.V);
  const CMat projected = j * (j.adjoint() * (w * embedded * w.adjoint()) * j);
  return (twirled - projected).norm();
}

double gate_time_bound(const CanonicalForm& target, const CanonicalForm& source,
                       double t_prime) {
  if (!std::isfinite(t_prime) || t_prime < 0.0) {
    throw ValidationError("target time must be finite and nonnegative");
  }
  const SimulationFactor f =
      simulation_factor(lambda_from_h(target.h), lambda_from_h(source.h));
  if (f.unbounded()) return 0.0;
  if (f.value <= 0.0) {
    throw DomainError("simulation factor is zero: the source cannot simulate the target");
  }
  return t_prime / f.value;
}

}  // namespace hamsim
