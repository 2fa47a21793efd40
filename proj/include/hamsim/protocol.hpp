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

#pragma once

#include <map>
#include <vector>

#include "hamsim/majorization.hpp"
#include "hamsim/pauli_ham.hpp"

namespace hamsim {

struct LocalUnitaryPair {
  CMat u = CMat::Identity(2, 2);
  CMat v = CMat::Identity(2, 2);

  CMat product() const { return kron(u, v); }
};

/// Local unitaries realizing every permutation of the Bell vectors (as
/// projectors; the vectors themselves may pick up phases).
class BellPermutationTable {
 public:
  /// Builds the table from the three adjacent-transposition generators.
  /// Throws std::logic_error if any generator or composed entry fails the
  /// projector check.
  static const BellPermutationTable& instance();

  const LocalUnitaryPair& at(const Perm4& perm) const { return table_.at(perm); }
  /// Generator word (indices 0,1,2 for the swaps (1 2), (2 3), (3 4)),
  /// first-applied first.
  const std::vector<int>& word(const Perm4& perm) const { return words_.at(perm); }
  std::size_t size() const { return table_.size(); }

  /// max_i ‖(u⊗v) Π_i (u⊗v)† - Π_{perm[i]}‖_F.
  static double projector_defect(const LocalUnitaryPair& pair, const Perm4& perm);

 private:
  BellPermutationTable();
  std::map<Perm4, LocalUnitaryPair> table_;
  std::map<Perm4, std::vector<int>> words_;
};

/// The three generators for the Bell swaps (1 2), (2 3), (3 4).
LocalUnitaryPair bell_swap_generator(int which);

struct ProtocolTerm {
  double p = 0.0;
  LocalUnitaryPair pair;
  Perm4 perm = kIdentityPerm;
};

/// Time-sharing schedule: H is applied for a fraction p_k of the time,
/// dressed by u_k⊗v_k. Synthesized schedules act on canonical forms.
struct SimulationProtocol {
  std::vector<ProtocolTerm> terms;
  double s = 0.0;
  Vec3 target_h = Vec3::Zero();
  Vec3 source_h = Vec3::Zero();
};

/// s exceeds the optimal simulation factor.
class InfeasibleFactorError : public DomainError {
 public:
  InfeasibleFactorError(const std::string& what, double optimum)
      : DomainError(what), optimum_(optimum) {}
  double optimum() const { return optimum_; }

 private:
  double optimum_;
};

/// Protocol simulating s·H'_canon with H_canon, 0 <= s <= s_{H'|H}.
SimulationProtocol synthesize(const CanonicalForm& source,
                              const CanonicalForm& target, double s);

/// Same, at the optimal factor. Throws DomainError when the factor is 0 or
/// unbounded (nothing to simulate).
SimulationProtocol synthesize_optimal(const CanonicalForm& source,
                                      const CanonicalForm& target);

/// Σ_k p_k (u_k⊗v_k) H (u_k⊗v_k)†.
CMat reconstruct(const SimulationProtocol& protocol, const CMat& h);

/// U acts on A⊗A', V on B⊗B' (system factor first in both).
struct AncillaConjugation {
  CMat U;
  CMat V;
  int d_a = 2;
  int d_a_anc = 1;
  int d_b = 2;
  int d_b_anc = 1;

  /// Checks shapes and unitarity (ValidationError).
  void validate() const;
};

/// <0_A' 0_B'| (U⊗V)(H⊗I_A'B')(U⊗V)† |0_A' 0_B'>, with H on A⊗B.
CMat luanc_conjugate(const CMat& h, const AncillaConjugation& conj);

struct TwirlTerm {
  double p = 0.0;
  CMat U;
  CMat V;
};

struct TwirlEnsemble {
  std::vector<TwirlTerm> terms;
};

/// U_a = (I⊗D_a)U, V_b = (I⊗D_b)V with D_a = Σ_l e^{2πi a l/d_A'} |l><l|,
/// uniform weights 1/(d_A' d_B').
TwirlEnsemble build_twirl(const AncillaConjugation& conj);

/// Frobenius distance between the twirled average and the projected
/// conjugation, both applied to blank-ancilla inputs ψ⊗|0_A'0_B'>.
double verify_twirl(const AncillaConjugation& conj, const CMat& h);

/// T'/s_{H'|H}: the time H needs to reproduce exp(-i T' H'). Zero when the
/// target is zero; DomainError when the factor vanishes.
double gate_time_bound(const CanonicalForm& target, const CanonicalForm& source,
                       double t_prime);

}  // namespace hamsim
