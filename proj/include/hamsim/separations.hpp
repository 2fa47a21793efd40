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

// Explicit Hamiltonian pairs that local unitaries with ancillas can
// simulate at unit efficiency while plain local unitaries cannot. The
// impossibility halves are proofs; what is checked here is their
// computable skeleton (forced local terms and a negative witness).

#pragma once

#include "hamsim/protocol.hpp"

namespace hamsim {

/// K = P0⊗P0 + Σ_{i>=1} P_i⊗P_i and K' = P0⊗P1 + Σ_{i>=1} P_i⊗P_i on two
/// d-level systems.
struct DLevelPair {
  int d = 3;
  CMat K;
  CMat K_prime;

  static DLevelPair make(int d);
};

struct WitnessReport {
  int d = 0;
  bool achieved = false;       // E(K) = K' within tolerance
  double achieved_residual = 0.0;
  double isometry_defect = 0.0;  // rows of the printed partial isometry
  double unitarity_defect = 0.0;  // completed U
  CMat forced_m;
  CMat forced_n;
  double forced_a = 0.0;
  double witness_value = 0.0;  // tr[(P2⊗P1)(K' - forced locals)]
  bool certified = false;      // achieved and witness_value < 0
};

/// Completes orthonormal rows to a unitary by Gram-Schmidt over the
/// standard basis, taken in index order.
CMat complete_to_unitary(const CMat& rows);

/// The d-level separation. Throws ValidationError for d < 3.
WitnessReport example1(int d);

struct Example2Report {
  double slice_residual = 0.0;     // ‖<0_A'|U(σ3⊗I)U†|0_A'> - I‖_F
  double identity_residual = 0.0;  // ‖E(σ3⊗σ3⊗σ3) - I⊗σ3⊗σ3‖_F
  bool achieved = false;
  double source_trace = 0.0;  // tr σ3 on the first factor
  double target_trace = 0.0;  // tr I on the first factor
  bool certified = false;     // achieved and the traces differ
};

/// The three-qubit separation K = σ3⊗σ3⊗σ3 → K' = I⊗σ3⊗σ3.
Example2Report example2();

/// The ancilla unitaries used by the two constructions.
AncillaConjugation example1_conjugation(int d);
AncillaConjugation example2_conjugation();

}  // namespace hamsim
