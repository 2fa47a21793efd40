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
#include <set>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace hamsim;
using namespace hamsim::testing;

namespace {

CanonicalForm form(const Vec3& h) {
  return canonicalize(PauliHamiltonian::coupling(h.asDiagonal()));
}

CMat half_turn_z(double sign) {
  return (CMat::Identity(2, 2) + Complex(0, sign) * pauli(3)) / std::sqrt(2.0);
}

double soundness_residual(const SimulationProtocol& p) {
  return (reconstruct(p, canonical_matrix(p.source_h)) - p.s * canonical_matrix(p.target_h)).norm();
}

}  // namespace

TEST(bell_permutation_table, has_all_24_entries) {
  const BellPermutationTable& table = BellPermutationTable::instance();
  ASSERT_EQ(table.size(), 24u);
  for (const Perm4& p : all_perms()) {
    const LocalUnitaryPair& pair = table.at(p);
    EXPECT_LE(BellPermutationTable::projector_defect(pair, p), 1e-12);
    EXPECT_LE(unitarity_defect(pair.u), 1e-12);
    EXPECT_LE(unitarity_defect(pair.v), 1e-12);
  }
  EXPECT_TRUE(table.word(kIdentityPerm).empty());
}

TEST(bell_permutation_table, generators_are_adjacent_swaps) {
  const Perm4 expect[3] = {{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}};
  for (int g = 0; g < 3; ++g) {
    EXPECT_LE(BellPermutationTable::projector_defect(bell_swap_generator(g), expect[g]), 1e-12);
    EXPECT_EQ(BellPermutationTable::instance().word(expect[g]), std::vector<int>{g});
  }
  EXPECT_THROW(bell_swap_generator(3), ValidationError);
}

TEST(bell_permutation_table, mixed_sign_z_pair_swaps_first_and_last) {
  // (I+iσ3)/√2 ⊗ (I-iσ3)/√2 fixes Φ2, Φ3 and exchanges Φ1 with Φ4.
  const LocalUnitaryPair mixed{half_turn_z(+1), half_turn_z(-1)};
  EXPECT_LE(BellPermutationTable::projector_defect(mixed, {3, 1, 2, 0}), 1e-12);
  EXPECT_GT(BellPermutationTable::projector_defect(mixed, {0, 2, 1, 3}), 0.5);
}

TEST(bell_permutation_table, words_compose_to_entries) {
  const BellPermutationTable& table = BellPermutationTable::instance();
  for (const Perm4& p : all_perms()) {
    CMat u = CMat::Identity(2, 2), v = CMat::Identity(2, 2);
    for (int g : table.word(p)) {
      const LocalUnitaryPair gen = bell_swap_generator(g);
      u = gen.u * u;
      v = gen.v * v;
    }
    EXPECT_LE(BellPermutationTable::projector_defect({u, v}, p), 1e-12);
  }
}

TEST(bell_permutation_table, conjugation_permutes_bell_spectrum) {
  const Vec3 h(0.9, 0.4, -0.2);
  const CMat m = canonical_matrix(h);
  const Vec4 lambda(h(0) + h(1) - h(2), h(0) - h(1) + h(2), -h(0) + h(1) + h(2), -h.sum());
  for (const Perm4& p : all_perms()) {
    const CMat w = BellPermutationTable::instance().at(p).product();
    const CMat b = bell_basis();
    const CMat rotated = b.adjoint() * (w * m * w.adjoint()) * b;
    const Vec4 permuted = apply_perm(p, lambda);
    for (int i = 0; i < 4; ++i) ASSERT_NEAR(rotated(i, i).real(), permuted(i), 1e-12);
  }
}

TEST(synthesize, ising_to_heisenberg_at_one_third) {
  const SimulationProtocol p = synthesize_optimal(form({1, 0, 0}), form({1, 1, 1}));
  EXPECT_NEAR(p.s, 1.0 / 3.0, 1e-15);
  EXPECT_LE(p.terms.size(), 3u);
  EXPECT_LE(soundness_residual(p), 1e-12);
  double total = 0;
  for (const auto& t : p.terms) total += t.p;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(synthesize, heisenberg_to_ising_at_one) {
  const SimulationProtocol p = synthesize_optimal(form({1, 1, 1}), form({1, 0, 0}));
  EXPECT_NEAR(p.s, 1.0, 1e-15);
  EXPECT_LE(soundness_residual(p), 1e-12);
}

TEST(synthesize, below_optimum_is_feasible) {
  const SimulationProtocol p = synthesize(form({1, 0, 0}), form({1, 1, 1}), 0.2);
  EXPECT_EQ(p.s, 0.2);
  EXPECT_LE(soundness_residual(p), 1e-12);
  EXPECT_LE(p.terms.size(), 4u);
}

TEST(synthesize, above_optimum_reports_the_optimum) {
  try {
    synthesize(form({1, 0, 0}), form({1, 1, 1}), 0.5);
    FAIL() << "expected InfeasibleFactorError";
  } catch (const InfeasibleFactorError& e) {
    EXPECT_NEAR(e.optimum(), 1.0 / 3.0, 1e-15);
  }
  EXPECT_THROW(synthesize(form({1, 0, 0}), form({1, 1, 1}), -0.1), ValidationError);
  EXPECT_THROW(synthesize(form({1, 0, 0}), form({1, 1, 1}), std::nan("")), ValidationError);
}

TEST(synthesize, zero_target) {
  EXPECT_THROW(synthesize_optimal(form({1, 0, 0}), form({0, 0, 0})), DomainError);
  const SimulationProtocol p = synthesize(form({1, 0, 0}), form({0, 0, 0}), 5.0);
  EXPECT_LE(soundness_residual(p), 1e-12);
}

TEST(synthesize, soundness_property) {
  for (int trial = 0; trial < 500; ++trial) {
    const Vec3 hs = (trial % 5 == 0) ? random_degenerate_h() : random_canonical_h();
    const Vec3 ht = (trial % 7 == 0) ? random_degenerate_h() : random_canonical_h();
    const SimulationProtocol p = synthesize_optimal(form(hs), form(ht));
    ASSERT_LE(soundness_residual(p), 1e-9);
    ASSERT_LE(p.terms.size(), 3u);
    for (const auto& t : p.terms) {
      ASSERT_GT(t.p, 0.0);
      ASSERT_LE(BellPermutationTable::projector_defect(t.pair, t.perm), 1e-12);
    }
  }
}

TEST(reconstruct, preserves_trace_and_hermiticity) {
  for (int trial = 0; trial < 200; ++trial) {
    SimulationProtocol p;
    double total = 0;
    for (int k = 0; k < 3; ++k) {
      const double w = uniform(0.1, 1);
      p.terms.push_back({w, {random_unitary(2), random_unitary(2)}, kIdentityPerm});
      total += w;
    }
    for (auto& t : p.terms) t.p /= total;
    const CMat h = random_hermitian(4);
    const CMat r = reconstruct(p, h);
    ASSERT_NEAR(std::abs(r.trace() - h.trace()), 0.0, 1e-12);
    ASSERT_LE(hermiticity_defect(r), 1e-12);
    ASSERT_LE(r.norm(), h.norm() * (1 + 1e-12));
  }
  EXPECT_THROW(reconstruct(synthesize_optimal(form({1, 0, 0}), form({1, 1, 1})), CMat::Identity(2, 2)),
               ValidationError);
}

TEST(luanc_conjugate, without_ancillas_is_plain_conjugation) {
  for (int trial = 0; trial < 100; ++trial) {
    const AncillaConjugation c{random_unitary(2), random_unitary(2)};
    const CMat h = random_hermitian(4);
    const CMat w = kron(c.U, c.V);
    ASSERT_LE((luanc_conjugate(h, c) - w * h * w.adjoint()).norm(), 1e-12);
  }
}

TEST(luanc_conjugate, ancilla_only_unitary_is_identity_map) {
  AncillaConjugation c{kron(CMat::Identity(2, 2), random_unitary(3)), CMat::Identity(2, 2)};
  c.d_a_anc = 3;
  const CMat h = random_hermitian(4);
  EXPECT_LE((luanc_conjugate(h, c) - h).norm(), 1e-12);
}

TEST(luanc_conjugate, unital_and_hermitian) {
  for (int trial = 0; trial < 100; ++trial) {
    AncillaConjugation c{random_unitary(4), random_unitary(6)};
    c.d_a_anc = 2;
    c.d_b_anc = 3;
    EXPECT_LE((luanc_conjugate(CMat::Identity(4, 4), c) - CMat::Identity(4, 4)).norm(), 1e-12);
    EXPECT_LE(hermiticity_defect(luanc_conjugate(random_hermitian(4), c)), 1e-12);
  }
}

TEST(luanc_conjugate, validation) {
  AncillaConjugation c{random_unitary(2), random_unitary(2)};
  EXPECT_THROW(luanc_conjugate(CMat::Identity(3, 3), c), ValidationError);
  c.U = 2.0 * c.U;
  EXPECT_THROW(c.validate(), ValidationError);
  c.U = random_unitary(4);
  EXPECT_THROW(c.validate(), ValidationError);
  c.d_a_anc = 0;
  EXPECT_THROW(c.validate(), ValidationError);
}

TEST(build_twirl, shape_and_blank_ancilla_slice) {
  AncillaConjugation c{random_unitary(6), random_unitary(4)};
  c.d_a_anc = 3;
  c.d_b_anc = 2;
  const TwirlEnsemble e = build_twirl(c);
  ASSERT_EQ(e.terms.size(), 6u);
  double total = 0;
  CMat sum_u = CMat::Zero(6, 6);
  for (const auto& t : e.terms) {
    total += t.p;
    EXPECT_LE(unitarity_defect(t.U), 1e-12);
    // U_a† acts on the blank ancilla exactly like U†.
    const CMat blank = kron(CMat::Identity(2, 2), CMat::Identity(3, 3).col(0));
    EXPECT_LE((t.U.adjoint() * blank - c.U.adjoint() * blank).norm(), 1e-12);
  }
  EXPECT_NEAR(total, 1.0, 1e-15);
  for (int a = 0; a < 3; ++a) sum_u += e.terms[2 * a].U;
  CMat proj0 = CMat::Zero(3, 3);
  proj0(0, 0) = 1;
  EXPECT_LE((sum_u - 3.0 * kron(CMat::Identity(2, 2), proj0) * c.U).norm(), 1e-12);
}

TEST(verify_twirl, random_instances_up_to_dimension_three) {
  for (int trial = 0; trial < 100; ++trial) {
    AncillaConjugation c;
    c.d_a_anc = 1 + trial % 3;
    c.d_b_anc = 1 + (trial / 3) % 3;
    c.U = random_unitary(2 * c.d_a_anc);
    c.V = random_unitary(2 * c.d_b_anc);
    ASSERT_LE(verify_twirl(c, random_hermitian(4)), 1e-10);
  }
}

TEST(verify_twirl, single_term_without_phases_fails) {
  // Negative control: U itself, not averaged, leaves ancilla coherences behind.
  AncillaConjugation c{random_unitary(4), random_unitary(2)};
  c.d_a_anc = 2;
  const CMat h = random_hermitian(4);
  const CMat w = kron(c.U, c.V);
  CMat blank = CMat::Zero(8, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) blank(4 * a + b, 2 * a + b) = 1;  // A A' B ordering, A'=0
  }
  CMat embedded = CMat::Zero(8, 8);
  // h ⊗ I_A' reordered to A A' B.
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const int ai = i / 4, xi = (i / 2) % 2, bi = i % 2;
      const int aj = j / 4, xj = (j / 2) % 2, bj = j % 2;
      if (xi == xj) embedded(i, j) = h(2 * ai + bi, 2 * aj + bj);
    }
  }
  const CMat single = w * embedded * w.adjoint() * blank;
  const CMat projected = blank * (blank.adjoint() * single);
  EXPECT_GT((single - projected).norm(), 1e-3);
  EXPECT_LE(verify_twirl(c, h), 1e-10);
}

TEST(gate_time_bound, frozen_values) {
  EXPECT_NEAR(gate_time_bound(form({1, 1, 1}), form({1, 0, 0}), 1.0), 3.0, 1e-14);
  EXPECT_NEAR(gate_time_bound(form({1, 0, 0}), form({1, 1, 1}), 2.0), 2.0, 1e-14);
  EXPECT_EQ(gate_time_bound(form({0, 0, 0}), form({1, 0, 0}), 1.0), 0.0);
  EXPECT_THROW(gate_time_bound(form({1, 0, 0}), form({0, 0, 0}), 1.0), DomainError);
  EXPECT_THROW(gate_time_bound(form({1, 0, 0}), form({1, 0, 0}), -1.0), ValidationError);
}
