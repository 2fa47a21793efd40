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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "hamsim/separations.hpp"
#include "hamsim/trotter.hpp"
#include "test_util.hpp"

using namespace hamsim;
using namespace hamsim::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

CanonicalForm form(const Vec3& h) {
  return canonicalize(PauliHamiltonian::coupling(h.asDiagonal()));
}

Vec3 random_h(int trial) {
  return (trial % 10 == 0) ? random_degenerate_h() : random_canonical_h();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome lambda_relations() {
  const Vec4 ising = lambda_from_h(Vec3(1, 0, 0)).values();
  const Vec4 heis = lambda_from_h(Vec3(1, 1, 1)).values();
  // Direct substitution into λ = (h1+h2-h3, h1-h2+h3, -h1+h2+h3, -h1-h2-h3).
  const auto direct = [](const Vec3& h) {
    return Vec4(h(0) + h(1) - h(2), h(0) - h(1) + h(2), -h(0) + h(1) + h(2), -h(0) - h(1) - h(2));
  };
  const double e = std::max({(ising - Vec4(1, 1, -1, -1)).cwiseAbs().maxCoeff(),
                             (heis - Vec4(1, 1, 1, -3)).cwiseAbs().maxCoeff(),
                             (ising - direct(Vec3(1, 0, 0))).cwiseAbs().maxCoeff(),
                             (heis - direct(Vec3(1, 1, 1))).cwiseAbs().maxCoeff()});
  return {e <= 1e-14, fmt("max deviation %.3g", e)};
}

Outcome r1_equivalence() {
  int agree = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Vec3 ht = random_h(trial), hs = random_h(trial + 3);
    agree += s_majorizes(ht, hs).holds == majorizes(lambda_from_h(ht), lambda_from_h(hs)).holds;
  }
  return {agree == 1000, fmt("%.0f/1000 agree", agree)};
}

Outcome r2_correctness() {
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const BellSpectrum t = lambda_from_h(random_h(trial)), s = lambda_from_h(random_h(trial + 1));
    const double closed = simulation_factor(t, s).value;
    worst = std::max(worst, std::abs(closed - oracle_factor_bisection(t.values(), s.values())) /
                                std::max(1.0, closed));
  }
  const BellSpectrum ising = lambda_from_h(Vec3(1, 0, 0)), heis = lambda_from_h(Vec3(1, 1, 1));
  const double ih = simulation_factor(heis, ising).value;
  const double hi = simulation_factor(ising, heis).value;
  const bool fixed = std::abs(ih - 1.0 / 3.0) <= 1e-12 && std::abs(hi - 1.0) <= 1e-12;
  return {worst <= 1e-10 && fixed,
          fmt("max |closed - bisection| %.3g; Ising->Heisenberg %.17g, Heisenberg->Ising %.17g", worst, ih, hi)};
}

Outcome birkhoff_bounds() {
  std::size_t max_interior = 0, max_boundary = 0;
  double worst = 0;
  int cases = 0;
  for (int trial = 0; cases < 1000; ++trial) {
    const BellSpectrum lam = lambda_from_h(random_h(trial));
    const BellSpectrum tgt = lambda_from_h(random_h(trial + 7));
    const double opt = simulation_factor(tgt, lam).value;
    if (!std::isfinite(opt) || opt <= 0) continue;
    ++cases;
    const Vec4 interior = uniform(0.05, 0.95) * opt * tgt.values();
    const Vec4 boundary = opt * tgt.values();
    const BirkhoffDecomposition di = birkhoff_decompose(interior, lam);
    const BirkhoffDecomposition db = birkhoff_decompose(boundary, lam);
    max_interior = std::max(max_interior, di.terms.size());
    max_boundary = std::max(max_boundary, db.terms.size());
    worst = std::max({worst, (di.combine(lam.values()) - interior).cwiseAbs().maxCoeff(),
                      (db.combine(lam.values()) - boundary).cwiseAbs().maxCoeff()});
  }
  return {max_interior <= 4 && max_boundary <= 3 && worst <= 1e-10,
          fmt("max terms interior %.0f, boundary %.0f; max residual %.3g", max_interior, max_boundary, worst)};
}

Outcome permutation_table() {
  const BellPermutationTable& table = BellPermutationTable::instance();
  double worst = 0;
  for (const Perm4& p : all_perms()) worst = std::max(worst, BellPermutationTable::projector_defect(table.at(p), p));
  return {table.size() == 24 && worst <= 1e-12, fmt("%.0f entries, max projector defect %.3g", table.size(), worst)};
}

Outcome protocol_soundness() {
  double worst = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const SimulationProtocol p = synthesize_optimal(form(random_h(trial)), form(random_h(trial + 2)));
    worst = std::max(worst, (reconstruct(p, canonical_matrix(p.source_h)) -
                             p.s * canonical_matrix(p.target_h)).norm());
  }
  return {worst <= 1e-9, fmt("max residual %.3g over 500 pairs", worst)};
}

Outcome trotter_scaling() {
  std::vector<double> t;
  for (int j = 4; j <= 8; ++j) t.push_back(0.1 * std::pow(2.0, -j));
  int exact = 0, sloped = 0, bad = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 hs = random_h(trial), ht = random_h(trial + 5);
    const SimulationProtocol p = synthesize_optimal(form(hs), form(ht));
    const TrotterReport r = scaling_check(p, canonical_matrix(hs), canonical_matrix(ht), p.s, t);
    if (r.exact) {
      ++exact;
    } else if (r.fitted_slope >= 1.8 && r.fitted_slope <= 2.2) {
      ++sloped;
    } else {
      ++bad;
    }
  }
  // Control: generic local-unitary mixings whose terms do not commute.
  double lo = 1e300, hi = -1e300;
  for (int trial = 0; trial < 50; ++trial) {
    SimulationProtocol p;
    double total = 0;
    for (int k = 0; k < 3; ++k) {
      const double w = uniform(0.2, 1.0);
      p.terms.push_back({w, {random_unitary(2), random_unitary(2)}, kIdentityPerm});
      total += w;
    }
    for (auto& term : p.terms) term.p /= total;
    const CMat h = random_hermitian(4);
    const TrotterReport r = scaling_check(p, h, reconstruct(p, h), 1.0, t);
    lo = std::min(lo, r.fitted_slope);
    hi = std::max(hi, r.fitted_slope);
  }
  const bool control = lo >= 1.8 && hi <= 2.2;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "synthesized: %d exact, %d with slope in range, %d outside; "
                "non-commuting control slopes in [%.3f, %.3f]",
                exact, sloped, bad, lo, hi);
  return {bad == 0 && control, buf};
}

Outcome separation_example1() {
  double worst_residual = 0, worst_witness = 0;
  bool ok = true;
  for (int d = 3; d <= 8; ++d) {
    const WitnessReport r = example1(d);
    worst_residual = std::max(worst_residual, r.achieved_residual);
    worst_witness = std::max(worst_witness, std::abs(r.witness_value + 1.0 / d));
    ok = ok && r.achieved && r.certified;
  }
  return {ok && worst_residual <= 1e-10 && worst_witness <= 1e-12,
          fmt("d=3..8: max E(K)-K' residual %.3g, max |witness + 1/d| %.3g", worst_residual, worst_witness)};
}

Outcome separation_example2() {
  const Example2Report r = example2();
  return {r.slice_residual <= 1e-12 && r.identity_residual <= 1e-12 && r.certified,
          fmt("slice residual %.3g, identity residual %.3g, trace witness %.0f", r.slice_residual,
              r.identity_residual, r.target_trace - r.source_trace)};
}

Outcome twirl() {
  double worst = 0, worst_sum = 0;
  for (int trial = 0; trial < 100; ++trial) {
    AncillaConjugation c;
    c.d_a_anc = 1 + trial % 3;
    c.d_b_anc = 1 + (trial / 3) % 3;
    c.U = random_unitary(2 * c.d_a_anc);
    c.V = random_unitary(2 * c.d_b_anc);
    worst = std::max(worst, verify_twirl(c, random_hermitian(4)));
    // Σ_a U_a = d_A' (I ⊗ |0><0|) U.
    const TwirlEnsemble e = build_twirl(c);
    CMat sum = CMat::Zero(c.U.rows(), c.U.cols());
    for (int a = 0; a < c.d_a_anc; ++a) sum += e.terms[a * c.d_b_anc].U;
    CMat p0 = CMat::Zero(c.d_a_anc, c.d_a_anc);
    p0(0, 0) = 1;
    worst_sum = std::max(worst_sum, (sum - c.d_a_anc * kron(CMat::Identity(2, 2), p0) * c.U).norm());
  }
  return {worst <= 1e-10 && worst_sum <= 1e-10,
          fmt("max twirl residual %.3g, max phase-sum residual %.3g", worst, worst_sum)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"lambda relations", lambda_relations},
      {"ordering equivalence", r1_equivalence},
      {"closed-form simulation factor", r2_correctness},
      {"decomposition term bounds", birkhoff_bounds},
      {"Bell permutation table", permutation_table},
      {"protocol soundness", protocol_soundness},
      {"Trotter scaling", trotter_scaling},
      {"d-level separation", separation_example1},
      {"three-qubit separation", separation_example2},
      {"phase twirl", twirl},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %-30s %8.1f ms  %s\n", o.pass ? "PASS" : "FAIL", index, name, ms, o.detail.c_str());
    failures += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
