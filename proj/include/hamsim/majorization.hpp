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

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "hamsim/pauli_ham.hpp"

namespace hamsim {

inline constexpr double kSlackTol = 1e-12;

/// Outcome of a prefix-sum comparison. slack[k] >= -kSlackTol for every k
/// exactly when `holds`.
struct MajorizationVerdict {
  bool holds = true;
  Vec3 slack = Vec3::Zero();

  /// 1-based index of the first violated inequality, 0 if none.
  int first_violation() const;
};

/// Permutation of four positions: entry i of the source moves to
/// position perm[i], i.e. (P·λ)[perm[i]] = λ[i].
using Perm4 = std::array<int, 4>;

inline constexpr Perm4 kIdentityPerm = {0, 1, 2, 3};

Vec4 apply_perm(const Perm4& perm, const Vec4& v);

/// All 24 permutations in lexicographic order.
const std::vector<Perm4>& all_perms();

struct BirkhoffTerm {
  double weight = 0.0;
  Perm4 perm = kIdentityPerm;
};

struct BirkhoffDecomposition {
  std::vector<BirkhoffTerm> terms;

  /// Σ_k weight_k · P_k·λ.
  Vec4 combine(const Vec4& lambda) const;
};

/// Optimal simulation factor. `binding` lists the 1-based prefix indices
/// attaining the minimum; empty when the factor is unbounded.
struct SimulationFactor {
  double value = 0.0;
  std::vector<int> binding;

  bool unbounded() const { return value == std::numeric_limits<double>::infinity(); }
};

/// Thrown by birkhoff_decompose when mu is not majorized by lambda.
class NotMajorizedError : public DomainError {
 public:
  NotMajorizedError(const std::string& what, int prefix)
      : DomainError(what), prefix_(prefix) {}
  int failing_prefix() const { return prefix_; }

 private:
  int prefix_;
};

/// target ≺ source: Σ_{i<=k} target_i <= Σ_{i<=k} source_i for k = 1,2,3.
MajorizationVerdict majorizes(const BellSpectrum& target,
                              const BellSpectrum& source);

/// The same order written directly on canonical h-vectors:
///   h'1 <= h1,  h'1+h'2-h'3 <= h1+h2-h3,  h'1+h'2+h'3 <= h1+h2+h3.
MajorizationVerdict s_majorizes(const Vec3& h_target, const Vec3& h_source);

/// max{s >= 0 : s·target ≺ source}.
SimulationFactor simulation_factor(const BellSpectrum& target,
                                   const BellSpectrum& source);

/// True iff v (any order, zero sum) lies in the convex hull of the 24
/// permutations of lambda.
bool hull_membership(const Vec4& v, const BellSpectrum& lambda);

/// Writes mu as a convex combination of permuted copies of lambda using
/// greedy extreme-point peeling. At most four terms, at most three when mu
/// sits on the boundary of the hull.
BirkhoffDecomposition birkhoff_decompose(const Vec4& mu,
                                         const BellSpectrum& lambda);

}  // namespace hamsim
