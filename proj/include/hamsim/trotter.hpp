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

#include <vector>

#include "hamsim/protocol.hpp"

namespace hamsim {

inline constexpr double kReconstructionGate = 1e-9;
inline constexpr double kExactErrorFloor = 1e-13;

struct TrotterReport {
  std::vector<double> times;   // decreasing
  std::vector<double> errors;  // operator-norm deviations
  /// log-log slope over the smallest-t half; NaN when `exact`.
  double fitted_slope = 0.0;
  /// Every error is at or below kExactErrorFloor (commuting terms).
  bool exact = false;
  std::size_t window = 0;
  double reconstruction_residual = 0.0;
};

/// Π_k (u_k⊗v_k) exp(-i p_k t H) (u_k⊗v_k)†, first term applied first.
/// `rounds` > 1 repeats the whole schedule at t/rounds.
CMat run_product(const SimulationProtocol& protocol, const CMat& h, double t,
                 int rounds = 1);

/// Compares run_product(t) with exp(-i s t H_target) over `t_values`.
/// Throws DomainError when the protocol does not reconstruct s·H_target to
/// kReconstructionGate in Frobenius norm.
TrotterReport scaling_check(const SimulationProtocol& protocol, const CMat& h,
                            const CMat& h_target, double s,
                            const std::vector<double>& t_values, int rounds = 1);

/// t_j = start·factor^j for j = 0..count-1.
std::vector<double> geometric_sweep(double start, double factor, int count);

/// Least-squares slope of log(err) against log(t).
double loglog_slope(const std::vector<double>& times, const std::vector<double>& errors);

}  // namespace hamsim
