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

#include "hamsim/trotter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hamsim {

CMat run_product(const SimulationProtocol& protocol, const CMat& h, double t,
                 int rounds) {
  require_hermitian(h, "Hamiltonian");
  if (rounds < 1) throw ValidationError("rounds must be at least 1");
  const double dt = t / rounds;
  CMat step = CMat::Identity(h.rows(), h.cols());
  for (const ProtocolTerm& term : protocol.terms) {
    const CMat w = term.pair.product();
    step = w * expm(h, term.p * dt) * w.adjoint() * step;
  }
  CMat out = CMat::Identity(h.rows(), h.cols());
  for (int r = 0; r < rounds; ++r) out = step * out;
  return out;
}

std::vector<double> geometric_sweep(double start, double factor, int count) {
  if (!(start > 0.0) || !(factor > 0.0) || count < 1) {
    throw ValidationError("t-sweep needs start > 0, factor > 0 and count >= 1");
  }
  std::vector<double> t;
  double cur = start;
  for (int j = 0; j < count; ++j) {
    t.push_back(cur);
    cur *= factor;
  }
  return t;
}

double loglog_slope(const std::vector<double>& times, const std::vector<double>& errors) {
  const std::size_t n = times.size();
  if (n < 2 || errors.size() != n) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(times[i] > 0.0) || !(errors[i] > 0.0)) {
      return std::numeric_limits<double>::quiet_NaN();
    }
    mx += std::log(times[i]);
    my += std::log(errors[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(times[i]) - mx;
    sxy += dx * (std::log(errors[i]) - my);
    sxx += dx * dx;
  }
  return sxx > 0.0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

TrotterReport scaling_check(const SimulationProtocol& protocol, const CMat& h,
                            const CMat& h_target, double s,
                            const std::vector<double>& t_values, int rounds) {
  require_hermitian(h, "source Hamiltonian");
  require_hermitian(h_target, "target Hamiltonian");
  if (t_values.empty()) throw ValidationError("t-sweep is empty");
  if (!std::all_of(t_values.begin(), t_values.end(), [](double t) { return t > 0.0; })) {
    throw ValidationError("t values must be positive");
  }

  TrotterReport report;
  report.reconstruction_residual = (reconstruct(protocol, h) - s * h_target).norm();
  if (!(report.reconstruction_residual <= kReconstructionGate)) {
    std::ostringstream os;
    os.precision(17);
    os << "protocol does not reconstruct s·H' (residual "
       << report.reconstruction_residual << " > " << kReconstructionGate << ")";
    throw DomainError(os.str());
  }

  report.times = t_values;
  std::sort(report.times.begin(), report.times.end(), std::greater<>());
  for (double t : report.times) {
    const CMat ideal = expm(h_target, s * t);
    report.errors.push_back(operator_norm(run_product(protocol, h, t, rounds) - ideal));
  }

  report.exact = std::all_of(report.errors.begin(), report.errors.end(),
                             [](double e) { return e <= kExactErrorFloor; });
  report.window = (report.times.size() + 1) / 2;
  if (report.exact) {
    report.fitted_slope = std::numeric_limits<double>::quiet_NaN();
  } else {
    const std::size_t first = report.times.size() - report.window;
    report.fitted_slope = loglog_slope(
        std::vector<double>(report.times.begin() + first, report.times.end()),
        std::vector<double>(report.errors.begin() + first, report.errors.end()));
  }
  return report;
}

}  // namespace hamsim
