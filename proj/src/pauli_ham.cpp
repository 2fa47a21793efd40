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

#include "hamsim/pauli_ham.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace hamsim {

namespace {

double spectrum_scale(const Vec4& v) {
  return std::max(1.0, v.cwiseAbs().maxCoeff());
}

const CMat& pauli_product(int i, int j) {
  static const std::array<std::array<CMat, 4>, 4> table = [] {
    std::array<std::array<CMat, 4>, 4> t;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) t[a][b] = kron(pauli(a), pauli(b));
    }
    return t;
  }();
  return table[i][j];
}

double pauli_coefficient(const CMat& m, int i, int j) {
  return 0.25 * (pauli_product(i, j) * m).trace().real();
}

}  // namespace

BellSpectrum BellSpectrum::from_values(const Vec4& lambda) {
  if (!lambda.allFinite()) {
    throw ValidationError("Bell spectrum has non-finite entries");
  }
  const double tol = 1e-12 * spectrum_scale(lambda);
  for (int i = 0; i < 3; ++i) {
    if (lambda(i) < lambda(i + 1) - tol) {
      std::ostringstream os;
      os << "Bell spectrum is not decreasing at position " << i + 1;
      throw ValidationError(os.str());
    }
  }
  if (std::abs(lambda.sum()) > tol) {
    std::ostringstream os;
    os << "Bell spectrum does not sum to zero (sum = " << lambda.sum() << ")";
    throw ValidationError(os.str());
  }
  return BellSpectrum(lambda);
}

BellSpectrum BellSpectrum::sorted(const Vec4& lambda) {
  Vec4 v = lambda;
  std::stable_sort(v.data(), v.data() + 4, std::greater<>());
  return from_values(v);
}

BellSpectrum BellSpectrum::scaled(double s) const {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw ValidationError("spectrum scale must be finite and nonnegative");
  }
  return BellSpectrum(s * values_);
}

PauliHamiltonian from_matrix(const CMat& m) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw ValidationError("two-qubit Hamiltonian must be 4x4");
  }
  require_hermitian(m, "Hamiltonian");
  PauliHamiltonian p;
  p.a = pauli_coefficient(m, 0, 0);
  for (int i = 0; i < 3; ++i) {
    p.m(i) = pauli_coefficient(m, i + 1, 0);
    p.n(i) = pauli_coefficient(m, 0, i + 1);
    for (int j = 0; j < 3; ++j) p.h(i, j) = pauli_coefficient(m, i + 1, j + 1);
  }
  return p;
}

CMat to_matrix(const PauliHamiltonian& p) {
  CMat out = p.a * pauli_product(0, 0);
  for (int i = 0; i < 3; ++i) {
    out += p.m(i) * pauli_product(i + 1, 0);
    out += p.n(i) * pauli_product(0, i + 1);
    for (int j = 0; j < 3; ++j) out += p.h(i, j) * pauli_product(i + 1, j + 1);
  }
  return out;
}

CMat canonical_matrix(const Vec3& h) {
  CMat out = CMat::Zero(4, 4);
  for (int i = 0; i < 3; ++i) out += h(i) * pauli_product(i + 1, i + 1);
  return out;
}

CMat CanonicalForm::canonical_matrix() const { return hamsim::canonical_matrix(h); }

CMat CanonicalForm::reconstruct() const {
  const CMat w = kron(u, v);
  PauliHamiltonian locals;
  locals.a = removed_a;
  locals.m = removed_m;
  locals.n = removed_n;
  return w * canonical_matrix() * w.adjoint() + to_matrix(locals);
}

bool is_canonical_order(const Vec3& h, double tol) {
  return h.allFinite() && h(0) >= h(1) - tol && h(1) >= std::abs(h(2)) - tol;
}

CanonicalForm canonicalize(const PauliHamiltonian& p) {
  CanonicalForm out;
  out.removed_a = p.a;
  out.removed_m = p.m;
  out.removed_n = p.n;
  // h = R(u)·diag(h_canon)·R(v)ᵀ, so the SVD factors are the adjoint
  // actions of u and v.
  const Svd3 svd = svd3(p.h);
  out.h = svd.d;
  out.u = so3_to_su2(svd.left);
  out.v = so3_to_su2(svd.right);
  return out;
}

BellSpectrum lambda_from_h(const Vec3& h) {
  if (!is_canonical_order(h)) {
    std::ostringstream os;
    os << "h = (" << h(0) << ", " << h(1) << ", " << h(2)
       << ") violates h1 >= h2 >= |h3|";
    throw ValidationError(os.str());
  }
  const Vec4 lambda(h(0) + h(1) - h(2), h(0) - h(1) + h(2),
                    -h(0) + h(1) + h(2), -h(0) - h(1) - h(2));
  return BellSpectrum::sorted(lambda);
}

Vec3 h_from_lambda(const BellSpectrum& s) {
  // λ1+λ2 = 2h1, λ1+λ3 = 2h2, λ2+λ3 = 2h3.
  const Vec3 h(0.5 * (s[0] + s[1]), 0.5 * (s[0] + s[2]), 0.5 * (s[1] + s[2]));
  if (!is_canonical_order(h)) {
    std::ostringstream os;
    os << "spectrum inverts to h = (" << h(0) << ", " << h(1) << ", " << h(2)
       << "), which is not in canonical order";
    throw DomainError(os.str());
  }
  return h;
}

const CMat& bell_basis() {
  static const CMat basis = [] {
    const double r = 1.0 / std::sqrt(2.0);
    CMat b = CMat::Zero(4, 4);
    // computational basis order |00>, |01>, |10>, |11>
    b(1, 0) = r;
    b(2, 0) = r;
    b(0, 1) = r;
    b(3, 1) = r;
    b(0, 2) = r;
    b(3, 2) = -r;
    b(1, 3) = r;
    b(2, 3) = -r;
    return b;
  }();
  return basis;
}

CMat bell_projector(int i) {
  const CVec phi = bell_basis().col(i);
  return phi * phi.adjoint();
}

BellSpectrum bell_projector_spectrum(const CMat& m) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw ValidationError("Bell spectrum requires a 4x4 operator");
  }
  require_hermitian(m, "canonical operator");
  const CMat inbell = bell_basis().adjoint() * m * bell_basis();
  CMat offdiag = inbell;
  offdiag.diagonal().setZero();
  const double leak = offdiag.cwiseAbs().maxCoeff();
  if (leak > kHermitianTol) {
    std::ostringstream os;
    os << "operator is not diagonal in the Bell basis (max off-diagonal "
       << leak << ")";
    throw ValidationError(os.str());
  }
  const double trace = m.trace().real();
  if (std::abs(trace) > kHermitianTol) {
    std::ostringstream os;
    os << "canonical operator must be traceless (trace = " << trace << ")";
    throw ValidationError(os.str());
  }
  Vec4 lambda = inbell.diagonal().real();
  // Remove the rounding-level trace before the zero-sum check.
  lambda.array() -= lambda.sum() / 4.0;
  return BellSpectrum::sorted(lambda);
}

}  // namespace hamsim
