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

#include "hamsim/matcore.hpp"

namespace hamsim {

/// Two-qubit Hamiltonian in the Pauli product basis:
///
///   H = a·I⊗I + Σ_i m_i σ_i⊗I + Σ_j n_j I⊗σ_j + Σ_ij h_ij σ_i⊗σ_j
struct PauliHamiltonian {
  double a = 0.0;
  Vec3 m = Vec3::Zero();
  Vec3 n = Vec3::Zero();
  Mat3 h = Mat3::Zero();

  static PauliHamiltonian coupling(const Mat3& h) {
    PauliHamiltonian p;
    p.h = h;
    return p;
  }
};

/// Result of reducing a Hamiltonian to Σ h_i σ_i⊗σ_i with h1 >= h2 >= |h3|.
///
/// The input is recovered as (u⊗v)·canonical_matrix()·(u⊗v)† plus the
/// removed local terms.
struct CanonicalForm {
  Vec3 h = Vec3::Zero();
  CMat u = CMat::Identity(2, 2);
  CMat v = CMat::Identity(2, 2);
  double removed_a = 0.0;
  Vec3 removed_m = Vec3::Zero();
  Vec3 removed_n = Vec3::Zero();

  CMat canonical_matrix() const;
  /// Rebuilds the operator the form was computed from.
  CMat reconstruct() const;
};

/// Four real eigenvalues of a canonical Hamiltonian in the Bell basis,
/// decreasing and summing to zero.
class BellSpectrum {
 public:
  BellSpectrum() : values_(Vec4::Zero()) {}

  /// Validates ordering and the zero-sum constraint (ValidationError).
  static BellSpectrum from_values(const Vec4& lambda);
  /// Sorts decreasingly first, then validates the zero sum.
  static BellSpectrum sorted(const Vec4& lambda);

  const Vec4& values() const { return values_; }
  double operator[](int i) const { return values_(i); }
  bool is_zero(double tol = 1e-14) const {
    return values_.cwiseAbs().maxCoeff() <= tol;
  }
  /// s·λ for s >= 0 (ordering is preserved).
  BellSpectrum scaled(double s) const;

 private:
  explicit BellSpectrum(const Vec4& v) : values_(v) {}
  Vec4 values_;
};

PauliHamiltonian from_matrix(const CMat& m);
CMat to_matrix(const PauliHamiltonian& p);

/// Σ h_i σ_i⊗σ_i.
CMat canonical_matrix(const Vec3& h);

bool is_canonical_order(const Vec3& h, double tol = 1e-12);

CanonicalForm canonicalize(const PauliHamiltonian& p);

BellSpectrum lambda_from_h(const Vec3& h);

/// Inverse of lambda_from_h. Throws DomainError if the result violates
/// h1 >= h2 >= |h3|.
Vec3 h_from_lambda(const BellSpectrum& s);

/// The maximally entangled basis Φ1..Φ4 (columns), in the order
/// (|01>+|10>)/√2, (|00>+|11>)/√2, (|00>-|11>)/√2, (|01>-|10>)/√2.
const CMat& bell_basis();

/// Projector |Φ_i><Φ_i| for i in 0..3.
CMat bell_projector(int i);

/// Reads λ off a traceless Bell-diagonal operator; rejects anything else.
BellSpectrum bell_projector_spectrum(const CMat& m);

}  // namespace hamsim
