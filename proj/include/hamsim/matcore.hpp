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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hamsim {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;

/// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input for which the requested task has no solution
/// (e.g. a simulation factor above the optimum). CLI exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kOrthogonalTol = 1e-12;

/// Proper rotation of R^3. Construction validates RᵀR = I and det R = +1.
class Rot3 {
 public:
  Rot3() : m_(Mat3::Identity()) {}

  /// Throws ValidationError unless `m` is in SO(3) within kOrthogonalTol.
  static Rot3 from_matrix(const Mat3& m);

  const Mat3& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit Rot3(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

struct HermEig {
  RVec values;   // decreasing
  CMat vectors;  // columns are eigenvectors
};

struct Svd3 {
  Rot3 left;
  Vec3 d;  // d1 >= d2 >= |d3|, sign of the smallest absorbed into d3
  Rot3 right;
};

// Pauli matrices, index 0 is the identity.
const CMat& pauli(int i);

CMat kron(const CMat& a, const CMat& b);
CMat dagger(const CMat& m);

double hermiticity_defect(const CMat& m);
bool is_hermitian(const CMat& m, double tol = kHermitianTol);
void require_hermitian(const CMat& m, const std::string& what);

/// Frobenius distance of m·m† from the identity.
double unitarity_defect(const CMat& m);

/// Largest singular value.
double operator_norm(const CMat& m);

/// Eigendecomposition of a Hermitian matrix with eigenvalues in decreasing
/// order. Rejects inputs whose anti-Hermitian part exceeds kHermitianTol.
HermEig herm_eig(const CMat& m);

/// exp(-i·scale·m). Hermitian inputs use the spectral route and come back
/// unitary to rounding; anything else goes through scaling and squaring.
CMat expm(const CMat& m, double scale);

/// Real SVD m = left·diag(d)·rightᵀ with both factors proper rotations.
Svd3 svd3(const Mat3& m);

/// One SU(2) lift u of r, satisfying u σ_i u† = Σ_j r(j,i) σ_j.
/// The sign is fixed by making the first nonzero entry have Re >= 0.
CMat so3_to_su2(const Rot3& r);

/// Adjoint action of a 2×2 unitary on the Pauli vector, r(j,i) =
/// tr(σ_j u σ_i u†)/2.
Rot3 su2_to_so3(const CMat& u);

}  // namespace hamsim
