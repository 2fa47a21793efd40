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

#include "hamsim/matcore.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace hamsim {

namespace {

constexpr Complex kI{0.0, 1.0};

std::array<CMat, 4> make_paulis() {
  std::array<CMat, 4> p;
  for (auto& m : p) m = CMat::Zero(2, 2);
  p[0] << 1, 0, 0, 1;
  p[1] << 0, 1, 1, 0;
  p[2] << 0, -kI, kI, 0;
  p[3] << 1, 0, 0, -1;
  return p;
}

}  // namespace

Rot3 Rot3::from_matrix(const Mat3& m) {
  if (!m.allFinite()) throw ValidationError("rotation has non-finite entries");
  const double orth = (m.transpose() * m - Mat3::Identity()).norm();
  if (orth > kOrthogonalTol) {
    std::ostringstream os;
    os << "matrix is not orthogonal (|RᵀR - I| = " << orth << ")";
    throw ValidationError(os.str());
  }
  const double det = m.determinant();
  if (std::abs(det - 1.0) > kOrthogonalTol) {
    std::ostringstream os;
    os << "matrix is not a proper rotation (det = " << det << ")";
    throw ValidationError(os.str());
  }
  return Rot3(m);
}

const CMat& pauli(int i) {
  static const std::array<CMat, 4> paulis = make_paulis();
  return paulis.at(static_cast<std::size_t>(i));
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMat dagger(const CMat& m) { return m.adjoint(); }

double hermiticity_defect(const CMat& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMat& m, double tol) {
  return m.rows() == m.cols() && m.allFinite() && hermiticity_defect(m) <= tol;
}

void require_hermitian(const CMat& m, const std::string& what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << " is not square (" << m.rows() << "x" << m.cols() << ")";
    throw ValidationError(os.str());
  }
  if (!m.allFinite()) throw ValidationError(what + " has non-finite entries");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    std::ostringstream os;
    os << what << " is not Hermitian (max |m - m†| = " << defect << ")";
    throw ValidationError(os.str());
  }
}

double unitarity_defect(const CMat& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m * m.adjoint() - CMat::Identity(m.rows(), m.cols())).norm();
}

double operator_norm(const CMat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(m);
  return svd.singularValues()(0);
}

HermEig herm_eig(const CMat& m) {
  require_hermitian(m, "herm_eig input");
  // Eigen reads only the lower triangle; hand it the exact Hermitian part.
  const CMat sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw DomainError("Hermitian eigensolver failed to converge");
  }
  const Eigen::Index n = m.rows();
  HermEig out{RVec(n), CMat(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

CMat expm(const CMat& m, double scale) {
  if (m.rows() != m.cols()) {
    throw ValidationError("expm requires a square matrix");
  }
  if (is_hermitian(m)) {
    const HermEig eig = herm_eig(m);
    CVec phases(eig.values.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
      phases(k) = std::exp(-kI * scale * eig.values(k));
    }
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
  }
  const CMat gen = (-kI * scale) * m;
  return gen.exp();
}

Svd3 svd3(const Mat3& m) {
  if (!m.allFinite()) throw ValidationError("svd3 input has non-finite entries");
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 u = svd.matrixU();
  Mat3 v = svd.matrixV();
  Vec3 d = svd.singularValues();
  if (u.determinant() < 0) {
    u.col(2) *= -1.0;
    d(2) *= -1.0;
  }
  if (v.determinant() < 0) {
    v.col(2) *= -1.0;
    d(2) *= -1.0;
  }
  return Svd3{Rot3::from_matrix(u), d, Rot3::from_matrix(v)};
}

CMat so3_to_su2(const Rot3& rot) {
  const Mat3& r = rot.matrix();
  // 4·w², 4·x², 4·y², 4·z² up to the shared trace term; pick the largest
  // component to divide by.
  const std::array<double, 4> diag = {
      1.0 + r(0, 0) + r(1, 1) + r(2, 2), 1.0 + r(0, 0) - r(1, 1) - r(2, 2),
      1.0 - r(0, 0) + r(1, 1) - r(2, 2), 1.0 - r(0, 0) - r(1, 1) + r(2, 2)};
  int branch = 0;
  for (int k = 1; k < 4; ++k) {
    if (diag[k] > diag[branch]) branch = k;
  }
  const double s = 2.0 * std::sqrt(std::max(diag[branch], 0.0));
  double w = 0, x = 0, y = 0, z = 0;
  switch (branch) {
    case 0:
      w = 0.25 * s;
      x = (r(2, 1) - r(1, 2)) / s;
      y = (r(0, 2) - r(2, 0)) / s;
      z = (r(1, 0) - r(0, 1)) / s;
      break;
    case 1:
      w = (r(2, 1) - r(1, 2)) / s;
      x = 0.25 * s;
      y = (r(0, 1) + r(1, 0)) / s;
      z = (r(0, 2) + r(2, 0)) / s;
      break;
    case 2:
      w = (r(0, 2) - r(2, 0)) / s;
      x = (r(0, 1) + r(1, 0)) / s;
      y = 0.25 * s;
      z = (r(1, 2) + r(2, 1)) / s;
      break;
    default:
      w = (r(1, 0) - r(0, 1)) / s;
      x = (r(0, 2) + r(2, 0)) / s;
      y = (r(1, 2) + r(2, 1)) / s;
      z = 0.25 * s;
      break;
  }
  const double norm = std::sqrt(w * w + x * x + y * y + z * z);
  w /= norm;
  x /= norm;
  y /= norm;
  z /= norm;

  // u = w·I - i(x σ1 + y σ2 + z σ3)
  CMat u = w * pauli(0) - kI * (x * pauli(1) + y * pauli(2) + z * pauli(3));

  for (Eigen::Index k = 0; k < u.size(); ++k) {
    const Complex e = u(k / 2, k % 2);
    if (std::abs(e) <= 1e-12) continue;
    if (e.real() < -1e-15 || (std::abs(e.real()) <= 1e-15 && e.imag() < 0)) {
      u = -u;
    }
    break;
  }
  return u;
}

Rot3 su2_to_so3(const CMat& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw ValidationError("su2_to_so3 requires a 2x2 matrix");
  }
  if (unitarity_defect(u) > 1e-10) {
    throw ValidationError("su2_to_so3 input is not unitary");
  }
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    const CMat img = u * pauli(i + 1) * u.adjoint();
    for (int j = 0; j < 3; ++j) {
      r(j, i) = 0.5 * (pauli(j + 1) * img).trace().real();
    }
  }
  // A U(2) phase cancels in the adjoint action; re-orthonormalize rounding.
  Eigen::JacobiSVD<Mat3> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return Rot3::from_matrix(svd.matrixU() * svd.matrixV().transpose());
}

}  // namespace hamsim
