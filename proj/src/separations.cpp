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

#include "hamsim/separations.hpp"

#include <cmath>
#include <sstream>

namespace hamsim {

namespace {

constexpr double kAchievedTol = 1e-10;

CMat basis_projector(int i, int d) {
  CMat p = CMat::Zero(d, d);
  p(i, i) = 1.0;
  return p;
}

CMat partial_trace_b(const CMat& m, int d_a, int d_b) {
  CMat out = CMat::Zero(d_a, d_a);
  for (int a = 0; a < d_a; ++a) {
    for (int c = 0; c < d_a; ++c) {
      for (int b = 0; b < d_b; ++b) out(a, c) += m(a * d_b + b, c * d_b + b);
    }
  }
  return out;
}

CMat partial_trace_a(const CMat& m, int d_a, int d_b) {
  CMat out = CMat::Zero(d_b, d_b);
  for (int b = 0; b < d_b; ++b) {
    for (int e = 0; e < d_b; ++e) {
      for (int a = 0; a < d_a; ++a) out(b, e) += m(a * d_b + b, a * d_b + e);
    }
  }
  return out;
}

// Places the printed rows of <0_A'|U at the (i, 0_A') rows of U and fills
// the remaining rows with the Gram-Schmidt completion.
CMat unitary_from_slice(const CMat& slice_rows, int d_a, int d_anc) {
  const CMat full = complete_to_unitary(slice_rows);
  const int n = d_a * d_anc;
  CMat u(n, n);
  int next_extra = static_cast<int>(slice_rows.rows());
  for (int i = 0; i < d_a; ++i) {
    for (int j = 0; j < d_anc; ++j) {
      const int row = i * d_anc + j;
      u.row(row) = (j == 0) ? full.row(i) : full.row(next_extra++);
    }
  }
  return u;
}

CMat example1_rows(int d) {
  // <0_A'|U = |0_A><1_A 0_A'| + Σ_{i>=1} |i_A><i_A i_A'|
  CMat rows = CMat::Zero(d, d * d);
  rows(0, 1 * d + 0) = 1.0;
  for (int i = 1; i < d; ++i) rows(i, i * d + i) = 1.0;
  return rows;
}

CMat example2_rows() {
  // <0_A'|U = |0_A><0_A|⊗<0_A'| + |1_A><0_A|⊗<1_A'|
  CMat rows = CMat::Zero(2, 4);
  rows(0, 0) = 1.0;
  rows(1, 1) = 1.0;
  return rows;
}

double row_isometry_defect(const CMat& rows) {
  return (rows * rows.adjoint() - CMat::Identity(rows.rows(), rows.rows())).norm();
}

}  // namespace

DLevelPair DLevelPair::make(int d) {
  if (d < 2) throw ValidationError("level count d must be at least 2");
  DLevelPair out;
  out.d = d;
  out.K = kron(basis_projector(0, d), basis_projector(0, d));
  out.K_prime = kron(basis_projector(0, d), basis_projector(1, d));
  for (int i = 1; i < d; ++i) {
    const CMat diag = kron(basis_projector(i, d), basis_projector(i, d));
    out.K += diag;
    out.K_prime += diag;
  }
  return out;
}

CMat complete_to_unitary(const CMat& rows) {
  const Eigen::Index n = rows.cols();
  if (rows.rows() > n) throw ValidationError("more rows than columns");
  if (row_isometry_defect(rows) > 1e-12) {
    throw ValidationError("rows to complete are not orthonormal");
  }
  // Work with columns of U†.
  std::vector<CVec> cols;
  for (Eigen::Index r = 0; r < rows.rows(); ++r) cols.push_back(rows.row(r).adjoint());
  for (Eigen::Index k = 0; k < n && static_cast<Eigen::Index>(cols.size()) < n; ++k) {
    CVec c = CVec::Unit(n, k);
    for (int pass = 0; pass < 2; ++pass) {
      for (const CVec& q : cols) c -= q * q.dot(c);
    }
    const double norm = c.norm();
    if (norm > 1e-8) cols.push_back(c / norm);
  }
  CMat out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) out.row(r) = cols[r].adjoint();
  return out;
}

AncillaConjugation example1_conjugation(int d) {
  AncillaConjugation c;
  c.d_a = d;
  c.d_a_anc = d;
  c.d_b = d;
  c.d_b_anc = 1;
  c.U = unitary_from_slice(example1_rows(d), d, d);
  c.V = CMat::Identity(d, d);
  return c;
}

AncillaConjugation example2_conjugation() {
  AncillaConjugation c;
  c.d_a = 2;
  c.d_a_anc = 2;
  c.d_b = 4;
  c.d_b_anc = 1;
  c.U = unitary_from_slice(example2_rows(), 2, 2);
  c.V = CMat::Identity(4, 4);
  return c;
}

WitnessReport example1(int d) {
  if (d < 3) {
    std::ostringstream os;
    os << "example 1 needs d >= 3 (got " << d << "): the witness uses level 2";
    throw ValidationError(os.str());
  }
  const DLevelPair pair = DLevelPair::make(d);
  const AncillaConjugation conj = example1_conjugation(d);

  WitnessReport r;
  r.d = d;
  r.isometry_defect = row_isometry_defect(example1_rows(d));
  r.unitarity_defect = hamsim::unitarity_defect(conj.U);
  const CMat image = luanc_conjugate(pair.K, conj);
  r.achieved_residual = (image - pair.K_prime).norm();
  r.achieved = r.achieved_residual <= kAchievedTol;

  // Suppose K' = Q + m⊗I + I⊗n + a·I with Q an LU mixing of K and m, n
  // traceless. Q then has the trace and the (identity) marginals of K, so
  // the full and partial traces fix a, m and n.
  const double dd = static_cast<double>(d);
  const CMat id = CMat::Identity(d, d);
  r.forced_a = (pair.K_prime.trace() - pair.K.trace()).real() / (dd * dd);
  r.forced_m = (partial_trace_b(pair.K_prime, d, d) - partial_trace_b(pair.K, d, d) -
                dd * r.forced_a * id) / dd;
  r.forced_n = (partial_trace_a(pair.K_prime, d, d) - partial_trace_a(pair.K, d, d) -
                dd * r.forced_a * id) / dd;

  const CMat forced_q = pair.K_prime - kron(r.forced_m, id) - kron(id, r.forced_n) -
                        r.forced_a * CMat::Identity(d * d, d * d);
  const CMat probe = kron(basis_projector(2, d), basis_projector(1, d));
  r.witness_value = (probe * forced_q).trace().real();
  r.certified = r.achieved && r.witness_value < 0.0;
  return r;
}

Example2Report example2() {
  const AncillaConjugation conj = example2_conjugation();
  const CMat& s3 = pauli(3);
  const CMat id2 = CMat::Identity(2, 2);

  Example2Report r;
  CMat slice_rows(2, 4);
  slice_rows.row(0) = conj.U.row(0);
  slice_rows.row(1) = conj.U.row(2);
  const CMat slice = slice_rows * kron(s3, id2) * slice_rows.adjoint();
  r.slice_residual = (slice - id2).norm();

  const CMat k = kron(s3, kron(s3, s3));
  const CMat k_prime = kron(id2, kron(s3, s3));
  r.identity_residual = (luanc_conjugate(k, conj) - k_prime).norm();
  r.achieved = r.identity_residual <= 1e-12;

  // Unitary mixing preserves the trace of the first factor.
  r.source_trace = s3.trace().real();
  r.target_trace = slice.trace().real();
  r.certified = r.achieved && std::abs(r.source_trace - r.target_trace) > 1e-12;
  return r;
}

}  // namespace hamsim
