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

#include "hamsim/majorization.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <sstream>

namespace hamsim {

namespace {

double scale_of(const Vec4& v) { return std::max(1.0, v.cwiseAbs().maxCoeff()); }

Vec3 prefix_sums(const Vec4& v) {
  return Vec3(v(0), v(0) + v(1), v(0) + v(1) + v(2));
}

MajorizationVerdict verdict_from_slack(const Vec3& slack, double tol) {
  MajorizationVerdict out;
  out.slack = slack;
  out.holds = (slack.array() >= -tol).all();
  return out;
}

Vec4 sorted_desc(const Vec4& v) {
  Vec4 s = v;
  std::sort(s.data(), s.data() + 4, std::greater<>());
  return s;
}

// Facets of the permutation hull of λ: for every proper nonempty subset A
// of positions, Σ_{i∈A} x_i <= Σ_{i<|A|} λ_i.
struct Facet {
  unsigned mask;
  double bound;
};

std::vector<Facet> hull_facets(const Vec4& lambda) {
  std::vector<Facet> facets;
  const Vec4 sorted = sorted_desc(lambda);
  for (unsigned mask = 1; mask < 15; ++mask) {
    const int size = std::popcount(mask);
    facets.push_back({mask, sorted.head(size).sum()});
  }
  return facets;
}

double subset_sum(const Vec4& v, unsigned mask) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (mask & (1u << i)) s += v(i);
  }
  return s;
}

}  // namespace

int MajorizationVerdict::first_violation() const {
  for (int k = 0; k < 3; ++k) {
    if (slack(k) < -kSlackTol) return k + 1;
  }
  return 0;
}

Vec4 apply_perm(const Perm4& perm, const Vec4& v) {
  Vec4 out;
  for (int i = 0; i < 4; ++i) out(perm[i]) = v(i);
  return out;
}

const std::vector<Perm4>& all_perms() {
  static const std::vector<Perm4> perms = [] {
    std::vector<Perm4> p;
    Perm4 cur = kIdentityPerm;
    do {
      p.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return p;
  }();
  return perms;
}

Vec4 BirkhoffDecomposition::combine(const Vec4& lambda) const {
  Vec4 out = Vec4::Zero();
  for (const auto& t : terms) out += t.weight * apply_perm(t.perm, lambda);
  return out;
}

MajorizationVerdict majorizes(const BellSpectrum& target,
                              const BellSpectrum& source) {
  const Vec3 slack = prefix_sums(source.values()) - prefix_sums(target.values());
  return verdict_from_slack(slack, kSlackTol);
}

MajorizationVerdict s_majorizes(const Vec3& h_target, const Vec3& h_source) {
  if (!is_canonical_order(h_target) || !is_canonical_order(h_source)) {
    throw ValidationError("s_majorizes requires canonical-order h vectors");
  }
  const auto forms = [](const Vec3& h) {
    return Vec3(h(0), h(0) + h(1) - h(2), h(0) + h(1) + h(2));
  };
  return verdict_from_slack(forms(h_source) - forms(h_target), kSlackTol);
}

SimulationFactor simulation_factor(const BellSpectrum& target,
                                   const BellSpectrum& source) {
  SimulationFactor out;
  if (target.is_zero()) {
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  const Vec3 src = prefix_sums(source.values());
  const Vec3 tgt = prefix_sums(target.values());
  std::array<double, 3> ratio{};
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    // Prefix sums of a decreasing zero-sum vector are nonnegative, so a
    // vanishing target prefix never limits s.
    if (tgt(k) <= 1e-14) {
      ratio[k] = std::numeric_limits<double>::infinity();
      continue;
    }
    ratio[k] = std::max(0.0, src(k)) / tgt(k);
    best = std::min(best, ratio[k]);
  }
  out.value = best;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(ratio[k] - best) <= 1e-12 * std::max(1.0, best)) {
      out.binding.push_back(k + 1);
    }
  }
  return out;
}

bool hull_membership(const Vec4& v, const BellSpectrum& lambda) {
  if (!v.allFinite()) return false;
  const double scale = std::max(scale_of(v), scale_of(lambda.values()));
  if (std::abs(v.sum() - lambda.values().sum()) > 1e-10 * scale) return false;
  const Vec3 slack =
      prefix_sums(lambda.values()) - prefix_sums(sorted_desc(v));
  return (slack.array() >= -kSlackTol * scale).all();
}

BirkhoffDecomposition birkhoff_decompose(const Vec4& mu,
                                         const BellSpectrum& lambda) {
  if (!mu.allFinite()) throw ValidationError("mu has non-finite entries");
  const Vec4& lam = lambda.values();
  const double scale = std::max(scale_of(mu), scale_of(lam));
  if (std::abs(mu.sum() - lam.sum()) > 1e-10 * scale) {
    std::ostringstream os;
    os << "mu must sum to zero (sum = " << mu.sum() << ")";
    throw ValidationError(os.str());
  }
  {
    const Vec3 slack = prefix_sums(lam) - prefix_sums(sorted_desc(mu));
    for (int k = 0; k < 3; ++k) {
      if (slack(k) < -kSlackTol * scale) {
        std::ostringstream os;
        os << "mu is not majorized by lambda: prefix " << k + 1
           << " exceeds by " << -slack(k);
        throw NotMajorizedError(os.str(), k + 1);
      }
    }
  }

  // Distinct vertices P·λ, keeping the lexicographically first permutation
  // for each image.
  struct Vertex {
    Perm4 perm;
    Vec4 point;
  };
  std::vector<Vertex> vertices;
  for (const Perm4& p : all_perms()) {
    const Vec4 q = apply_perm(p, lam);
    const bool dup = std::any_of(vertices.begin(), vertices.end(), [&](const Vertex& v) {
      return (v.point - q).cwiseAbs().maxCoeff() <= 1e-14 * scale;
    });
    if (!dup) vertices.push_back({p, q});
  }

  const std::vector<Facet> facets = hull_facets(lam);
  const double face_tol = 1e-10 * scale;
  const double mass_tol = 1e-13 * scale;

  BirkhoffDecomposition greedy;
  Vec4 rest = mu;
  double mass = 1.0;
  bool done = false;
  for (int step = 0; step < 8 && !done; ++step) {
    // (a) the residual is itself a vertex
    for (const Vertex& v : vertices) {
      const double dist = (rest - v.point).cwiseAbs().maxCoeff();
      if (dist <= face_tol || mass * dist <= mass_tol) {
        greedy.terms.push_back({mass, v.perm});
        done = true;
        break;
      }
    }
    if (done) break;

    // (b) peel off the vertex admitting the largest step. Along
    // rest(ε) = (rest - ε q)/(1 - ε) each facet constraint is linear in ε:
    //   ε·(bound - q_A) <= bound - rest_A.
    double best_eps = 0.0;
    const Vertex* best = nullptr;
    for (const Vertex& v : vertices) {
      double eps = 1.0;
      for (const Facet& f : facets) {
        double room = f.bound - subset_sum(rest, f.mask);
        if (room <= face_tol || mass * room <= mass_tol) room = 0.0;
        const double pull = f.bound - subset_sum(v.point, f.mask);
        if (pull <= face_tol) continue;
        eps = std::min(eps, room / pull);
      }
      if (eps > best_eps + 1e-12) {
        best_eps = eps;
        best = &v;
      }
    }
    if (best == nullptr) {
      throw std::logic_error("birkhoff_decompose: no admissible vertex");
    }
    if (best_eps >= 1.0 - 1e-12) {
      greedy.terms.push_back({mass, best->perm});
      done = true;
      break;
    }
    greedy.terms.push_back({mass * best_eps, best->perm});
    rest = (rest - best_eps * best->point) / (1.0 - best_eps);
    mass *= 1.0 - best_eps;
  }
  if (!done) throw std::logic_error("birkhoff_decompose did not terminate");

  // Re-solve the weights for the chosen vertices in one shot; this removes
  // the rounding accumulated by the successive rescalings.
  const auto n = static_cast<Eigen::Index>(greedy.terms.size());
  Eigen::MatrixXd system(5, n);
  Eigen::VectorXd rhs(5);
  rhs << mu, 1.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    system.col(k) << apply_perm(greedy.terms[k].perm, lam), 1.0;
  }
  const Eigen::VectorXd refit = system.completeOrthogonalDecomposition().solve(rhs);
  const double greedy_err = (greedy.combine(lam) - mu).cwiseAbs().maxCoeff();
  BirkhoffDecomposition polished = greedy;
  for (Eigen::Index k = 0; k < n; ++k) polished.terms[k].weight = refit(k);
  const double polished_err = (polished.combine(lam) - mu).cwiseAbs().maxCoeff();
  const bool positive = (refit.array() > 0.0).all();
  BirkhoffDecomposition out = (positive && polished_err <= greedy_err) ? polished : greedy;

  double total = 0.0;
  for (const auto& t : out.terms) total += t.weight;
  for (auto& t : out.terms) t.weight /= total;
  return out;
}

}  // namespace hamsim
