#include "hesselink/geometry.hpp"

#include <algorithm>

namespace hesselink {

namespace {

// Enumerates k-subsets of {0..n-1} in lexicographic order.
bool next_subset(std::vector<size_t>& idx, size_t n) {
  size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Gram::Gram(Mat m) : m_(std::move(m)) {
  size_t n = m_.size();
  for (size_t i = 0; i < n; ++i) {
    if (m_[i].size() != n) throw EngineError(Err::LengthMismatch, "Gram matrix not square");
    for (size_t j = 0; j < n; ++j)
      if (m_[i][j] != m_[j][i]) throw EngineError(Err::MalformedSpec, "Gram matrix not symmetric");
  }
  // Positive definiteness via leading principal minors.
  for (size_t k = 1; k <= n; ++k) {
    Mat lead(k, zero_vec(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) lead[i][j] = m_[i][j];
    if (det(lead) <= 0) throw EngineError(Err::MalformedSpec, "Gram matrix not positive definite");
  }
  if (n > 0) {
    auto inv = inverse(m_);
    inv_ = *inv;  // PD implies invertible
  }
}

Rat Gram::inner(const Vec& a, const Vec& b) const {
  if (a.size() != m_.size() || b.size() != m_.size())
    throw EngineError(Err::LengthMismatch, "Gram::inner length mismatch");
  Rat s = 0;
  for (size_t i = 0; i < m_.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < m_.size(); ++j) s += a[i] * m_[i][j] * b[j];
  }
  return s;
}

Vec Gram::transport(const Vec& chi) const {
  if (chi.size() != m_.size())
    throw EngineError(Err::LengthMismatch, "Gram::transport length mismatch");
  if (m_.empty()) return {};
  return mat_vec(inv_, chi);
}

Gram Gram::scaled(const Rat& c) const {
  if (c <= 0) throw EngineError(Err::MalformedSpec, "Gram scale must be positive");
  Mat m = m_;
  for (auto& row : m)
    for (auto& x : row) x *= c;
  return Gram(m);
}

Rat pairing(const Vec& chi, const Vec& nu) {
  return dot(chi, nu);
}

MinNormCertificate min_norm_point(const std::vector<Vec>& constraints, const Gram& gram) {
  size_t n = constraints.size();
  size_t rank = gram.rank();
  for (const auto& c : constraints)
    if (is_zero(c))
      throw EngineError(Err::ZeroConstraint, "zero constraint in min_norm_point");
  if (n == 0) return MinNormCertificate{zero_vec(rank), {}, {}};

  std::vector<Vec> t(n);
  for (size_t i = 0; i < n; ++i) t[i] = gram.transport(constraints[i]);
  // Q[i][j] = <chi_i, transport(chi_j)>, the transported Gram matrix.
  Mat q(n, zero_vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j) q[i][j] = q[j][i] = pairing(constraints[i], t[j]);

  size_t kmax = std::min(rank, n);
  for (size_t k = 1; k <= kmax; ++k) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      Mat sys(k, zero_vec(k));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) sys[i][j] = q[idx[i]][idx[j]];
      // Singular sys means dependent transported generators; skip.
      auto mult = solve(sys, Vec(k, Rat(1)));
      if (!mult || rank_of(sys) != k) continue;
      bool nonneg = true;
      for (const auto& m : *mult)
        if (m < 0) { nonneg = false; break; }
      if (!nonneg) continue;
      Vec mu = zero_vec(rank);
      for (size_t i = 0; i < k; ++i) mu = add(mu, scale((*mult)[i], t[idx[i]]));
      bool feasible = true;
      for (size_t j = 0; j < n; ++j)
        if (pairing(constraints[j], mu) < 1) { feasible = false; break; }
      if (!feasible) continue;
      // Feasible KKT point of a strictly convex problem: the optimum.
      return MinNormCertificate{mu, idx, *mult};
    } while (next_subset(idx, n));
  }
  throw EngineError(Err::Infeasible, "min_norm_point: constraint cone is empty");
}

bool verify_certificate(const std::vector<Vec>& constraints, const Gram& gram,
                        const MinNormCertificate& cert) {
  Vec mu = zero_vec(gram.rank());
  if (cert.active.size() != cert.multipliers.size()) return false;
  for (size_t i = 0; i < cert.active.size(); ++i) {
    if (cert.multipliers[i] < 0) return false;
    mu = add(mu, scale(cert.multipliers[i], gram.transport(constraints[cert.active[i]])));
  }
  if (mu != cert.point) return false;
  for (size_t i : cert.active)
    if (pairing(constraints[i], cert.point) != 1) return false;
  for (const auto& c : constraints)
    if (pairing(c, cert.point) < 1) return false;
  return true;
}

std::optional<HullPoint> hull_min_norm(const std::vector<Vec>& points, const Gram& gram) {
  size_t n = points.size();
  if (n == 0) return std::nullopt;
  size_t rank = gram.rank();
  std::vector<Vec> p(n);
  for (size_t i = 0; i < n; ++i) p[i] = gram.transport(points[i]);

  size_t kmax = std::min(rank + 1, n);
  for (size_t k = 1; k <= kmax; ++k) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      // Min-norm point of the affine hull of p[idx]: x = p0 + sum s_j d_j
      // with (x, d_j) = 0, d_j = p_j - p0.
      const Vec& p0 = p[idx[0]];
      std::vector<Vec> d;
      for (size_t j = 1; j < k; ++j) d.push_back(sub(p[idx[j]], p0));
      Mat sys(k - 1, zero_vec(k - 1));
      Vec rhs(k - 1);
      for (size_t i = 0; i + 1 < k; ++i) {
        rhs[i] = -gram.inner(d[i], p0);
        for (size_t j = 0; j + 1 < k; ++j) sys[i][j] = gram.inner(d[i], d[j]);
      }
      if (k > 1 && rank_of(sys) != k - 1) continue;  // affinely dependent
      Vec s;
      if (k == 1) {
        s = {};
      } else {
        auto sol = solve(sys, rhs);
        if (!sol) continue;
        s = *sol;
      }
      Vec x = p0;
      Vec coeff(k, Rat(1));
      for (size_t j = 1; j < k; ++j) {
        x = add(x, scale(s[j - 1], d[j - 1]));
        coeff[j] = s[j - 1];
        coeff[0] -= s[j - 1];
      }
      bool convex = true;
      for (const auto& c : coeff)
        if (c < 0) { convex = false; break; }
      if (!convex) continue;
      // Wolfe optimality over the whole point set: (x, p_k) >= (x, x).
      Rat xx = gram.norm2(x);
      bool optimal = true;
      for (size_t j = 0; j < n; ++j)
        if (gram.inner(x, p[j]) < xx) { optimal = false; break; }
      if (!optimal) continue;
      return HullPoint{x, idx, coeff};
    } while (next_subset(idx, n));
  }
  throw EngineError(Err::Internal, "hull_min_norm: no certified face (should not happen)");
}

bool origin_in_hull(const std::vector<Vec>& points, const Gram& gram) {
  if (points.empty()) return false;
  for (const auto& pt : points)
    if (is_zero(pt)) return true;
  auto h = hull_min_norm(points, gram);
  return h && is_zero(h->point);
}

}  // namespace hesselink
