#pragma once

// Small dense exact-rational linear algebra: enough for rank <= 4 root data.

#include "hesselink/rational.hpp"

#include <optional>

namespace hesselink {

inline Vec zero_vec(size_t n) { return Vec(n, Rat(0)); }

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw EngineError(Err::LengthMismatch, "vector length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw EngineError(Err::LengthMismatch, "vector length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(const Rat& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

inline Vec negate(const Vec& v) { return scale(Rat(-1), v); }

inline Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw EngineError(Err::LengthMismatch, "vector length mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Mat identity(size_t n) {
  Mat m(n, zero_vec(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
  Vec r(m.size());
  for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat r(n, zero_vec(p));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j)
      if (a[i][j] != 0)
        for (size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
  return r;
}

inline Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat r(m[0].size(), zero_vec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
  return r;
}

// Row-reduces [a | rhs...] in place. Returns pivot columns.
inline std::vector<size_t> row_reduce(Mat& a) {
  std::vector<size_t> pivots;
  size_t rows = a.size();
  if (rows == 0) return pivots;
  size_t cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rat inv = Rat(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Solves a x = b (a: m x n, possibly non-square). Returns one solution or
/// nullopt when inconsistent. Free variables are set to zero.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
  size_t m = a.size();
  size_t n = m == 0 ? 0 : a[0].size();
  if (b.size() != m) throw EngineError(Err::LengthMismatch, "solve: rhs length mismatch");
  Mat aug(m, zero_vec(n + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  auto pivots = row_reduce(aug);
  for (size_t i = pivots.size(); i < m; ++i)
    if (aug[i][n] != 0) return std::nullopt;
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vec x = zero_vec(n);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

/// Basis of { x : a x = 0 }.
inline std::vector<Vec> kernel_basis(const Mat& a) {
  size_t m = a.size();
  size_t n = m == 0 ? 0 : a[0].size();
  Mat red = a;
  auto pivots = row_reduce(red);
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(n);
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red[i][c];
    basis.push_back(v);
  }
  return basis;
}

inline size_t rank_of(Mat a) { return row_reduce(a).size(); }

inline std::optional<Mat> inverse(const Mat& a) {
  size_t n = a.size();
  Mat aug(n, zero_vec(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() != n) return std::nullopt;
  for (size_t i = 0; i < n; ++i)
    if (pivots[i] != i) return std::nullopt;
  Mat inv(n, zero_vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

inline Rat det(Mat a) {
  size_t n = a.size();
  Rat d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    Rat inv = Rat(1) / a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] * inv;
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

}  // namespace hesselink
