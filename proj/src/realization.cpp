#include "hesselink/realization.hpp"

#include <algorithm>

namespace hesselink {

namespace {

// gl_{n}: torus diag(t_1..t_n), entry (i,j) has weight e_i - e_j.
Realization make_gl(size_t n, size_t rank) {
  Realization r;
  r.n = n;
  r.entry_weight.assign(n * n, zero_vec(rank));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec w = zero_vec(rank);
      w[i] += 1;
      w[j] -= 1;
      r.entry_weight[i * n + j] = w;
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Mat m(n, zero_vec(n));
      m[i][j] = 1;
      r.root_chars.push_back(r.entry_weight[i * n + j]);
      r.root_vectors.push_back(m);
    }
  return r;
}

// sl2 with the rank-1 convention alpha = (2): torus diag(t, t^{-1}).
Realization make_sl2() {
  Realization r;
  r.n = 2;
  Vec eps1 = {Rat(1)}, eps2 = {Rat(-1)};
  std::vector<Vec> eps = {eps1, eps2};
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) r.entry_weight.push_back(sub(eps[i], eps[j]));
  Mat e(2, zero_vec(2)), f(2, zero_vec(2));
  e[0][1] = 1;
  f[1][0] = 1;
  r.root_chars = {Vec{Rat(2)}, Vec{Rat(-2)}};
  r.root_vectors = {e, f};
  return r;
}

// sp_{2n} for the form S with S[i][2n-1-i] = 1 (i < n), -1 (i >= n):
// torus diag(t_1..t_n, t_n^{-1}..t_1^{-1}).
Realization make_sp(size_t n) {
  size_t N = 2 * n;
  Realization r;
  r.n = N;
  std::vector<Vec> eps(N);
  for (size_t i = 0; i < n; ++i) {
    Vec v = zero_vec(n);
    v[i] = 1;
    eps[i] = v;
    eps[N - 1 - i] = negate(v);
  }
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) r.entry_weight.push_back(sub(eps[i], eps[j]));

  Mat s(N, zero_vec(N));
  for (size_t i = 0; i < n; ++i) {
    s[i][N - 1 - i] = 1;
    s[N - 1 - i][i] = -1;
  }
  // Membership: X in sp iff S*X is symmetric. Solve per weight space.
  auto in_sp = [&](const Mat& x) {
    Mat sx = mat_mul(s, x);
    for (size_t i = 0; i < N; ++i)
      for (size_t j = 0; j < i; ++j)
        if (sx[i][j] != sx[j][i]) return false;
    return true;
  };
  // Collect entry positions per nonzero weight, then pick the sp line.
  std::vector<std::pair<Vec, std::vector<std::pair<size_t, size_t>>>> spaces;
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      const Vec& w = r.entry_weight[i * N + j];
      if (is_zero(w)) continue;
      auto it = std::find_if(spaces.begin(), spaces.end(),
                             [&](const auto& p) { return p.first == w; });
      if (it == spaces.end())
        spaces.push_back({w, {{i, j}}});
      else
        it->second.push_back({i, j});
    }
  for (const auto& [w, entries] : spaces) {
    // Try sign patterns on up to two coupled entries.
    Mat m(N, zero_vec(N));
    if (entries.size() == 1) {
      m[entries[0].first][entries[0].second] = 1;
      if (!in_sp(m)) continue;
    } else if (entries.size() == 2) {
      m[entries[0].first][entries[0].second] = 1;
      m[entries[1].first][entries[1].second] = 1;
      if (!in_sp(m)) {
        m[entries[1].first][entries[1].second] = -1;
        if (!in_sp(m)) continue;
      }
    } else {
      continue;
    }
    r.root_chars.push_back(w);
    r.root_vectors.push_back(m);
  }
  return r;
}

}  // namespace

std::optional<Realization> Realization::for_type(const std::string& tag) {
  if (tag == "A1") return make_sl2();
  if (tag == "A2") return make_gl(3, 3);
  if (tag == "A3") return make_gl(4, 4);
  if (tag == "C2") return make_sp(2);
  if (tag == "C3") return make_sp(3);
  return std::nullopt;
}

const Mat& Realization::vector_for(const Vec& root_char) const {
  for (size_t i = 0; i < root_chars.size(); ++i)
    if (root_chars[i] == root_char) return root_vectors[i];
  throw EngineError(Err::NoRealization, "no root vector for " + vec_to_string(root_char));
}

std::optional<std::vector<Vec>> Realization::support_of(const Mat& x) const {
  std::vector<Vec> out;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (x[i][j] == 0) continue;
      const Vec& w = entry_weight[i * n + j];
      if (is_zero(w)) return std::nullopt;
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
  return out;
}

Mat Realization::conjugate(const Mat& g, const Mat& g_inv, const Mat& x) const {
  return mat_mul(g, mat_mul(x, g_inv));
}

}  // namespace hesselink
