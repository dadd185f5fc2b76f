#pragma once

// Integral structures on cocharacter space. A lattice here is the Z-span of
// finitely many rational vectors, possibly of lower rank than the ambient
// space (type-A coroot lattices).

#include "hesselink/linalg.hpp"

#include <numeric>

namespace hesselink {

class Lattice {
 public:
  /// Standard lattice Z^rank.
  static Lattice standard(size_t rank);

  /// Z-span of the given generators (a basis is extracted; generators must
  /// have rational entries, the lattice keeps exact denominators).
  static Lattice spanned_by(const std::vector<Vec>& generators, size_t rank);

  size_t ambient_rank() const { return rank_; }
  const std::vector<Vec>& basis() const { return basis_; }

  /// Coordinates of v in the lattice basis; nullopt if v is outside the
  /// rational span.
  std::optional<Vec> span_coords(const Vec& v) const;

  bool contains(const Vec& v) const;

  /// Smallest m > 0 with m*mu in the lattice and primitive there.
  /// Returns (lambda = m*mu, m). Throws if mu = 0 or outside the span.
  std::pair<Vec, Rat> primitivize(const Vec& mu) const;

 private:
  size_t rank_ = 0;
  std::vector<Vec> basis_;  // linearly independent lattice basis
};

inline Lattice Lattice::standard(size_t rank) {
  std::vector<Vec> gens;
  for (size_t i = 0; i < rank; ++i) {
    Vec e = zero_vec(rank);
    e[i] = 1;
    gens.push_back(e);
  }
  return spanned_by(gens, rank);
}

inline Lattice Lattice::spanned_by(const std::vector<Vec>& generators, size_t rank) {
  // Hermite-style reduction over Z after clearing denominators: scale all
  // generators by the common denominator D, HNF over Z, divide back.
  Lattice L;
  L.rank_ = rank;
  if (generators.empty()) return L;
  Int d = 1;
  for (const auto& g : generators) {
    if (g.size() != rank) throw EngineError(Err::LengthMismatch, "lattice generator length");
    for (const auto& x : g) d = lcm(d, denominator(x));
  }
  // Integer row HNF by Euclidean column elimination.
  std::vector<std::vector<Int>> rows;
  for (const auto& g : generators) {
    std::vector<Int> r(rank);
    for (size_t j = 0; j < rank; ++j) r[j] = numerator(Rat(g[j] * d));
    rows.push_back(r);
  }
  size_t rr = 0;
  for (size_t c = 0; c < rank && rr < rows.size(); ++c) {
    // Euclidean elimination in column c: pivot on the entry of minimal
    // absolute value so the quotient steps terminate.
    while (true) {
      size_t p = rows.size();
      for (size_t i = rr; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (p == rows.size() || abs(rows[i][c]) < abs(rows[p][c])) p = i;
      }
      if (p == rows.size()) break;
      std::swap(rows[p], rows[rr]);
      bool done = true;
      for (size_t i = rr + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int qt = rows[i][c] / rows[rr][c];
        for (size_t j = 0; j < rank; ++j) rows[i][j] -= qt * rows[rr][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) { ++rr; break; }
    }
  }
  rows.resize(rr);
  for (const auto& r : rows) {
    Vec b(rank);
    for (size_t j = 0; j < rank; ++j) b[j] = Rat(r[j], d);
    L.basis_.push_back(b);
  }
  return L;
}

inline std::optional<Vec> Lattice::span_coords(const Vec& v) const {
  if (v.size() != rank_) throw EngineError(Err::LengthMismatch, "lattice coords length");
  if (basis_.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  // Solve B^T c = v with B rows = basis.
  Mat bt = transpose(basis_);
  auto c = solve(bt, v);
  if (!c) return std::nullopt;
  if (mat_vec(bt, *c) != v) return std::nullopt;
  return c;
}

inline bool Lattice::contains(const Vec& v) const {
  auto c = span_coords(v);
  if (!c) return false;
  for (const auto& x : *c)
    if (!is_integer(x)) return false;
  return true;
}

inline std::pair<Vec, Rat> Lattice::primitivize(const Vec& mu) const {
  if (is_zero(mu)) throw EngineError(Err::Internal, "primitivize of zero vector");
  auto c = span_coords(mu);
  if (!c) throw EngineError(Err::Internal, "primitivize: vector outside lattice span");
  Int den = 1;
  for (const auto& x : *c) den = lcm(den, denominator(x));
  Int g = 0;
  for (const auto& x : *c) g = gcd(g, numerator(Rat(x * den)));
  if (g < 0) g = -g;
  Rat m = Rat(den, g);
  return {scale(m, mu), m};
}

}  // namespace hesselink
