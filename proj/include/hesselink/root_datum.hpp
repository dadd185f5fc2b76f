#pragma once

// Split and restricted root data at desk scale (rank <= 4), with the
// combinatorics the stratification needs: Weyl groups, dominance,
// parabolic subsets and the min-norm cone elements mu_P.

#include "hesselink/geometry.hpp"
#include "hesselink/lattice.hpp"

#include <string>

namespace hesselink {

/// Root datum over a fixed ambient cocharacter space. Restricted (relative)
/// data carry root multiplicities > 1 and may contain both a and 2a.
/// Split built-in types have all multiplicities 1 and integer root entries.
struct RootDatum {
  std::string label;
  size_t rank = 0;
  std::vector<Vec> roots;       // positives first, then their negatives
  std::vector<long> mults;      // parallel to roots
  std::vector<size_t> simples;  // indices (into roots) of the simple roots
  Gram gram{Mat{}};
  Lattice lattice;              // integral cocharacter structure
  bool relative = false;

  size_t positive_count() const { return roots.size() / 2; }
  bool is_positive(size_t i) const { return i < positive_count(); }

  long dim_group() const;       // rank + sum of root multiplicities

  Vec coroot(size_t i) const;   // 2*transport(root)/norm2
  Mat simple_reflection(size_t simple_pos) const;  // matrix on cocharacter space

  /// Root subsystem index set lying in the Q-span of the given simple roots.
  std::vector<size_t> span_closure(const std::vector<size_t>& simple_subset) const;

  void validate() const;        // invariant checks (negation closure, W-invariant gram, ...)
};

/// Per-factor Gram scales are optional; one positive rational per irreducible
/// factor of a product tag such as "A1xC2".
RootDatum build(const std::string& tag, const std::vector<Rat>& scales = {});

/// Built-in restricted data ("su21", "bc1(m1,m2)") or a textual description:
///   root <coords...> mult <k>     (positive roots only; negatives added)
///   simple <coords...>
///   gram <row entries...>         (one line per row)
/// Rational literals are "p/q".
RootDatum build_relative(const std::string& spec);

/// Full Weyl group as matrices on cocharacter space, in a canonical
/// (lexicographic) order. Throws SizeLimit if the closure exceeds the bound.
std::vector<Mat> weyl_group(const RootDatum& datum, size_t size_limit = 4096);

/// Unique dominant W-conjugate together with a word in simple reflections:
/// result = s_{w[k-1]} ... s_{w[0]} * mu.
std::pair<Vec, std::vector<size_t>> dominantize(const Vec& mu, const RootDatum& datum);

bool is_dominant(const Vec& mu, const RootDatum& datum);

/// Standard parabolic, named by the simple roots of its Levi.
struct Parabolic {
  std::vector<size_t> levi_simples;  // positions into datum.simples
};

std::vector<size_t> levi_roots(const Parabolic& p, const RootDatum& datum);
std::vector<size_t> nilradical_roots(const Parabolic& p, const RootDatum& datum);
long dim_parabolic(const Parabolic& p, const RootDatum& datum);

/// Min-norm element of { mu in a_P : <alpha, mu> >= 1 for alpha in Delta_P }.
/// Computed both by the subspace QP and by the dual-basis closed form; the
/// two routes must agree.
Vec mu_p(const Parabolic& p, const RootDatum& datum);

/// The Levi factor as a standalone root datum on the same ambient space.
RootDatum levi_datum(const Parabolic& p, const RootDatum& datum);

/// Lattice variants for the isogeny checks.
Lattice coroot_lattice(const RootDatum& datum);    // "sc"
Lattice coweight_lattice(const RootDatum& datum);  // "adjoint"

}  // namespace hesselink
