#pragma once

// Weight systems of modules, graded pieces, filtrations, and restriction to
// the orthogonal Levi of a virtual cocharacter.

#include "hesselink/root_datum.hpp"

#include <map>

namespace hesselink {

struct WeightedModule {
  size_t rank = 0;              // ambient cocharacter rank
  std::vector<Vec> weights;     // distinct weights
  std::vector<long> mults;

  long dimension() const {
    long d = 0;
    for (long m : mults) d += m;
    return d;
  }
  void push(const Vec& w, long m);  // merges equal weights
};

WeightedModule adjoint_module(const RootDatum& datum);

/// Sub-multiset of weights with <chi, lambda> = k; lambda must be integral.
WeightedModule graded_piece(const WeightedModule& module, const Vec& lambda, long k);

/// Weights with <chi, mu> = r, any rational mu and r.
WeightedModule graded_at(const WeightedModule& module, const Vec& mu, const Rat& r);

/// dim V_{mu,r} for a single r >= 0.
long filtration_dim_at(const WeightedModule& module, const Vec& mu, const Rat& r);

/// Dimensions of the descending filtration at every jump value r >= 0.
std::map<Rat, long> filtration_dims(const WeightedModule& module, const Vec& mu);

/// The orthogonal Levi of mu: the root subsystem pairing to zero with mu,
/// viewed on an explicit rational basis of the mu-orthogonal subspace.
struct LeviData {
  Vec mu;
  std::vector<size_t> levi_root_indices;  // into datum.roots
  std::vector<Vec> perp_basis;            // basis of mu^perp, Gram-Schmidt over Q
  RootDatum perp_group;                   // rank-1-smaller datum (possibly torus)

  /// Restriction of a character to the orthogonal subtorus, in coordinates
  /// dual to perp_basis.
  Vec restrict_char(const Vec& chi) const;
  WeightedModule project(const WeightedModule& module) const;
};

LeviData levi_perp(const RootDatum& datum, const Vec& mu);

}  // namespace hesselink
