#include "hesselink/weighted_module.hpp"

#include <algorithm>

namespace hesselink {

void WeightedModule::push(const Vec& w, long m) {
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == w) {
      mults[i] += m;
      return;
    }
  }
  weights.push_back(w);
  mults.push_back(m);
}

WeightedModule adjoint_module(const RootDatum& datum) {
  WeightedModule m;
  m.rank = datum.rank;
  for (size_t i = 0; i < datum.roots.size(); ++i) m.push(datum.roots[i], datum.mults[i]);
  m.push(zero_vec(datum.rank), static_cast<long>(datum.rank));
  return m;
}

WeightedModule graded_piece(const WeightedModule& module, const Vec& lambda, long k) {
  for (const auto& x : lambda)
    if (!is_integer(x))
      throw EngineError(Err::MalformedSpec, "graded_piece requires an integral cocharacter");
  return graded_at(module, lambda, Rat(k));
}

WeightedModule graded_at(const WeightedModule& module, const Vec& mu, const Rat& r) {
  WeightedModule out;
  out.rank = module.rank;
  for (size_t i = 0; i < module.weights.size(); ++i)
    if (pairing(module.weights[i], mu) == r) out.push(module.weights[i], module.mults[i]);
  return out;
}

long filtration_dim_at(const WeightedModule& module, const Vec& mu, const Rat& r) {
  long d = 0;
  for (size_t i = 0; i < module.weights.size(); ++i)
    if (pairing(module.weights[i], mu) >= r) d += module.mults[i];
  return d;
}

std::map<Rat, long> filtration_dims(const WeightedModule& module, const Vec& mu) {
  std::map<Rat, long> out;
  std::vector<Rat> jumps = {Rat(0)};
  for (const auto& w : module.weights) {
    Rat p = pairing(w, mu);
    if (p > 0) jumps.push_back(p);
  }
  for (const auto& r : jumps) out[r] = filtration_dim_at(module, mu, r);
  return out;
}

Vec LeviData::restrict_char(const Vec& chi) const {
  Vec out(perp_basis.size());
  for (size_t j = 0; j < perp_basis.size(); ++j) out[j] = pairing(chi, perp_basis[j]);
  return out;
}

WeightedModule LeviData::project(const WeightedModule& module) const {
  WeightedModule out;
  out.rank = perp_basis.size();
  for (size_t i = 0; i < module.weights.size(); ++i)
    out.push(restrict_char(module.weights[i]), module.mults[i]);
  return out;
}

LeviData levi_perp(const RootDatum& datum, const Vec& mu) {
  if (is_zero(mu)) throw EngineError(Err::MalformedSpec, "levi_perp requires mu != 0");
  LeviData ld;
  ld.mu = mu;
  for (size_t i = 0; i < datum.roots.size(); ++i)
    if (pairing(datum.roots[i], mu) == 0) ld.levi_root_indices.push_back(i);

  // Gram-Schmidt over Q against mu and previously accepted vectors, no
  // normalization; deterministic in the standard basis order.
  std::vector<Vec> ortho = {mu};
  for (size_t i = 0; i < datum.rank; ++i) {
    Vec e = zero_vec(datum.rank);
    e[i] = 1;
    Vec v = e;
    for (const auto& b : ortho) v = sub(v, scale(datum.gram.inner(e, b) / datum.gram.norm2(b), b));
    if (!is_zero(v)) {
      ortho.push_back(v);
      ld.perp_basis.push_back(v);
    }
  }

  // The orthogonal Levi as a standalone datum on the perp coordinates.
  RootDatum g;
  g.label = datum.label + ":perp";
  g.rank = ld.perp_basis.size();
  std::vector<size_t> levi_pos;
  for (size_t i : ld.levi_root_indices)
    if (datum.is_positive(i)) levi_pos.push_back(i);
  auto restrict_chi = [&](const Vec& chi) {
    Vec out(ld.perp_basis.size());
    for (size_t j = 0; j < ld.perp_basis.size(); ++j) out[j] = pairing(chi, ld.perp_basis[j]);
    return out;
  };
  for (size_t i : levi_pos) {
    g.roots.push_back(restrict_chi(datum.roots[i]));
    g.mults.push_back(datum.mults[i]);
  }
  for (size_t i : levi_pos) {
    g.roots.push_back(negate(restrict_chi(datum.roots[i])));
    g.mults.push_back(datum.mults[i]);
  }
  // Simple roots of the Levi subsystem: indecomposable positives.
  for (size_t a = 0; a < levi_pos.size(); ++a) {
    const Vec& alpha = datum.roots[levi_pos[a]];
    bool decomposable = false;
    for (size_t b = 0; b < levi_pos.size() && !decomposable; ++b)
      for (size_t c = 0; c < levi_pos.size() && !decomposable; ++c)
        if (add(datum.roots[levi_pos[b]], datum.roots[levi_pos[c]]) == alpha) decomposable = true;
    if (!decomposable) g.simples.push_back(a);
  }
  Mat sub_gram(g.rank, zero_vec(g.rank));
  for (size_t i = 0; i < g.rank; ++i)
    for (size_t j = 0; j < g.rank; ++j)
      sub_gram[i][j] = datum.gram.inner(ld.perp_basis[i], ld.perp_basis[j]);
  g.gram = Gram(sub_gram);
  g.lattice = Lattice::standard(g.rank);
  g.relative = datum.relative;
  g.validate();
  ld.perp_group = g;
  return ld;
}

}  // namespace hesselink
