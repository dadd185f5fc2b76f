#include "hesselink/stratification.hpp"

#include <algorithm>
#include <set>

namespace hesselink {

const StratumLabel* StrataTable::find(const Vec& mu) const {
  for (const auto& r : rows)
    if (r.kempf.mu == mu) return &r;
  return nullptr;
}

StrataTable enumerate_strata(const RootDatum& datum, const Budget& budget) {
  StrataTable table;
  table.datum_label = datum.label;
  WeightedModule adjoint = adjoint_module(datum);
  auto cands = candidate_labels(adjoint, datum, budget);

  for (const auto& nu : cands) {
    Trace trace;
    if (!stratum_nonempty(nu, adjoint, datum, &trace, budget)) {
      table.diagnostics.push_back({nu, datum.gram.norm2(nu), trace});
      continue;
    }
    StratumLabel row;
    // Rebuild the Kempf datum from the saturation support; its min-norm
    // point must reproduce the label.
    std::vector<Vec> saturation_support;
    for (size_t i = 0; i < adjoint.weights.size(); ++i)
      if (pairing(adjoint.weights[i], nu) >= 1) saturation_support.push_back(adjoint.weights[i]);
    row.kempf = torus_optimal(saturation_support, datum.gram, datum.lattice);
    if (row.kempf.mu != nu)
      throw EngineError(Err::Internal, "stratum label is not the min-norm of its saturation");
    for (size_t sp = 0; sp < datum.simples.size(); ++sp)
      if (pairing(datum.roots[datum.simples[sp]], nu) == 0) row.levi_simples.push_back(sp);
    long dim_p = static_cast<long>(datum.rank);
    for (size_t i = 0; i < datum.roots.size(); ++i)
      if (pairing(datum.roots[i], nu) >= 0) dim_p += datum.mults[i];
    row.dim_parabolic = dim_p;
    row.dim_saturation = filtration_dim_at(adjoint, nu, Rat(1));
    row.dim_stratum = datum.dim_group() - dim_p + row.dim_saturation;
    row.certificate = std::move(trace);
    table.rows.push_back(std::move(row));
  }

  // Trivial stratum {e}.
  StratumLabel triv;
  triv.trivial = true;
  triv.kempf.mu = zero_vec(datum.rank);
  triv.kempf.lambda = zero_vec(datum.rank);
  triv.kempf.level = 0;
  triv.kempf.q2 = 0;
  for (size_t sp = 0; sp < datum.simples.size(); ++sp) triv.levi_simples.push_back(sp);
  triv.dim_parabolic = datum.dim_group();
  triv.dim_saturation = 0;
  triv.dim_stratum = 0;
  triv.certificate = {"trivial stratum"};
  table.rows.push_back(std::move(triv));

  std::sort(table.rows.begin(), table.rows.end(), [](const StratumLabel& a, const StratumLabel& b) {
    if (a.kempf.q2 != b.kempf.q2) return a.kempf.q2 > b.kempf.q2;
    return a.kempf.mu < b.kempf.mu;
  });
  return table;
}

StratumLabel regular_label(const RootDatum& datum, const Budget& budget) {
  std::vector<Vec> positives;
  for (size_t i = 0; i < datum.positive_count(); ++i) positives.push_back(datum.roots[i]);
  KempfDatum kd = torus_optimal(positives, datum.gram, datum.lattice);
  Vec dom = dominantize(kd.mu, datum).first;
  Parabolic p0{{}};
  Vec mp = mu_p(p0, datum);
  if (dom != dominantize(mp, datum).first)
    throw EngineError(Err::Internal, "regular label differs from mu_{P_0}");
  auto table = enumerate_strata(datum, budget);
  const StratumLabel* row = table.find(dom);
  if (!row) throw EngineError(Err::Internal, "regular stratum missing from table");
  return *row;
}

IsogenyReport isogeny_invariance_check(const RootDatum& datum, const Budget& budget) {
  RootDatum sc = datum;
  sc.lattice = coroot_lattice(datum);
  RootDatum ad = datum;
  ad.lattice = coweight_lattice(datum);
  auto t_sc = enumerate_strata(sc, budget);
  auto t_ad = enumerate_strata(ad, budget);

  IsogenyReport rep;
  rep.labels_agree = t_sc.rows.size() == t_ad.rows.size();
  if (rep.labels_agree) {
    for (size_t i = 0; i < t_sc.rows.size(); ++i) {
      const auto& a = t_sc.rows[i];
      const auto& b = t_ad.rows[i];
      if (a.kempf.mu != b.kempf.mu || a.kempf.q2 != b.kempf.q2) {
        rep.labels_agree = false;
        break;
      }
      if (a.trivial) continue;
      rep.rows.push_back({a.kempf.mu, a.kempf.q2, a.kempf.lambda, a.kempf.level, b.kempf.lambda,
                          b.kempf.level,
                          a.kempf.lambda != b.kempf.lambda || a.kempf.level != b.kempf.level});
    }
  }
  return rep;
}

NormInvarianceReport norm_invariance_check(const std::string& tag, const std::vector<Rat>& scales1,
                                           const std::vector<Rat>& scales2, const Budget& budget) {
  RootDatum d1 = build(tag, scales1);
  RootDatum d2 = build(tag, scales2);
  auto t1 = enumerate_strata(d1, budget);
  auto t2 = enumerate_strata(d2, budget);

  // Partition signature: the saturation as a weight multiset, plus the level.
  auto signature = [](const StrataTable& t, const RootDatum& d) {
    WeightedModule adjoint = adjoint_module(d);
    std::set<std::pair<std::vector<std::pair<Vec, long>>, long>> sig;
    for (const auto& row : t.rows) {
      if (row.trivial) continue;
      std::vector<std::pair<Vec, long>> sat;
      for (size_t i = 0; i < adjoint.weights.size(); ++i)
        if (pairing(adjoint.weights[i], row.kempf.mu) >= 1)
          sat.emplace_back(adjoint.weights[i], adjoint.mults[i]);
      std::sort(sat.begin(), sat.end());
      sig.emplace(std::move(sat), row.kempf.level);
    }
    return sig;
  };
  NormInvarianceReport rep;
  auto s1 = signature(t1, d1);
  rep.partitions_agree = s1 == signature(t2, d2);
  rep.strata_count = s1.size();
  return rep;
}

}  // namespace hesselink
