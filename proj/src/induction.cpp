#include "hesselink/induction.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hesselink {

namespace {

// W_sub as (weight, multiplicity) pairs: the Levi-saturation weights of the
// Levi stratum together with the nilradical roots.
std::vector<std::pair<Vec, long>> union_support(const RootDatum& datum, const Parabolic& parabolic,
                                                const std::optional<Vec>& levi_stratum) {
  std::vector<std::pair<Vec, long>> w_sub;
  auto push = [&](const Vec& w, long m) {
    for (auto& [v, mm] : w_sub)
      if (v == w) {
        mm += m;
        return;
      }
    w_sub.push_back({w, m});
  };
  if (levi_stratum && !is_zero(*levi_stratum)) {
    for (size_t i : levi_roots(parabolic, datum))
      if (pairing(datum.roots[i], *levi_stratum) >= 1) push(datum.roots[i], datum.mults[i]);
  }
  for (size_t i : nilradical_roots(parabolic, datum)) push(datum.roots[i], datum.mults[i]);
  return w_sub;
}

}  // namespace

InductionResult induce(const RootDatum& datum, const Parabolic& parabolic,
                       const std::optional<Vec>& levi_stratum, const StrataTable& table,
                       const InductionOptions& opts) {
  InductionResult res;
  auto w_sub = union_support(datum, parabolic, levi_stratum);

  if (w_sub.empty()) {
    // P = G and a trivial Levi stratum: the induced stratum is trivial.
    res.eta = zero_vec(datum.rank);
    res.eta_q2 = 0;
    res.blade_nonempty = true;
    res.induced = *table.find(res.eta);
    res.diagnostics = "identity induction of the trivial stratum";
    return res;
  }

  std::vector<Vec> chars;
  for (const auto& [w, m] : w_sub) chars.push_back(w);
  auto cert = min_norm_point(chars, datum.gram);
  res.eta = cert.point;
  res.eta_q2 = datum.gram.norm2(res.eta);

  // Blade test: Kirwan-Ness on the level-one graded sub-multiset of W_sub.
  WeightedModule graded;
  graded.rank = datum.rank;
  for (const auto& [w, m] : w_sub)
    if (pairing(w, res.eta) == 1) graded.push(w, m);
  LeviData ld = levi_perp(datum, res.eta);
  WeightedModule projected = ld.project(graded);
  Trace trace;
  res.blade_nonempty = generic_semistable(ld.perp_group, projected, &trace, opts.budget);

  std::ostringstream diag;
  if (levi_stratum && !is_zero(*levi_stratum)) {
    // Record the comparison with xi + mu_P; the two are not reconciled here.
    Vec sum = add(*levi_stratum, mu_p(parabolic, datum));
    if (sum != res.eta) {
      bool feasible = true;
      for (const auto& [w, m] : w_sub)
        if (pairing(w, sum) < 1) feasible = false;
      diag << "xi + mu_P = " << vec_to_string(sum) << " differs from eta = "
           << vec_to_string(res.eta) << (feasible ? "" : " (and is infeasible for the support)")
           << "; ";
    }
  }

  if (res.blade_nonempty) {
    Vec dom = dominantize(res.eta, datum).first;
    const StratumLabel* row = table.find(dom);
    if (!row)
      throw EngineError(Err::Internal, "induced label missing from stratum table");
    res.induced = *row;
    res.method = InductionResult::Method::Primary;
    diag << "blade nonempty; induced label " << vec_to_string(dom);
  } else {
    res.method = InductionResult::Method::SamplingFallback;
    diag << "blade empty at eta = " << vec_to_string(res.eta) << " (FLAGGED)";
    if (Realization::for_type(datum.label)) {
      auto fb = sampling_fallback(w_sub, datum, opts);
      res.fallback_label = fb.label;
      res.fallback_q2 = fb.q2;
      diag << "; sampling fallback (best-effort, " << fb.samples_used << " samples, seed "
           << fb.seed << ") suggests " << vec_to_string(fb.label);
    } else {
      diag << "; no matrix realization for " << datum.label << ", no fallback";
    }
  }
  res.diagnostics = diag.str();
  return res;
}

bool xi_indicator(const RootDatum& datum, const Parabolic& parabolic,
                  const std::optional<Vec>& levi_stratum, const Vec& target,
                  const StrataTable& table, const InductionOptions& opts) {
  auto r = induce(datum, parabolic, levi_stratum, table, opts);
  return r.blade_nonempty && r.induced->kempf.mu == target;
}

TransitivityResult transitivity_check(const RootDatum& datum, const Parabolic& intermediate,
                                      const StrataTable& table, const InductionOptions& opts) {
  // Inner step: induce the trivial stratum from the Borel of the Levi,
  // inside the Levi.
  RootDatum levi = levi_datum(intermediate, datum);
  StrataTable levi_table = enumerate_strata(levi, opts.budget);
  auto inner = induce(levi, Parabolic{{}}, std::nullopt, levi_table, opts);
  if (!inner.blade_nonempty)
    return {CheckStatus::Skipped, "inner induction flagged"};
  Vec xi = inner.induced->kempf.mu;

  auto outer = induce(datum, intermediate, xi, table, opts);
  auto direct = induce(datum, Parabolic{{}}, std::nullopt, table, opts);
  if (!outer.blade_nonempty || !direct.blade_nonempty)
    return {CheckStatus::Skipped, "outer or direct induction flagged"};
  if (outer.induced->kempf.mu == direct.induced->kempf.mu)
    return {CheckStatus::Ok, "both routes give " + vec_to_string(direct.induced->kempf.mu)};
  return {CheckStatus::Mismatch, "two-step " + vec_to_string(outer.induced->kempf.mu) +
                                     " vs direct " + vec_to_string(direct.induced->kempf.mu)};
}

IndependenceResult independence_check(const RootDatum& datum, const Parabolic& a,
                                      const Parabolic& b, const StrataTable& table,
                                      const InductionOptions& opts) {
  // The Levis must be Weyl-conjugate as root subsystems.
  auto root_set = [&](const Parabolic& p) {
    std::vector<Vec> rs;
    for (size_t i : levi_roots(p, datum)) rs.push_back(datum.roots[i]);
    std::sort(rs.begin(), rs.end());
    return rs;
  };
  auto ra = root_set(a), rb = root_set(b);
  bool conjugate = false;
  for (const auto& w : weyl_group(datum)) {
    std::vector<Vec> img;
    // Characters transform by the inverse transpose of the cocharacter action.
    auto winv = inverse(w);
    for (const auto& r : ra) img.push_back(mat_vec(transpose(*winv), r));
    std::sort(img.begin(), img.end());
    if (img == rb) {
      conjugate = true;
      break;
    }
  }
  if (!conjugate)
    throw EngineError(Err::MalformedSpec, "independence_check: Levis are not Weyl-conjugate");

  auto ia = induce(datum, a, std::nullopt, table, opts);
  auto ib = induce(datum, b, std::nullopt, table, opts);
  if (ia.blade_nonempty && ib.blade_nonempty) {
    bool eq = ia.induced->kempf.mu == ib.induced->kempf.mu;
    return {eq ? CheckStatus::Ok : CheckStatus::Mismatch, eq,
            "labels " + vec_to_string(ia.induced->kempf.mu) + " / " +
                vec_to_string(ib.induced->kempf.mu)};
  }
  // Primary path flagged: record whether the best-effort data agree.
  bool agrees = false;
  std::string detail = "flagged";
  if (ia.fallback_label && ib.fallback_label) {
    agrees = *ia.fallback_label == *ib.fallback_label;
    detail = "flagged; fallback labels " + vec_to_string(*ia.fallback_label) + " / " +
             vec_to_string(*ib.fallback_label);
  }
  return {CheckStatus::Skipped, agrees, detail};
}

FallbackResult sampling_fallback(const std::vector<std::pair<Vec, long>>& w_sub,
                                 const RootDatum& datum, const InductionOptions& opts) {
  auto real = Realization::for_type(datum.label);
  if (!real)
    throw EngineError(Err::NoRealization, "no matrix realization for " + datum.label);

  std::mt19937_64 rng(opts.seed);
  auto small_int = [&](long lo, long hi) {
    return static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1)) + lo;
  };

  std::optional<Vec> best;
  Rat best_q2;
  size_t used = 0;

  auto consider = [&](const Mat& x) {
    auto support = real->support_of(x);
    if (!support || support->empty()) return;
    try {
      KempfDatum kd = torus_optimal(*support, datum.gram, datum.lattice);
      if (!best || kd.q2 < best_q2) {
        best = dominantize(kd.mu, datum).first;
        best_q2 = kd.q2;
      }
    } catch (const EngineError& e) {
      if (e.code != Err::Infeasible) throw;
    }
  };

  size_t n = real->n;
  for (size_t s = 0; s < opts.samples; ++s) {
    Mat x(n, zero_vec(n));
    for (const auto& [w, m] : w_sub) {
      const Mat& e = real->vector_for(w);
      Rat c(small_int(1, 4));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) x[i][j] += c * e[i][j];
    }
    ++used;
    consider(x);
    for (size_t step = 0; step < opts.conjugations; ++step) {
      const Mat& e = real->root_vectors[rng() % real->root_vectors.size()];
      Rat t(small_int(-4, 4), small_int(1, 4));
      if (t == 0) continue;
      // exp(t e) = 1 + t e for these realizations (e^2 = 0).
      Mat g = identity(n), g_inv = identity(n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          g[i][j] += t * e[i][j];
          g_inv[i][j] -= t * e[i][j];
        }
      x = real->conjugate(g, g_inv, x);
      ++used;
      consider(x);
    }
  }
  if (!best)
    throw EngineError(Err::Internal, "sampling fallback found no usable conjugate");
  return {*best, best_q2, used, opts.seed};
}

}  // namespace hesselink
