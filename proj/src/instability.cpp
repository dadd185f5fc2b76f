#include "hesselink/instability.hpp"

#include <algorithm>
#include <set>

namespace hesselink {

namespace {

void trace_line(Trace* trace, size_t depth, const std::string& msg) {
  if (!trace) return;
  trace->push_back(std::string(2 * depth, ' ') + msg);
}

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

KempfDatum torus_optimal(const std::vector<Vec>& support, const Gram& gram,
                         const Lattice& lattice) {
  if (support.empty()) throw EngineError(Err::EmptySupport, "torus_optimal: empty support");
  for (const auto& chi : support)
    if (is_zero(chi)) throw EngineError(Err::ZeroConstraint, "torus_optimal: zero weight in support");
  KempfDatum kd;
  kd.cert = min_norm_point(support, gram);
  kd.mu = kd.cert.point;
  kd.q2 = gram.norm2(kd.mu);
  auto [lambda, m] = lattice.primitivize(kd.mu);
  if (!is_integer(m) || m <= 0)
    throw EngineError(Err::Internal, "torus_optimal: non-integral level " + rat_to_string(m));
  kd.lambda = lambda;
  kd.level = static_cast<long>(numerator(m));
  // Level identity: min over the support of <chi, lambda> equals the level.
  Rat lo = pairing(support[0], kd.lambda);
  for (const auto& chi : support) lo = std::min(lo, pairing(chi, kd.lambda));
  if (lo != m) throw EngineError(Err::Internal, "torus_optimal: level identity failed");
  return kd;
}

std::vector<Vec> candidate_labels(const WeightedModule& module, const RootDatum& group,
                                  const Budget& budget) {
  std::vector<Vec> chars;
  for (const auto& w : module.weights)
    if (!is_zero(w)) chars.push_back(w);
  std::vector<Vec> transported(chars.size());
  for (size_t i = 0; i < chars.size(); ++i) transported[i] = group.gram.transport(chars[i]);

  size_t n = chars.size();
  Mat q(n, zero_vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j) q[i][j] = q[j][i] = pairing(chars[i], transported[j]);

  std::set<Vec> found;
  size_t visited = 0;
  size_t kmax = std::min(group.rank, n);
  for (size_t k = 1; k <= kmax; ++k) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    if (n < k) break;
    do {
      if (++visited > budget.subset_limit)
        throw EngineError(Err::SizeLimit, "candidate_labels: subset budget exceeded");
      Mat sys(k, zero_vec(k));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) sys[i][j] = q[idx[i]][idx[j]];
      if (rank_of(sys) != k) continue;
      auto mult = solve(sys, Vec(k, Rat(1)));
      if (!mult) continue;
      bool nonneg = true;
      for (const auto& m : *mult)
        if (m < 0) { nonneg = false; break; }
      if (!nonneg) continue;
      Vec mu = zero_vec(group.rank);
      for (size_t i = 0; i < k; ++i) mu = add(mu, scale((*mult)[i], transported[idx[i]]));
      if (is_zero(mu)) continue;
      found.insert(dominantize(mu, group).first);
    } while (next_subset(idx, n));
  }

  std::vector<Vec> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    Rat na = group.gram.norm2(a), nb = group.gram.norm2(b);
    if (na != nb) return na > nb;
    return a < b;
  });
  return out;
}

bool generic_semistable(const RootDatum& group, const WeightedModule& module, Trace* trace,
                        const Budget& budget, size_t depth) {
  if (depth > budget.depth_limit)
    throw EngineError(Err::BudgetExceeded, "Kirwan-Ness recursion depth exceeded");
  if (module.dimension() == 0) {
    trace_line(trace, depth, "module is zero: not semistable");
    return false;
  }
  if (group.roots.empty()) {
    // Torus case: the generic vector has full support.
    bool ss = origin_in_hull(module.weights, group.gram);
    trace_line(trace, depth,
               std::string("torus rank ") + std::to_string(group.rank) +
                   (ss ? ": 0 in weight hull, semistable" : ": 0 outside weight hull, unstable"));
    return ss;
  }
  if (group.relative && depth > 0)
    throw EngineError(Err::UnsupportedType,
                      "relative recursion reached a non-torus Levi; only relative data whose "
                      "Levi subrecursions bottom out in tori are supported");
  auto cands = candidate_labels(module, group, budget);
  trace_line(trace, depth, "group " + group.label + ": " + std::to_string(cands.size()) +
                               " candidate labels over dim " +
                               std::to_string(module.dimension()) + " module");
  for (const auto& nu : cands) {
    long dim_g = group.dim_group();
    long dim_p = static_cast<long>(group.rank);
    for (size_t i = 0; i < group.roots.size(); ++i)
      if (pairing(group.roots[i], nu) >= 0) dim_p += group.mults[i];
    long dim_v1 = filtration_dim_at(module, nu, Rat(1));
    long dim_stratum = dim_g - dim_p + dim_v1;
    if (dim_stratum != module.dimension()) continue;
    if (stratum_nonempty(nu, module, group, trace, budget, depth + 1)) {
      trace_line(trace, depth, "stratum " + vec_to_string(nu) + " fills the module: unstable");
      return false;
    }
  }
  trace_line(trace, depth, "no module-filling stratum: generic vector semistable");
  return true;
}

bool stratum_nonempty(const Vec& label, const WeightedModule& module, const RootDatum& group,
                      Trace* trace, const Budget& budget, size_t depth) {
  if (is_zero(label))
    throw EngineError(Err::MalformedSpec, "stratum_nonempty expects a nonzero label");
  WeightedModule graded = graded_at(module, label, Rat(1));
  LeviData ld = levi_perp(group, label);
  WeightedModule projected = ld.project(graded);
  trace_line(trace, depth,
             "label " + vec_to_string(label) + ": graded dim " +
                 std::to_string(graded.dimension()) + ", Levi roots " +
                 std::to_string(ld.levi_root_indices.size()) + ", test on perp rank " +
                 std::to_string(ld.perp_group.rank));
  bool ok = generic_semistable(ld.perp_group, projected, trace, budget, depth + 1);
  trace_line(trace, depth,
             "label " + vec_to_string(label) + (ok ? ": nonempty" : ": empty (rejected)"));
  return ok;
}

VectorLabel vector_label(const std::vector<Rat>& coords, const WeightedModule& module,
                         const RootDatum& group) {
  if (coords.size() != module.weights.size())
    throw EngineError(Err::LengthMismatch, "vector_label: one coordinate per distinct weight");
  std::vector<Vec> support;
  bool has_zero_weight = false;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (is_zero(module.weights[i]))
      has_zero_weight = true;
    else
      support.push_back(module.weights[i]);
  }
  if (support.empty() && !has_zero_weight)
    return {VectorLabel::Status::Semistable, std::nullopt, "zero vector"};
  if (has_zero_weight)
    return {VectorLabel::Status::Semistable, std::nullopt, "zero weight in support"};
  if (origin_in_hull(support, group.gram))
    return {VectorLabel::Status::Semistable, std::nullopt, "0 in support hull"};

  KempfDatum kd = torus_optimal(support, group.gram, group.lattice);
  // Kirwan-Ness certification of the graded component.
  std::vector<Vec> graded;
  for (const auto& chi : support)
    if (pairing(chi, kd.mu) == 1) graded.push_back(chi);
  LeviData ld = levi_perp(group, kd.mu);
  std::vector<Vec> projected;
  bool all_zero = true;
  for (const auto& chi : graded) {
    projected.push_back(ld.restrict_char(chi));
    if (!is_zero(projected.back())) all_zero = false;
  }
  if (all_zero)
    return {VectorLabel::Status::Certified, kd, "graded component fixed by the orthogonal Levi"};
  if (ld.perp_group.roots.empty()) {
    if (origin_in_hull(projected, ld.perp_group.gram))
      return {VectorLabel::Status::Certified, kd, "graded component torus-semistable"};
    return {VectorLabel::Status::Flagged, kd,
            "graded component unstable for the orthogonal torus; label is an upper bound"};
  }
  return {VectorLabel::Status::Flagged, kd,
          "reductive orthogonal Levi: per-vector semistability not decidable from weights"};
}

}  // namespace hesselink
