#pragma once

// Induction of strata from Levi subgroups: saturation labels, the blade
// nonemptiness test, transitivity / independence checks, and the seeded
// sampling fallback over matrix realizations.

#include "hesselink/realization.hpp"
#include "hesselink/stratification.hpp"

namespace hesselink {

struct InductionOptions {
  uint64_t seed = 20240625;
  size_t samples = 48;     // starting vectors
  size_t conjugations = 8; // conjugation steps per sample
  Budget budget;
};

struct InductionResult {
  Vec eta;                              // min-norm label of the saturated set
  Rat eta_q2;
  bool blade_nonempty = false;
  std::optional<StratumLabel> induced;  // present iff blade_nonempty
  enum class Method { Primary, SamplingFallback } method = Method::Primary;
  std::optional<Vec> fallback_label;    // best-effort, dominant
  std::optional<Rat> fallback_q2;
  std::string diagnostics;
};

/// Induction of a Levi stratum through the standard parabolic with the given
/// Levi. levi_stratum = nullopt means the trivial stratum. A nonempty blade
/// yields the table row with label dominantize(eta); an empty blade is
/// FLAGGED, with the sampling fallback attached when a matrix realization
/// exists for the type.
InductionResult induce(const RootDatum& datum, const Parabolic& parabolic,
                       const std::optional<Vec>& levi_stratum, const StrataTable& table,
                       const InductionOptions& opts = {});

/// True iff induce(...) is unflagged and lands on the target label.
bool xi_indicator(const RootDatum& datum, const Parabolic& parabolic,
                  const std::optional<Vec>& levi_stratum, const Vec& target,
                  const StrataTable& table, const InductionOptions& opts = {});

enum class CheckStatus { Ok, Mismatch, Skipped };

struct TransitivityResult {
  CheckStatus status;
  std::string detail;
};

/// Compares induction through P_0 directly against the two-step route
/// through the given intermediate parabolic (inner step from the Borel of
/// its Levi). SKIPPED when any step is flagged.
TransitivityResult transitivity_check(const RootDatum& datum, const Parabolic& intermediate,
                                      const StrataTable& table, const InductionOptions& opts = {});

struct IndependenceResult {
  CheckStatus status;
  bool agrees = false;  // for Skipped: agreement of best-effort data
  std::string detail;
};

/// Two standard parabolics with Weyl-conjugate Levis must induce the same
/// stratum. Rejects non-conjugate inputs. SKIPPED (with an agreement note)
/// when the primary path flags both sides.
IndependenceResult independence_check(const RootDatum& datum, const Parabolic& a,
                                      const Parabolic& b, const StrataTable& table,
                                      const InductionOptions& opts = {});

struct FallbackResult {
  Vec label;  // dominant, best-effort
  Rat q2;
  size_t samples_used = 0;
  uint64_t seed = 0;
};

/// Randomized search for the dense stratum of the span of W_sub: conjugates
/// seeded vectors by rational root-group elements and keeps the smallest
/// torus bound observed. Always best-effort; deterministic for a fixed seed.
FallbackResult sampling_fallback(const std::vector<std::pair<Vec, long>>& w_sub,
                                 const RootDatum& datum, const InductionOptions& opts = {});

}  // namespace hesselink
