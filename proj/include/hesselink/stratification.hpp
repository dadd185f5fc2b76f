#pragma once

// Full stratum tables of nilpotent/unipotent cones: labels, levels, norms,
// destabilizing parabolics, dimensions, certificates, plus the cross-datum
// invariance checks.

#include "hesselink/instability.hpp"

namespace hesselink {

struct StratumLabel {
  KempfDatum kempf;                  // mu, lambda, level, q2
  std::vector<size_t> levi_simples;  // of the destabilizing parabolic P_mu
  long dim_parabolic = 0;
  long dim_saturation = 0;           // dim V_{mu,1}
  long dim_stratum = 0;              // dim G - dim P + dim V_{mu,1}
  Trace certificate;
  bool trivial = false;
};

/// A candidate label rejected by the Kirwan-Ness nonemptiness test.
struct RejectedCandidate {
  Vec label;
  Rat q2;
  Trace reason;
};

struct StrataTable {
  std::string datum_label;
  std::vector<StratumLabel> rows;            // decreasing q2, trivial last
  std::vector<RejectedCandidate> diagnostics;

  const StratumLabel* find(const Vec& mu) const;
};

StrataTable enumerate_strata(const RootDatum& datum, const Budget& budget = {});

/// The stratum of a generic full-simple-support element; equals the
/// dominantization of mu_{P_0} and must be nonempty.
StratumLabel regular_label(const RootDatum& datum, const Budget& budget = {});

/// Strata recomputed with the coroot lattice vs the coweight lattice as the
/// integral structure: normalized labels and q2 must agree, the (lambda, m)
/// pairs may differ and are reported.
struct IsogenyReport {
  bool labels_agree = false;
  struct Row {
    Vec mu;
    Rat q2;
    Vec lambda_sc;
    long m_sc;
    Vec lambda_ad;
    long m_ad;
    bool differs;
  };
  std::vector<Row> rows;
};

IsogenyReport isogeny_invariance_check(const RootDatum& datum, const Budget& budget = {});

/// Stratum partitions under two admissible Gram forms: the saturations and
/// levels must coincide; q2 values are excluded from the assertion.
struct NormInvarianceReport {
  bool partitions_agree = false;
  size_t strata_count = 0;
};

NormInvarianceReport norm_invariance_check(const std::string& tag, const std::vector<Rat>& scales1,
                                           const std::vector<Rat>& scales2,
                                           const Budget& budget = {});

}  // namespace hesselink
