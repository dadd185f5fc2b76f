#pragma once

// Kempf data for supports, candidate stratum labels, and the
// generic-semistability recursion (Kirwan-Ness over the orthogonal Levi).

#include "hesselink/weighted_module.hpp"

#include <optional>

namespace hesselink {

/// Optimal-cocharacter package for a uniformly unstable support:
/// mu normalized (level 1), lambda the primitive integral multiple,
/// level = m with lambda = m * mu, q2 = (mu, mu).
struct KempfDatum {
  Vec mu;
  Vec lambda;
  long level = 0;
  Rat q2;
  MinNormCertificate cert;
};

/// Flat text trace of a Kirwan-Ness recursion, for certificates.
using Trace = std::vector<std::string>;

struct Budget {
  size_t subset_limit = 2'000'000;
  size_t depth_limit = 8;
};

/// Min-norm optimum over a torus support. The support must be nonempty and
/// free of zero weights; primitivization happens in the given lattice.
KempfDatum torus_optimal(const std::vector<Vec>& support, const Gram& gram,
                         const Lattice& lattice);

/// Every possible normalized optimal label for the module: KKT solutions of
/// all linearly independent active subsets of size <= rank, dominantized and
/// deduplicated. Sorted by decreasing norm, then lexicographically.
std::vector<Vec> candidate_labels(const WeightedModule& module, const RootDatum& group,
                                  const Budget& budget = {});

/// True iff the generic vector of the module is semistable for the group,
/// i.e. the nullcone is a proper subvariety. Torus base case: 0 in the hull
/// of the weights. Reductive case: no candidate stratum is nonempty and
/// module-filling.
bool generic_semistable(const RootDatum& group, const WeightedModule& module,
                        Trace* trace = nullptr, const Budget& budget = {}, size_t depth = 0);

/// Nonemptiness of the stratum with the given normalized label: the graded
/// piece at level one, restricted to the orthogonal Levi, must be
/// generically semistable.
bool stratum_nonempty(const Vec& label, const WeightedModule& module, const RootDatum& group,
                      Trace* trace = nullptr, const Budget& budget = {}, size_t depth = 0);

/// Instability label of a specific vector, given by its coordinates over the
/// module's distinct weights.
struct VectorLabel {
  enum class Status { Semistable, Certified, Flagged };
  Status status;
  std::optional<KempfDatum> datum;  // present unless Semistable
  std::string note;
};

VectorLabel vector_label(const std::vector<Rat>& coords, const WeightedModule& module,
                         const RootDatum& group);

}  // namespace hesselink
