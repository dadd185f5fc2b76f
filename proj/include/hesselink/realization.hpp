#pragma once

// Matrix Lie-algebra realizations for types A and C, used only by the
// induction sampling fallback. The core engine stays weights-only.

#include "hesselink/root_datum.hpp"

#include <optional>

namespace hesselink {

struct Realization {
  size_t n = 0;                         // matrix size
  std::vector<Vec> entry_weight;        // n*n flattened: torus weight of entry (i,j)
  std::vector<Vec> root_chars;          // datum root characters (all roots)
  std::vector<Mat> root_vectors;        // parallel; each squares to zero

  static std::optional<Realization> for_type(const std::string& tag);

  const Mat& vector_for(const Vec& root_char) const;

  /// Distinct nonzero-entry weights of x. nullopt when a diagonal entry is
  /// nonzero (zero weight in the support, unusable for instability bounds).
  std::optional<std::vector<Vec>> support_of(const Mat& x) const;

  Mat conjugate(const Mat& g, const Mat& g_inv, const Mat& x) const;
};

}  // namespace hesselink
