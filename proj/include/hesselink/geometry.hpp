#pragma once

// Exact convex subroutines on character/cocharacter space: the min-norm
// point of { mu : <chi_i, mu> >= 1 } and the min-norm point of a convex
// hull, both with KKT certificates over Q.

#include "hesselink/linalg.hpp"

#include <optional>

namespace hesselink {

/// Positive definite symmetric form on cocharacter space.
class Gram {
 public:
  explicit Gram(Mat m);

  size_t rank() const { return m_.size(); }
  const Mat& matrix() const { return m_; }

  Rat inner(const Vec& a, const Vec& b) const;
  Rat norm2(const Vec& a) const { return inner(a, a); }

  /// Gram transport of a character: the unique nu with (nu, x) = <chi, x>
  /// for all x.
  Vec transport(const Vec& chi) const;

  /// Scales the whole form by c > 0.
  Gram scaled(const Rat& c) const;

 private:
  Mat m_;
  Mat inv_;
};

/// Canonical pairing <chi, nu> of a character with a cocharacter.
Rat pairing(const Vec& chi, const Vec& nu);

struct MinNormCertificate {
  Vec point;                      // the optimum mu
  std::vector<size_t> active;     // constraint indices with pairing exactly 1
  std::vector<Rat> multipliers;   // nonnegative, parallel to active
};

/// Unique minimizer of (mu,mu) subject to <chi_i, mu> >= 1 for every
/// constraint. Exact active-set enumeration over subsets of size <= rank.
/// Empty constraint set yields mu = 0 with an empty certificate.
/// Throws ZeroConstraint on a zero constraint and Infeasible when the cone
/// is empty (equivalently, 0 lies in the hull of the constraints).
MinNormCertificate min_norm_point(const std::vector<Vec>& constraints, const Gram& gram);

/// Verifies a certificate against its instance: reconstructs the point from
/// the multipliers, checks feasibility and complementary slackness.
bool verify_certificate(const std::vector<Vec>& constraints, const Gram& gram,
                        const MinNormCertificate& cert);

struct HullPoint {
  Vec point;                     // min-norm point of conv(transport(points))
  std::vector<size_t> support;   // indices of the convex combination
  std::vector<Rat> coefficients; // nonnegative, sum 1
};

/// Min-norm point of the convex hull of the transported points, with a
/// convex-combination certificate (Wolfe optimality checked exactly).
/// nullopt only for an empty point set.
std::optional<HullPoint> hull_min_norm(const std::vector<Vec>& points, const Gram& gram);

/// True iff 0 lies in the convex hull of the transported points.
bool origin_in_hull(const std::vector<Vec>& points, const Gram& gram);

}  // namespace hesselink
