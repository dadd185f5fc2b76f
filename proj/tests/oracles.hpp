#pragma once

// Independent oracles for the test suites. These deliberately avoid the
// engine's computational path: partition combinatorics for classical orbit
// data, exhaustive vertex enumeration for the min-norm program, and a
// brute-force semistability search over a 64-element field.

#include "hesselink/linalg.hpp"
#include "hesselink/geometry.hpp"

#include <cstdint>
#include <optional>

namespace oracle {

using hesselink::Gram;
using hesselink::Mat;
using hesselink::Rat;
using hesselink::Vec;

// ---- partition combinatorics -------------------------------------------

std::vector<std::vector<int>> partitions(int n);

/// Weighted Dynkin cocharacter of the gl_n (= sl_n) nilpotent orbit of a
/// partition, as a sorted-descending diagonal vector in Z^n.
Vec type_a_weighted_dynkin(const std::vector<int>& partition);
long type_a_orbit_dim(const std::vector<int>& partition);

/// Symplectic partitions of 2n (odd parts with even multiplicity).
std::vector<std::vector<int>> symplectic_partitions(int two_n);
Vec type_c_weighted_dynkin(const std::vector<int>& partition, int n);
long type_c_orbit_dim(const std::vector<int>& partition, int n);

// ---- exhaustive vertex oracle for the min-norm program ------------------

/// Minimum of (mu,mu) over all feasible vertices of { <chi_i,mu> >= 1 }
/// (full-rank active subsets only). nullopt when no feasible vertex exists.
std::optional<Rat> min_feasible_vertex_value(const std::vector<Vec>& constraints,
                                             const Gram& gram);

// ---- GF(64) brute force --------------------------------------------------

struct GF64 {
  uint8_t v = 0;
  friend GF64 operator+(GF64 a, GF64 b) { return GF64{static_cast<uint8_t>(a.v ^ b.v)}; }
  friend bool operator==(GF64 a, GF64 b) { return a.v == b.v; }
  bool is_zero() const { return v == 0; }
};
GF64 gf_mul(GF64 a, GF64 b);
GF64 gf_inv(GF64 a);

/// Torus generic-semistability by exhaustive search of destabilizing
/// integral cocharacters in a box: the generic vector has full support, so
/// this is exact. Weight entries must be small relative to the box.
bool torus_generic_semistable_oracle(const std::vector<Vec>& weights, int box);

/// SL2-module over GF(64) given as a direct sum of symmetric powers
/// Sym^{k_1} + ... ; decides generic semistability by sampling vectors and
/// enumerating all 65 destabilizing flags per sample.
bool sl2_generic_semistable_oracle(const std::vector<int>& sym_powers, int samples,
                                   uint64_t seed);

/// Weight multiset (in the alpha = (2) normalization) of the module above.
std::vector<Vec> sl2_module_weights(const std::vector<int>& sym_powers);

}  // namespace oracle
