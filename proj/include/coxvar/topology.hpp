#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxvar/quadric.hpp"

namespace coxvar {

/**
 * One reflecting hyperplane of the arrangement: {x_i = 0}, {x_i = x_j} or
 * {x_i = -x_j}, indices 1-based.
 */
struct Mirror {
  enum class Kind { coordinate, diagonal_diff, diagonal_sum };
  Kind kind = Kind::coordinate;
  int i = 1, j = 0;

  // signed distance surrogate: x_i, x_i - x_j, or x_i + x_j
  double side(std::span<const double> x) const;
  std::string to_string() const;
};

/** The full reflection arrangement: n coordinate mirrors + n(n-1) diagonals. */
struct MirrorArrangement {
  int n = 2;
  std::vector<Mirror> mirrors;

  static MirrorArrangement standard(int n);

  // Sign of each mirror functional at x (-1, 0, +1 with |.| <= tol as 0).
  // Points with no zero entry lie in an open chamber; the pattern labels it.
  std::vector<int> sign_pattern(std::span<const double> x, double tol = kDefaultTol) const;
};

/**
 * One connected piece of the variety inside the closed fundamental chamber
 * {0 <= x_1 <= ... <= x_n}, described by which of the n chamber walls its
 * closure meets. Wall 0 is the coordinate face {x_1 = 0}; wall w in 1..n-1
 * is the diagonal {x_w = x_{w+1}}.
 */
struct ChamberComponent {
  int id = 0;
  std::vector<bool> touched_faces;  // size n
  bool compact_in_chamber = true;
};

// Reflecting a connected set across one mirror: one component if it meets the
// mirror, two otherwise.
int glue_across_mirror(const ChamberComponent& c, bool touches_mirror);

/**
 * Number of global components generated by one chamber piece: places a copy
 * in each of the 2^n n! chambers and unions copies across every shared wall
 * the piece touches. Exact for a strict fundamental domain.
 *
 * Throws when n exceeds the enumeration limit.
 */
std::uint64_t orbit_component_count(const ChamberComponent& cc, int n,
                                    int enumeration_limit = 6);

enum class VarietyKind {
  max_components,
  all_compact,
  nested_pair,
  single_sphere,
  empty,
  undecided,
};

const char* to_string(VarietyKind k);

struct GeometricCharacteristic {
  VarietyKind kind = VarietyKind::undecided;
  std::uint64_t total_components = 0;
  std::uint64_t compact_components = 0;
  std::uint64_t unbounded_components = 0;
  bool nested = false;
  std::optional<std::vector<std::uint64_t>> betti;  // (b_0, ..., b_{n-1})
};

// Betti vector attached to a decided kind; absent for empty/undecided.
std::optional<std::vector<std::uint64_t>> betti_report(VarietyKind kind, int n);

/**
 * Decision procedure for the global component structure. Reduces the variety
 * to its profile in (s, q) = (sum X, sum X^2): chamber pieces are the
 * connected components of {s >= 0 : h_n(s), h_1(s) bracket zero} and wall
 * contact is the same bracket test against each wall's attainable q-range.
 * Counts follow by reflection gluing. Every verdict must survive a +-eps
 * shift of D; configurations that do not (tangencies, thresholds) return
 * undecided rather than guess.
 */
GeometricCharacteristic predict(const QuarticCoefficients& qc, double tol = kDefaultTol);

}  // namespace coxvar
