#include "coxvar/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "coxvar/signed_permutation.hpp"

namespace coxvar {

double Mirror::side(std::span<const double> x) const {
  switch (kind) {
    case Kind::coordinate: return x[i - 1];
    case Kind::diagonal_diff: return x[i - 1] - x[j - 1];
    case Kind::diagonal_sum: return x[i - 1] + x[j - 1];
  }
  return 0.0;
}

std::string Mirror::to_string() const {
  switch (kind) {
    case Kind::coordinate: return "x" + std::to_string(i);
    case Kind::diagonal_diff: return "x" + std::to_string(i) + "-x" + std::to_string(j);
    case Kind::diagonal_sum: return "x" + std::to_string(i) + "+x" + std::to_string(j);
  }
  return "?";
}

MirrorArrangement MirrorArrangement::standard(int n) {
  if (n < 1) throw std::invalid_argument("MirrorArrangement: n must be positive");
  MirrorArrangement ar;
  ar.n = n;
  for (int i = 1; i <= n; ++i) ar.mirrors.push_back({Mirror::Kind::coordinate, i, 0});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      ar.mirrors.push_back({Mirror::Kind::diagonal_diff, i, j});
      ar.mirrors.push_back({Mirror::Kind::diagonal_sum, i, j});
    }
  return ar;
}

std::vector<int> MirrorArrangement::sign_pattern(std::span<const double> x,
                                                 double tol) const {
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("sign_pattern: dimension mismatch");
  std::vector<int> out;
  out.reserve(mirrors.size());
  for (const auto& m : mirrors) {
    const double v = m.side(x);
    out.push_back(std::abs(v) <= tol ? 0 : (v > 0 ? 1 : -1));
  }
  return out;
}

int glue_across_mirror(const ChamberComponent&, bool touches_mirror) {
  return touches_mirror ? 1 : 2;
}

namespace {

struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

}  // namespace

std::uint64_t orbit_component_count(const ChamberComponent& cc, int n,
                                    int enumeration_limit) {
  if (n < 1) throw std::invalid_argument("orbit_component_count: n must be positive");
  if (static_cast<int>(cc.touched_faces.size()) != n)
    throw std::invalid_argument("orbit_component_count: touched_faces must have size n");
  if (n > enumeration_limit)
    throw std::invalid_argument("orbit_component_count: n exceeds the enumeration limit");

  const std::uint64_t order = group_order(n);
  if (order > (std::uint64_t{1} << 27))
    throw std::invalid_argument("orbit_component_count: group too large to enumerate");
  std::vector<SignedPermutation> gens;
  std::vector<int> walls;
  for (int w = 0; w < n; ++w) {
    if (!cc.touched_faces[w]) continue;
    walls.push_back(w);
    gens.push_back(w == 0 ? SignedPermutation::coordinate_flip(n, 0)
                          : SignedPermutation::adjacent_swap(n, w - 1));
  }

  Dsu dsu(static_cast<std::size_t>(order));
  for (std::uint64_t g = 0; g < order; ++g) {
    const SignedPermutation e = SignedPermutation::from_index(g, n);
    for (const auto& s : gens)
      dsu.unite(static_cast<std::uint32_t>(g),
                static_cast<std::uint32_t>(e.compose(s).index()));
  }

  std::uint64_t roots = 0;
  for (std::uint32_t g = 0; g < order; ++g)
    if (dsu.find(g) == g) ++roots;
  return roots;
}

const char* to_string(VarietyKind k) {
  switch (k) {
    case VarietyKind::max_components: return "max_components";
    case VarietyKind::all_compact: return "all_compact";
    case VarietyKind::nested_pair: return "nested_pair";
    case VarietyKind::single_sphere: return "single_sphere";
    case VarietyKind::empty: return "empty";
    case VarietyKind::undecided: return "undecided";
  }
  return "unknown";
}

std::optional<std::vector<std::uint64_t>> betti_report(VarietyKind kind, int n) {
  if (n < 2) throw std::invalid_argument("betti_report: n must be >= 2");
  std::vector<std::uint64_t> b(static_cast<std::size_t>(n), 0);
  const std::uint64_t pow2 = std::uint64_t{1} << n;
  switch (kind) {
    case VarietyKind::max_components:
      b[0] = pow2 + 1;
      b[n - 1] = 1;
      return b;
    case VarietyKind::all_compact:
      b[0] = pow2;
      b[n - 1] = pow2;
      return b;
    case VarietyKind::nested_pair:
      b[0] = 2;
      b[n - 1] = 2;
      return b;
    case VarietyKind::single_sphere:
      b[0] = 1;
      b[n - 1] = 1;
      return b;
    case VarietyKind::empty:
    case VarietyKind::undecided:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct PatchSignature {
  bool bounded = false;
  std::uint32_t walls = 0;  // bit w set iff the piece meets wall w
  bool operator==(const PatchSignature&) const = default;
};

struct ChamberStructure {
  bool valid = false;
  std::vector<PatchSignature> patches;
  std::vector<SInterval> intervals;  // base shift only, for diagnostics
};

double root_reach(const AxisQuadratic& p) {
  if (p.a == 0.0) return (p.b == 0.0) ? 0.0 : std::abs(p.c / p.b);
  const double disc = p.b * p.b - 4.0 * p.a * p.c;
  if (disc < 0.0) return 0.0;
  return (std::abs(p.b) + std::sqrt(disc)) / (2.0 * std::abs(p.a));
}

// Chamber pieces and their wall contacts for F + dshift, entirely in the
// reduced (s, q) profile. Walls carry these attainable q-ranges at sum s:
// orthant [s^2/n, s^2]; coordinate face [s^2/(n-1), s^2]; diagonal walls
// [s^2/n, s^2] except the top tie {X_{n-1} = X_n} capped at s^2/2.
ChamberStructure analyze_chamber(const QuadricForm& qf, double dshift, double slack) {
  const int n = qf.n;
  auto h = [&](int m) {
    AxisQuadratic a = axis_profile(qf, m);
    a.c += dshift;
    return a;
  };
  const AxisQuadratic hn = h(n), h1 = h(1), h2 = h(2), hn1 = h(n - 1);

  ChamberStructure st;
  st.intervals = bracket_set(hn, h1, 0.0, kInf, slack);
  st.patches.assign(st.intervals.size(), {});
  for (std::size_t k = 0; k < st.intervals.size(); ++k)
    st.patches[k].bounded = std::isfinite(st.intervals[k].hi);

  auto assign = [&](const std::vector<SInterval>& pieces, int wall) -> bool {
    for (const auto& iv : pieces) {
      const double rep = std::isfinite(iv.hi) ? 0.5 * (iv.lo + iv.hi) : iv.lo;
      bool placed = false;
      for (std::size_t k = 0; k < st.intervals.size(); ++k) {
        if (rep >= st.intervals[k].lo - slack && rep <= st.intervals[k].hi + slack) {
          if (!std::isfinite(iv.hi) && st.patches[k].bounded) return false;
          st.patches[k].walls |= (1u << wall);
          placed = true;
          break;
        }
      }
      if (!placed) return false;
    }
    return true;
  };

  if (!assign(bracket_set(hn1, h1, 0.0, kInf, slack), 0)) return st;
  for (int w = 1; w + 1 < n; ++w)
    if (!assign(st.intervals, w)) return st;
  if (!assign(bracket_set(hn, h2, 0.0, kInf, slack), n - 1)) return st;

  st.valid = true;
  return st;
}

bool same_signature(const ChamberStructure& a, const ChamberStructure& b) {
  return a.valid && b.valid && a.patches == b.patches;
}

GeometricCharacteristic undecided_result() {
  GeometricCharacteristic gc;
  gc.kind = VarietyKind::undecided;
  return gc;
}

}  // namespace

GeometricCharacteristic predict(const QuarticCoefficients& qc, double tol) {
  qc.validate();
  if (qc.n > 62) return undecided_result();
  const QuadricForm qf = substitute(qc);
  const int n = qf.n;

  double reach = 1.0;
  for (int m : {1, 2, n - 1, n}) reach = std::max(reach, root_reach(axis_profile(qf, m)));
  const double scale =
      (std::abs(qf.W) + 0.5 * std::abs(qf.A)) * reach * reach + std::abs(qf.C) * reach +
      std::abs(qf.D) + 1.0;
  const double eps = 100.0 * tol * scale;
  const double slack = 1e-12 * reach;

  const ChamberStructure base = analyze_chamber(qf, 0.0, slack);
  const ChamberStructure up = analyze_chamber(qf, eps, slack);
  const ChamberStructure down = analyze_chamber(qf, -eps, slack);
  if (!same_signature(base, up) || !same_signature(base, down)) return undecided_result();

  GeometricCharacteristic gc;
  const std::uint64_t pow2 = std::uint64_t{1} << n;
  const std::uint32_t all_walls = (n >= 32) ? ~0u : ((1u << n) - 1);
  const std::uint32_t diagonals_only = all_walls & ~1u;

  if (base.patches.empty()) {
    gc.kind = VarietyKind::empty;
    return gc;
  }

  if (base.patches.size() == 1) {
    const auto& p = base.patches[0];
    if (p.bounded && p.walls == all_walls) {
      gc.kind = VarietyKind::single_sphere;
      gc.total_components = gc.compact_components = 1;
    } else if (p.bounded && p.walls == diagonals_only) {
      gc.kind = VarietyKind::all_compact;
      gc.total_components = gc.compact_components = pow2;
    } else {
      return undecided_result();
    }
  } else if (base.patches.size() == 2) {
    const auto& inner = base.patches[0];
    const auto& outer = base.patches[1];
    if (inner.bounded && outer.bounded && inner.walls == all_walls &&
        outer.walls == all_walls) {
      gc.kind = VarietyKind::nested_pair;
      gc.total_components = gc.compact_components = 2;
      gc.nested = true;
    } else if (inner.bounded && inner.walls == all_walls && !outer.bounded &&
               outer.walls == diagonals_only) {
      gc.kind = VarietyKind::max_components;
      gc.total_components = pow2 + 1;
      gc.compact_components = 1;
      gc.unbounded_components = pow2;
    } else {
      return undecided_result();
    }
  } else {
    return undecided_result();
  }

  gc.betti = betti_report(gc.kind, n);
  return gc;
}

}  // namespace coxvar
