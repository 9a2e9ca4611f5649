#include "coxvar/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coxvar {

void GridSpec::validate(std::uint64_t memory_budget) const {
  if (n < 2 || n > 4) throw std::invalid_argument("GridSpec: n must be 2..4");
  if (resolution < 16) throw std::invalid_argument("GridSpec: resolution must be >= 16");
  if (!(half_width > 0) || !std::isfinite(half_width))
    throw std::invalid_argument("GridSpec: half_width must be positive and finite");
  const double vertices = std::pow(static_cast<double>(resolution) + 1, n);
  if (vertices > 1e18) throw ResourceError("GridSpec: grid too large");
  const double bytes = vertices + std::pow(static_cast<double>(resolution), n) * 4.0;
  if (bytes > static_cast<double>(memory_budget))
    throw ResourceError("GridSpec: grid exceeds the memory budget");
}

std::uint64_t GridSpec::vertex_count() const {
  std::uint64_t v = 1;
  for (int a = 0; a < n; ++a) v *= static_cast<std::uint64_t>(resolution) + 1;
  return v;
}

std::uint64_t GridSpec::cell_count() const {
  std::uint64_t v = 1;
  for (int a = 0; a < n; ++a) v *= static_cast<std::uint64_t>(resolution);
  return v;
}

namespace {

// vertex coordinate with exact negation symmetry: x(r - i) == -x(i)
inline double vertex_coord(int i, int r, double L) {
  return (static_cast<double>(2 * i - r) / r) * L;
}

}  // namespace

GridScan::GridScan(const ScalarField& f, const GridSpec& g, std::uint64_t memory_budget)
    : g_(g) {
  g_.validate(memory_budget);
  report_.grid = g_;
  const int n = g_.n, r = g_.resolution;
  const double L = g_.half_width;

  signs_.assign(g_.vertex_count(), 0);
  bool has_pos = false, has_neg = false;
  {
    std::vector<int> idx(n, 0);
    std::vector<double> x(n, vertex_coord(0, r, L));
    for (std::uint64_t v = 0;; ++v) {
      const double val = f(x);
      signs_[v] = val > 0 ? 1 : (val < 0 ? -1 : 0);
      has_pos = has_pos || val > 0;
      has_neg = has_neg || val < 0;
      int a = 0;
      while (a < n) {
        if (++idx[a] <= r) {
          x[a] = vertex_coord(idx[a], r, L);
          break;
        }
        idx[a] = 0;
        x[a] = vertex_coord(0, r, L);
        ++a;
      }
      if (a == n) break;
    }
  }

  const std::uint64_t cells = g_.cell_count();
  labels_.assign(cells, -1);

  std::uint64_t cell_stride[4] = {1, 0, 0, 0};
  for (int a = 1; a < n; ++a)
    cell_stride[a] = cell_stride[a - 1] * static_cast<std::uint64_t>(r);

  std::vector<std::uint64_t> stack;
  for (std::uint64_t c = 0; c < cells; ++c) {
    if (labels_[c] >= 0 || !surface_cell(c)) continue;
    const int id = static_cast<int>(report_.components.size());
    OracleComponent comp;
    comp.id = id;
    std::vector<int> lo(n, r), hi(n, -1);
    bool boundary = false;

    labels_[c] = id;
    seeds_.push_back(c);
    stack.assign(1, c);
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      ++comp.cell_count;
      std::uint64_t rest = cur;
      for (int a = 0; a < n; ++a) {
        const int ia = static_cast<int>(rest % r);
        rest /= r;
        lo[a] = std::min(lo[a], ia);
        hi[a] = std::max(hi[a], ia);
        if (ia == 0 || ia == r - 1) boundary = true;
        if (ia > 0) {
          const std::uint64_t nb = cur - cell_stride[a];
          if (labels_[nb] < 0 && surface_cell(nb)) {
            labels_[nb] = id;
            stack.push_back(nb);
          }
        }
        if (ia < r - 1) {
          const std::uint64_t nb = cur + cell_stride[a];
          if (labels_[nb] < 0 && surface_cell(nb)) {
            labels_[nb] = id;
            stack.push_back(nb);
          }
        }
      }
    }

    comp.touches_boundary = boundary;
    for (int a = 0; a < n; ++a) {
      comp.bbox_min.push_back(vertex_coord(lo[a], r, L));
      comp.bbox_max.push_back(vertex_coord(hi[a] + 1, r, L));
    }
    report_.components.push_back(std::move(comp));
  }

  report_.total = report_.components.size();
  report_.compact_total = 0;
  for (const auto& comp : report_.components)
    if (!comp.touches_boundary) ++report_.compact_total;
  report_.one_sided = report_.total > 0 && (!has_pos || !has_neg);
}

bool GridScan::surface_cell(std::uint64_t cell) const {
  const int n = g_.n, r = g_.resolution;
  std::uint64_t base = 0, stride = 1, rest = cell;
  std::uint64_t vstride[4];
  for (int a = 0; a < n; ++a) {
    vstride[a] = stride;
    base += (rest % r) * stride;
    rest /= r;
    stride *= static_cast<std::uint64_t>(r) + 1;
  }
  bool any_nonpos = false, any_nonneg = false;
  for (int corner = 0; corner < (1 << n); ++corner) {
    std::uint64_t v = base;
    for (int a = 0; a < n; ++a)
      if (corner & (1 << a)) v += vstride[a];
    const int s = signs_[v];
    any_nonpos |= (s <= 0);
    any_nonneg |= (s >= 0);
    if (any_nonpos && any_nonneg) return true;
  }
  return false;
}

int GridScan::cell_sign(std::uint64_t cell) const {
  const int n = g_.n, r = g_.resolution;
  std::uint64_t base = 0, stride = 1, rest = cell;
  for (int a = 0; a < n; ++a) {
    base += (rest % r) * stride;
    rest /= r;
    stride *= static_cast<std::uint64_t>(r) + 1;
  }
  return signs_[base];
}

void GridScan::compute_nesting() {
  report_.nesting_pairs.clear();
  report_.nesting_ambiguous = false;
  const int n = g_.n, r = g_.resolution;

  std::uint64_t cell_stride[4] = {1, 0, 0, 0};
  for (int a = 1; a < n; ++a)
    cell_stride[a] = cell_stride[a - 1] * static_cast<std::uint64_t>(r);

  std::vector<int> compact_ids;
  for (const auto& comp : report_.components)
    if (!comp.touches_boundary) compact_ids.push_back(comp.id);

  auto decode = [&](std::uint64_t cell, int axis) {
    return static_cast<int>((cell / cell_stride[axis]) % r);
  };

  // -1 ambiguous, 0 even (outside), 1 odd (inside)
  auto ray_parity = [&](std::uint64_t start, int outer, int axis, int dir) -> int {
    int pos = decode(start, axis);
    std::uint64_t cur = start;
    int crossings = 0;
    int last_solid = 2;  // 2 = unknown
    bool in_run = false;
    int run_before = 2;
    while (true) {
      pos += dir;
      if (pos < 0 || pos >= r) break;
      cur = dir > 0 ? cur + cell_stride[axis] : cur - cell_stride[axis];
      const std::int32_t lab = labels_[cur];
      if (lab == outer) {
        if (!in_run) {
          if (last_solid == 2) return -1;
          run_before = last_solid;
          in_run = true;
        }
      } else if (lab < 0) {
        const int s = cell_sign(cur);
        if (in_run) {
          if (s != run_before) ++crossings;
          in_run = false;
        }
        last_solid = s;
      } else {
        if (in_run) return -1;
        last_solid = 2;
      }
    }
    if (in_run) return -1;
    return crossings % 2;
  };

  for (int inner : compact_ids) {
    for (int outer : compact_ids) {
      if (inner == outer) continue;
      const auto& ci = report_.components[inner];
      const auto& co = report_.components[outer];
      bool box_inside = true;
      for (int a = 0; a < n; ++a)
        box_inside &= (co.bbox_min[a] <= ci.bbox_min[a] && ci.bbox_max[a] <= co.bbox_max[a]);
      if (!box_inside) continue;

      int verdict = -1;
      for (int axis = 0; axis < n && verdict < 0; ++axis)
        for (int dir : {+1, -1}) {
          verdict = ray_parity(seeds_[inner], outer, axis, dir);
          if (verdict >= 0) break;
        }
      if (verdict < 0)
        report_.nesting_ambiguous = true;
      else if (verdict == 1)
        report_.nesting_pairs.emplace_back(outer, inner);
    }
  }

  // a pair in both orientations means the parities contradict each other
  auto& pairs = report_.nesting_pairs;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (pairs[i].first == pairs[j].second && pairs[i].second == pairs[j].first) {
        report_.nesting_ambiguous = true;
        pairs.erase(pairs.begin() + j);
        pairs.erase(pairs.begin() + i);
        --i;
        break;
      }
}

ComponentReport count_components(const ScalarField& f, const GridSpec& g,
                                 std::uint64_t memory_budget) {
  GridScan scan(f, g, memory_budget);
  return scan.report();
}

std::vector<std::pair<int, int>> nesting(const ComponentReport& report,
                                         const ScalarField& f) {
  GridScan scan(f, report.grid);
  scan.compute_nesting();
  return scan.report().nesting_pairs;
}

GridSpec auto_box(const QuarticCoefficients& qc, const SpectralData& sd) {
  GridSpec g;
  g.n = qc.n;
  g.resolution = qc.n == 2 ? 512 : (qc.n == 3 ? 128 : 48);
  g.half_width = 8.0;

  const double norm0 = std::abs(sd.lambda_rep) * (qc.n - 1) + std::abs(sd.lambda_axis);
  const double z = kDefaultTol * (1.0 + norm0);
  double lam_min = std::numeric_limits<double>::infinity();
  for (double lam : {sd.lambda_rep, sd.lambda_axis})
    if (std::abs(lam) > z) lam_min = std::min(lam_min, std::abs(lam));

  if (sd.center && sd.f_center && std::isfinite(lam_min)) {
    const double u_max = std::max(std::abs(*sd.center), std::abs(*sd.f_center) / lam_min);
    const double x_max = std::pow(u_max, 1.0 / static_cast<double>(1 << qc.m));
    g.half_width = 4.0 * std::max(1.0, x_max);
  }
  return g;
}

ScalarField make_field(const QuarticCoefficients& qc) {
  qc.validate();
  return [qc](std::span<const double> x) { return qc.eval(x); };
}

}  // namespace coxvar
