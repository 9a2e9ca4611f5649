#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxvar/quadric.hpp"

namespace coxvar {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{1} << 30;

/** Grid or sweep size exceeding the configured budget/cap. */
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Sample box [-L, L]^n with r cells (r+1 vertices) per axis. */
struct GridSpec {
  int n = 2;
  double half_width = 4.0;
  int resolution = 128;

  // r >= 16, 2 <= n <= 4, and the vertex/label arrays must fit the budget.
  void validate(std::uint64_t memory_budget = kDefaultMemoryBudget) const;
  std::uint64_t vertex_count() const;
  std::uint64_t cell_count() const;
  double cell_size() const { return 2.0 * half_width / resolution; }
};

using ScalarField = std::function<double(std::span<const double>)>;

struct OracleComponent {
  int id = 0;
  std::uint64_t cell_count = 0;
  std::vector<double> bbox_min, bbox_max;
  bool touches_boundary = false;
};

struct ComponentReport {
  std::vector<OracleComponent> components;
  std::uint64_t total = 0;
  std::uint64_t compact_total = 0;
  std::vector<std::pair<int, int>> nesting_pairs;  // (outer_id, inner_id)
  bool nesting_ambiguous = false;
  // The field never strictly changes sign on the grid, yet zeros were hit:
  // the listed components are tangential contacts a sign grid cannot
  // certify (or tell apart from lattice coincidences). Treat counts as
  // unverified when set.
  bool one_sided = false;
  GridSpec grid;
};

/**
 * Sign-grid component scan. A cell is a surface cell iff its 2^n corner
 * values are not all strictly positive and not all strictly negative (exact
 * zeros count as surface contact); components are maximal face-connected
 * sets of surface cells, labeled in scan order.
 */
class GridScan {
 public:
  GridScan(const ScalarField& f, const GridSpec& g,
           std::uint64_t memory_budget = kDefaultMemoryBudget);

  const ComponentReport& report() const { return report_; }

  // Ray-parity nesting among compact components; fills report().nesting_pairs.
  void compute_nesting();

 private:
  GridSpec g_;
  std::vector<std::int8_t> signs_;    // (r+1)^n vertex signs
  std::vector<std::int32_t> labels_;  // r^n cell labels, -1 = not surface
  std::vector<std::uint64_t> seeds_;  // first cell of each component
  ComponentReport report_;

  bool surface_cell(std::uint64_t cell) const;
  int cell_sign(std::uint64_t cell) const;  // sign of a non-surface cell
};

ComponentReport count_components(const ScalarField& f, const GridSpec& g,
                                 std::uint64_t memory_budget = kDefaultMemoryBudget);

std::vector<std::pair<int, int>> nesting(const ComponentReport& report,
                                         const ScalarField& f);

// Box big enough for the compact features implied by the spectral data;
// degenerate data falls back to L = 8. Resolution defaults: 512 / 128 / 48
// for n = 2 / 3 / 4.
GridSpec auto_box(const QuarticCoefficients& qc, const SpectralData& sd);

// n = 3: OBJ triangle mesh (surface nets); n = 2: contour segments as CSV
// with header x1,y1,x2,y2. Deterministic output for fixed inputs.
void export_mesh(const ScalarField& f, const GridSpec& g, const std::string& path);

ScalarField make_field(const QuarticCoefficients& qc);

}  // namespace coxvar
