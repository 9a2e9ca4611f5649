#include "coxvar/json_io.hpp"

namespace coxvar {

using nlohmann::ordered_json;

ordered_json to_json(const GridSpec& g) {
  return ordered_json{{"n", g.n}, {"L", g.half_width}, {"r", g.resolution}};
}

ordered_json to_json(const GeometricCharacteristic& gc) {
  ordered_json j{{"kind", to_string(gc.kind)},
                 {"total", gc.total_components},
                 {"compact", gc.compact_components},
                 {"unbounded", gc.unbounded_components},
                 {"nested", gc.nested}};
  if (gc.betti) j["betti"] = *gc.betti;
  return j;
}

ordered_json to_json(const ComponentReport& report) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : report.components)
    comps.push_back(ordered_json{{"id", c.id},
                                 {"cell_count", c.cell_count},
                                 {"bbox_min", c.bbox_min},
                                 {"bbox_max", c.bbox_max},
                                 {"touches_boundary", c.touches_boundary}});
  ordered_json pairs = ordered_json::array();
  for (const auto& [outer, inner] : report.nesting_pairs)
    pairs.push_back(ordered_json::array({outer, inner}));
  return ordered_json{{"total", report.total},
                      {"compact", report.compact_total},
                      {"nesting_pairs", pairs},
                      {"nesting_ambiguous", report.nesting_ambiguous},
                      {"one_sided", report.one_sided},
                      {"grid", to_json(report.grid)},
                      {"components", comps}};
}

ordered_json to_json(const SpectralData& sd, const QuadricClass& qc) {
  ordered_json j{{"kind", to_string(qc.kind)},
                 {"inertia", ordered_json::array({qc.n_plus, qc.n_minus, qc.n_zero})},
                 {"nondegenerate", qc.nondegenerate},
                 {"lambda_rep", sd.lambda_rep},
                 {"lambda_axis", sd.lambda_axis},
                 {"det_lambda0", sd.det_lambda0},
                 {"det_lambda", sd.det_lambda}};
  j["center"] = sd.center ? ordered_json(*sd.center) : ordered_json(nullptr);
  j["f_center"] = sd.f_center ? ordered_json(*sd.f_center) : ordered_json(nullptr);
  return j;
}

}  // namespace coxvar
