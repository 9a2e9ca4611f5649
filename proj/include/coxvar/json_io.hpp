#pragma once

#include <json.hpp>

#include "coxvar/oracle.hpp"
#include "coxvar/topology.hpp"

namespace coxvar {

nlohmann::ordered_json to_json(const GridSpec& g);
nlohmann::ordered_json to_json(const GeometricCharacteristic& gc);
nlohmann::ordered_json to_json(const ComponentReport& report);
nlohmann::ordered_json to_json(const SpectralData& sd, const QuadricClass& qc);

}  // namespace coxvar
