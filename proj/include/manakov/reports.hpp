#pragma once

// JSON documents for the CLI. Every document carries "schema": 1.

#include <json.hpp>

#include "manakov/classical_em.hpp"
#include "manakov/fiber_oracle.hpp"
#include "manakov/joint_spectrum.hpp"
#include "manakov/monodromy.hpp"

namespace manakov {

using json = nlohmann::ordered_json;

json to_json(const Point2& p);
json diagram_json(const EMDiagram& diagram);
json classification_json(const ParameterClassification& c);
json cluster_report_json(const JointSpectrum& spectrum, const std::vector<Cluster>& clusters,
                         const RegionMultiplicityReport& report);
json monodromy_json(const MonodromyResult& result, const JointLattice& lattice,
                    const std::string& preset);
json oracle_json(const FiberOracleResult& result, const RegionLabel& label,
                 const FiberOracleOptions& options);

}  // namespace manakov
