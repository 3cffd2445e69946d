#pragma once

#include <json.hpp>

#include "axioclust/axioms.hpp"
#include "axioclust/criteria.hpp"
#include "axioclust/theorems.hpp"
#include "axioclust/validity.hpp"

namespace axioclust {

using json = nlohmann::json;

inline constexpr const char* kSchemaName = "axioclust/1";

json to_json(const Matrix& m);
json to_json(const ValidationReport& r);
json to_json(const PartitionClass& c);
json to_json(const HardAssignment& a);

// The axiom-check report: sample/category separation, equivalency, result
// class, coincidence flags, and the boundary set.
json to_json(const ResultClassReport& r);

json to_json(const TheoremReport& r);
json to_json(const IndexValue& v);
json to_json(const AuditReport& r);
json to_json(const Decomposition& d);
json model_to_json(const CategoryModel& model);

// Result payload: model, partition, trace and run metadata.
json result_to_json(const ClusteringResult& result);

// Counterexample-search hits serialized for fixture persistence.
json instance_to_json(const GeneratedInstance& inst);

// +/-inf and NaN have no JSON representation; index values use "inf"/"-inf"
// strings and undefined values use null.
json finite_or_tag(double v);

}  // namespace axioclust
