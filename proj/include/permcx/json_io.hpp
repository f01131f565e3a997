#pragma once

#include "permcx/cohomology.hpp"
#include "permcx/counterexample.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace permcx {

/// Insertion order is preserved, so every emitter below is byte-deterministic.
using json = nlohmann::ordered_json;

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const FieldPtr& field);

json scalar_to_json(const Scalar& s);

json subgroup_to_json(const Subgroup& s);
Subgroup subgroup_from_json(const json& j);

json collection_to_json(const SubgroupCollection& h);
SubgroupCollection collection_from_json(const json& j);

json module_to_json(const GModule& m);
GModule module_from_json(const json& j);

json map_to_json(const EquivariantMap& f);
EquivariantMap map_from_json(const json& j);

json complex_to_json(const BoundedComplex& c);
BoundedComplex complex_from_json(const json& j);

json homotopy_to_json(const Homotopy& h);

json chain_report_to_json(const ChainConditionReport& r);
json criterion_report_to_json(const CollectionCriterionReport& r);
json counterexample_to_json(const CounterexampleReport& r);
json exactness_to_json(const ExactnessReport& r);

json polyclass_to_json(const PolyClass& c);
PolyClass polyclass_from_json(const json& j);

json linear_form_product_to_json(const LinearFormProduct& p);
LinearFormProduct linear_form_product_from_json(const json& j);

json avoidance_to_json(const AvoidancePair& p);

/// Canonical dump: two-space indentation plus a trailing newline.
std::string dump_json(const json& j);

json parse_json_text(const std::string& text, const std::string& origin);
json parse_json_file(const std::string& path);

} // namespace permcx
