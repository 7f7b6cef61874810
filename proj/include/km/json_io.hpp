#pragma once

#include "json.hpp"

#include "km/gwa_classify.hpp"

namespace km {

using json = nlohmann::json;

json to_json(const Weight& w);
json to_json(const DimVector& v);
json to_json(const RootMultiset& r);
json to_json(const Letter& l);
json to_json(const GroupWord& w);
json to_json(const AffineDiagram& d);

Weight weight_from_json(const json& j);
DimVector dimvector_from_json(const json& j);
RootMultiset roots_from_json(const json& j);
Letter letter_from_json(const json& j);
GroupWord word_from_json(const json& j);

/// Self-contained witnesses carrying a "kind" field.
json iso_witness_json(const RootMultiset& r, const RootMultiset& r2, const IsoWitness& w);
json morita_witness_json(const RootMultiset& r, const RootMultiset& r2, const MoritaWitness& w);
json certificate_json(const AffineDiagram& d, const OrbitCertificate& c);

/// Replays a witness produced by one of the functions above.
bool verify_witness(const json& j);

}  // namespace km
