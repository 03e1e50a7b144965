#pragma once

#include <json.hpp>

#include "ckgz/verify.hpp"

namespace ckgz {

using Json = nlohmann::json;

Json to_json(const PimenovScalar& v);
PimenovScalar pimenov_from_json(const Json& j);

Json to_json(const CkLabelSet& labels);
CkLabelSet labels_from_json(const Json& j);

Json to_json(const BasisWindow& w);
BasisWindow window_from_json(const Json& j);

/// Full export: header (labels, window, route) plus per-generator sparse
/// triplets (row, col, scalar). Floats round-trip bit-identically through
/// the decimal encoding.
Json to_json(const GeneratorSet& g);
GeneratorSet generator_set_from_json(const Json& j);

Json to_json(const CheckReport& r);
Json to_json(const CasimirSpectrum& s);

}  // namespace ckgz
