#pragma once

#include <json.hpp>

#include "meroc/cech.hpp"
#include "meroc/elliptic.hpp"
#include "meroc/lie.hpp"
#include "meroc/model.hpp"
#include "meroc/weight_value.hpp"

namespace meroc {

using Json = nlohmann::json;

Json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

Json pk_to_json(const PkExpansion& p);

Json weight_value_to_json(const WeightValue& v);
std::string weight_value_to_string(const WeightValue& v);

Json matq_to_json(const MatQ& m);
MatQ matq_from_json(const Json& j, long rows, long cols);

// {"dim": n, "brackets": [{"i":.., "j":.., "coeffs": ["...", ...]}, ...],
//  "module": {"dim": m, "action": [matrix, ...]}}  (module optional)
LieAlgebra lie_from_json(const Json& j);
Json lie_to_json(const LieAlgebra& g);

// {"facets": [[1,2],[2,3],...]}
Nerve nerve_from_json(const Json& j);

// {"l":.., "k":.., "degree_bound":.., "beta": [{"degrees":[a,b],"bound":..}],
//  "values": [{"tuple":[...], "numerator":[{"coeff":"..","exps":[..]}],
//              "pole_orders":[{"pair":[i,j],"order":..}]}]}
Cochain cochain_from_json(const Json& j);
Json cochain_to_json(const Cochain& f);

// {"direction": 1, "spaces": {"0": 2, ...},
//  "differentials": {"0": [["1","0"],...], ...}}
ChainComplex chain_complex_from_json(const Json& j);

// FNV-1a 64-bit digest of a byte string, hex-encoded.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace meroc
