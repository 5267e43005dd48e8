#pragma once

#include <json.hpp>

#include "f4/albert.hpp"
#include "f4/dersolve.hpp"
#include "f4/lie.hpp"

// Machine-readable encodings.  Scalars are strings ("-3/4", "5", or the
// decimal residue); integers in Q are written without a denominator.
namespace f4 {

nlohmann::json to_json(const FieldSpec& f);
FieldSpec field_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const nlohmann::json& j);

nlohmann::json to_json(const Octonion& o);
Octonion octonion_from_json(const FieldSpec& f, const nlohmann::json& j);

nlohmann::json to_json(const Coord27& c);
Coord27 coord27_from_json(const FieldSpec& f, const nlohmann::json& j);

/// {"field":…, "dim":n, "basis":[27x27 row-major arrays]}.
nlohmann::json to_json(const DerivationBasis& b);
DerivationBasis basis_from_json(const nlohmann::json& j);

/// {"basis":name, "field":…, "entries":[[i,j,k,"value"],…]}, 1-based.
nlohmann::json to_json(const StructureConstants& sc);

/// Dense array of arrays of scalar strings.
nlohmann::json to_json(const KillingGram& g);

}  // namespace f4
