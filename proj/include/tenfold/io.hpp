#pragma once

#include "tenfold/fermionic_group.hpp"
#include "tenfold/karoubi.hpp"
#include "tenfold/ktheory.hpp"

#include <json.hpp>

#include <string>

namespace tenfold {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class InputKind { algebra, group, ct };

// Reads and parses a JSON file; throws invalid_input.
Json load_json(const std::string& path);

// Decides the kind from the keys present; a "kind" field wins if given.
InputKind detect_kind(const Json& j);

// {"schema_version":1,"kind":"algebra","label":..,"parity":[..],
//  "unit":["1","0",..],"products":[[i,j,k,"c"],..]}
Json algebra_to_json(const GradedAlgebra& a);
GradedAlgebra algebra_from_json(const Json& j);

// {"order":n,"table":[[..]],"identity":0,"fermion_parity":k,"theta":[..]}
Json group_to_json(const FermionicGroup& g);
FermionicGroup group_from_json(const Json& j);

// {"T":"+1|-1|absent","C":"+1|-1|absent","CT_only":bool}
Json ct_to_json(const CTGroupSpec& s);
CTGroupSpec ct_from_json(const Json& j);

// Rationals as strings ("-3/4") or integers.
Rational rational_from_json(const Json& j);
RatMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const RatMatrix& m);
// Decimal numbers or rational strings.
RealMatrix real_matrix_from_json(const Json& j);

Json to_json(const BlockClassification& b);
Json to_json(const SPTReport& r);
// {"rows":[{"class":"D","algebra":"R","groups":{"0":"Z2",..}}]}
Json to_json(const PeriodicTable& t);

} // namespace tenfold
