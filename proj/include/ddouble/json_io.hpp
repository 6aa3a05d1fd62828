#pragma once

#include <string>

#include "json.hpp"

#include "ddouble/rings.hpp"

namespace ddouble {

// ordered_json keeps insertion order, so identical inputs serialize to
// byte-identical text
using Json = nlohmann::ordered_json;

Json cyc_to_json(const CycNum& z);
CycNum cyc_from_json(const Json& j);

Json smatrix_to_json(const SMatrix& s, const std::vector<std::string>& labels);
SMatrix smatrix_from_json(const Json& j);

Json fusion_to_json(const FusionRing& r, int max_multiplicity);
FusionRing ring_from_json(const Json& j);

Json chartable_to_json(const CharTable& t);

// canonical 64-bit FNV-1a hash of the multiplication table, hex string
std::string table_hash(const Group& g);

}  // namespace ddouble
