#pragma once

#include <json.hpp>

#include "oscover/certificates.hpp"
#include "oscover/enumerate.hpp"
#include "oscover/verify.hpp"

namespace oscover {

using Json = nlohmann::ordered_json;

// PicClass wire schema: {"c": int, "fibers": [int x4], "s": [int x4],
// "r": [int x4]}. Torsion and fiber degree are always derived, never
// stored.
Json to_json(const PicClass& cls);
PicClass picclass_from_json(const Json& j);

Json to_json(const TypeVector& t);
TypeVector typevector_from_json(const Json& j);

Json to_json(const CoverSpec& spec);
Json to_json(const CoverReport& report, const CoverSpec& spec);

Json to_json(const MembershipReport& report);
Json to_json(const FamilySpec& fam);

Json to_json(const IrreducibilityReport& report);
Json to_json(const WeierstrassReport& report);

Json to_json(const std::vector<AdmissibleType>& types);
Json to_json(const std::vector<FamilyRow>& rows);

Json to_json(const OracleReport& report);
Json to_json(const VerifyReport& report);

}  // namespace oscover
