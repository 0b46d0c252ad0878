#pragma once

// Structured (JSON) form of the engine's results. Field names follow the C++
// structs; monomials are strings in the text syntax, indices are 1-based.

#include "json.hpp"

#include "cyhopf/homology.hpp"
#include "cyhopf/isomorphism.hpp"

namespace cyhopf {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Monomial& m);
void from_json(const Json& j, Monomial& m);
void to_json(Json& j, const IntMatrix& m);
void from_json(const Json& j, IntMatrix& m);
void to_json(Json& j, const DatumData& d);
void from_json(const Json& j, DatumData& d);
void to_json(Json& j, const DiagonalAutomorphism& a);
void from_json(const Json& j, DiagonalAutomorphism& a);
void to_json(Json& j, const CYReport& r);
void from_json(const Json& j, CYReport& r);
void to_json(Json& j, const DatumIsomorphism& iso);
void from_json(const Json& j, DatumIsomorphism& iso);
void to_json(Json& j, const ClassificationLabel& l);
void from_json(const Json& j, ClassificationLabel& l);
void to_json(Json& j, const IsomorphismResult& r);
void from_json(const Json& j, IsomorphismResult& r);
void to_json(Json& j, const ClassificationResult& r);
void from_json(const Json& j, ClassificationResult& r);

/// Word (1-based), roots as coefficient vectors and labels, heights.
Json root_system_json(const RootSystem& rs);

std::string to_string(AlgebraKind k);
std::string to_string(IsomorphismResult::Status s);
std::string to_string(ClassificationResult::Status s);

}  // namespace cyhopf
