#pragma once

// Small data shared by the unit and acceptance tests.

#include "cyhopf/datum.hpp"

namespace fixtures {

inline cyhopf::DatumData uqsl2() {
  return cyhopf::parse_datum(R"(group_rank: 1
parameters: q
cartan: A1xA1
g: 1; 1
chi: q^-2; q^2
linking: 1 2 1
)");
}

inline cyhopf::DatumData eg_pointed() {
  return cyhopf::parse_datum(R"(group_rank: 3
parameters: q
cartan: A2xA1
g: 1 0 0; 0 1 0; 0 0 1
chi: q q^-2 q^4; q q q^-2; q^-4 q^2 q^-4
)");
}

}  // namespace fixtures
