#pragma once

// JSON forms of the library's values. Integers whose magnitude exceeds 2^53
// are written as decimal strings so that every consumer reads them exactly.

#include <json.hpp>

#include "abelocus/humbert.hpp"
#include "abelocus/periods.hpp"

namespace abelocus::json {

using Json = nlohmann::ordered_json;

Json integer(Int v);
Int to_integer(const Json& j);

Json complex(Complex z);
Complex to_complex(const Json& j);

/// {d, a: [a1..a5], delta, p}
Json relation(const SingularRelation& rel);
SingularRelation to_relation(const Json& j);

struct PeriodRecord {
  Int d;
  XYPair xy;
  PeriodMatrix z;
};

/// {d, x, y, z1: [re, im], z2: [re, im], z3: [re, im]}
Json period(Int d, const XYPair& xy, const PeriodMatrix& z);
PeriodRecord to_period(const Json& j);

Json label(const LocusLabel& l);
Json lattice_vector(const LatticeVector& v);

}  // namespace abelocus::json
