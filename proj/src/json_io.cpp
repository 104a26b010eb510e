#include "abelocus/json_io.hpp"

#include <charconv>
#include <string>

namespace abelocus::json {

namespace {

constexpr Int kExactDoubleLimit = Int{1} << 53;

}  // namespace

Json integer(Int v) {
  if (v > kExactDoubleLimit || v < -kExactDoubleLimit) return std::to_string(v);
  return v;
}

Int to_integer(const Json& j) {
  if (j.is_number_integer()) return j.get<Int>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) return v;
  }
  fail(ErrorKind::InvalidArgument, "json: expected an integer, got " + j.dump());
}

Json complex(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex to_complex(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(ErrorKind::InvalidArgument, "json: expected [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

Json relation(const SingularRelation& rel) {
  Json a = Json::array();
  for (Int ai : rel.a) a.push_back(integer(ai));
  return Json{{"d", integer(rel.d)},
              {"a", a},
              {"delta", integer(rel.delta)},
              {"p", integer(rel.p)}};
}

SingularRelation to_relation(const Json& j) {
  try {
    const Json& a = j.at("a");
    if (!a.is_array() || a.size() != 5)
      fail(ErrorKind::InvalidArgument, "json: relation needs five coefficients");
    std::array<Int, 5> coeffs{};
    for (std::size_t i = 0; i < 5; ++i) coeffs[i] = to_integer(a[i]);
    SingularRelation rel = make_relation(to_integer(j.at("d")), coeffs);
    if (j.contains("delta") && to_integer(j["delta"]) != rel.delta)
      fail(ErrorKind::InvalidArgument, "json: delta does not match coefficients");
    if (j.contains("p") && to_integer(j["p"]) != rel.p)
      fail(ErrorKind::InvalidArgument, "json: p does not match delta");
    return rel;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("json: ") + e.what());
  }
}

Json period(Int d, const XYPair& xy, const PeriodMatrix& z) {
  return Json{{"d", integer(d)},          {"x", integer(xy.x)},
              {"y", integer(xy.y)},       {"z1", complex(z.z1())},
              {"z2", complex(z.z2())},    {"z3", complex(z.z3())}};
}

PeriodRecord to_period(const Json& j) {
  try {
    return {to_integer(j.at("d")),
            {to_integer(j.at("x")), to_integer(j.at("y"))},
            PeriodMatrix(to_complex(j.at("z1")), to_complex(j.at("z2")),
                         to_complex(j.at("z3")))};
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("json: ") + e.what());
  }
}

Json label(const LocusLabel& l) {
  return Json{{"d", integer(l.d)}, {"m", integer(l.m)}, {"n", integer(l.n)}};
}

Json lattice_vector(const LatticeVector& v) {
  Json out = Json::array();
  for (int i = 0; i < 4; ++i) out.push_back(integer(v(i)));
  return out;
}

}  // namespace abelocus::json
