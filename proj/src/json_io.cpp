#include "hecke/json_io.hpp"

namespace hecke {

using json = nlohmann::ordered_json;

namespace {

Integer integer_from(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::SyntaxError, "expected a decimal string");
  Integer v;
  if (v.set_str(j.get<std::string>(), 10) != 0) {
    throw Error(ErrorCode::SyntaxError, "malformed decimal string");
  }
  return v;
}

}  // namespace

json to_json(const RingElt& x) { return json::array({x.a().get_str(), x.b().get_str()}); }

RingElt element_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::SyntaxError, "element must be a pair [a, b]");
  }
  return RingElt(integer_from(j[0]), integer_from(j[1]));
}

json to_json(const GMatrix& m) {
  return json::array({json::array({to_json(m.a()), to_json(m.b())}),
                      json::array({to_json(m.c()), to_json(m.d())})});
}

GMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
      j[0].size() != 2 || j[1].size() != 2) {
    throw Error(ErrorCode::SyntaxError, "matrix must be [[a, b], [c, d]]");
  }
  return GMatrix::from_entries(element_from_json(j[0][0]), element_from_json(j[0][1]),
                               element_from_json(j[1][0]), element_from_json(j[1][1]));
}

json to_json(const Factorization& f) {
  json factors = json::array();
  for (const auto& [p, m] : f.factors) {
    factors.push_back({{"generator", to_json(p.generator)},
                       {"p", p.residue_characteristic.get_str()},
                       {"splitting", std::string(splitting_name(p.splitting))},
                       {"norm", p.absolute_norm.get_str()},
                       {"multiplicity", m}});
  }
  return {{"unit", {{"sign", f.unit.sign}, {"exponent", f.unit.exponent}}},
          {"factors", std::move(factors)}};
}

}  // namespace hecke
