#include "f4/json_io.hpp"

#include <stdexcept>

namespace f4 {

using nlohmann::json;

json to_json(const FieldSpec& f) {
  if (f.is_rational()) return {{"kind", "Q"}};
  mpz_class p = f.modulus();
  if (f.word_sized() && p.fits_ulong_p()) return {{"kind", "GF"}, {"p", p.get_ui()}};
  return {{"kind", "GF"}, {"p", p.get_str()}};
}

FieldSpec field_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind != "GF") throw std::invalid_argument("unknown field kind '" + kind + "'");
  const auto& p = j.at("p");
  return p.is_string() ? FieldSpec::prime(mpz_class(p.get<std::string>())) : FieldSpec::prime(p.get<std::uint64_t>());
}

json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const FieldSpec& f, const json& j) { return Scalar::parse(f, j.get<std::string>()); }

json to_json(const Octonion& o) {
  return {{"a", to_json(o.a)},
          {"b", to_json(o.b)},
          {"u", {to_json(o.u[0]), to_json(o.u[1]), to_json(o.u[2])}},
          {"v", {to_json(o.v[0]), to_json(o.v[1]), to_json(o.v[2])}}};
}

Octonion octonion_from_json(const FieldSpec& f, const json& j) {
  Octonion o = Octonion::zero(f);
  o.a = scalar_from_json(f, j.at("a"));
  o.b = scalar_from_json(f, j.at("b"));
  for (int i = 0; i < 3; ++i) {
    o.u[i] = scalar_from_json(f, j.at("u").at(i));
    o.v[i] = scalar_from_json(f, j.at("v").at(i));
  }
  return o;
}

json to_json(const Coord27& c) {
  json arr = json::array();
  for (const auto& s : c) arr.push_back(to_json(s));
  return arr;
}

Coord27 coord27_from_json(const FieldSpec& f, const json& j) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(kAlbertDim)) {
    throw std::invalid_argument("Coord27 must be an array of 27 scalars");
  }
  Coord27 c;
  for (int k = 0; k < kAlbertDim; ++k) c[k] = scalar_from_json(f, j[k]);
  return c;
}

json to_json(const DerivationBasis& b) {
  json members = json::array();
  for (const auto& m : b.members) {
    json rows = json::array();
    for (int s = 0; s < kAlbertDim; ++s) {
      json row = json::array();
      for (int k = 0; k < kAlbertDim; ++k) row.push_back(to_json(m(s, k)));
      rows.push_back(std::move(row));
    }
    members.push_back(std::move(rows));
  }
  return {{"field", to_json(b.field)}, {"dim", b.members.size()}, {"basis", std::move(members)}};
}

DerivationBasis basis_from_json(const json& j) {
  DerivationBasis b{field_from_json(j.at("field")), {}};
  for (const auto& rows : j.at("basis")) {
    DerivationMatrix m = DerivationMatrix::zero(b.field);
    for (int s = 0; s < kAlbertDim; ++s) {
      for (int k = 0; k < kAlbertDim; ++k) m(s, k) = scalar_from_json(b.field, rows.at(s).at(k));
    }
    b.members.push_back(std::move(m));
  }
  if (j.at("dim").get<std::size_t>() != b.members.size()) throw std::invalid_argument("dim does not match basis size");
  return b;
}

json to_json(const StructureConstants& sc) {
  json entries = json::array();
  for (const auto& e : sc.entries()) entries.push_back({e.i + 1, e.j + 1, e.k + 1, to_json(e.value)});
  return {{"basis", sc.basis_name()}, {"field", to_json(sc.field())}, {"entries", std::move(entries)}};
}

json to_json(const KillingGram& g) {
  json rows = json::array();
  for (const auto& r : g) {
    json row = json::array();
    for (const auto& s : r) row.push_back(to_json(s));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace f4
