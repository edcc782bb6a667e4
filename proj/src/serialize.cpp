#include "foxcolor/serialize.hpp"

#include <limits>
#include <string>

#include "foxcolor/errors.hpp"

namespace foxcolor {

Json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<long long>::min() &&
      value <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(value);
  }
  return value.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InputError("expected an integer, got " + j.dump());
}

Json pd_json(const PdCode& pd) {
  Json crossings = Json::array();
  for (const auto& c : pd.crossings) crossings.push_back({c[0], c[1], c[2], c[3]});
  return Json{{"crossings", crossings}};
}

PdCode pd_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("crossings")) {
    throw InputError("diagram JSON needs a \"crossings\" field");
  }
  const auto& crossings = j.at("crossings");
  if (crossings.is_array() && crossings.empty()) return PdCode{};
  return parse_pd(crossings.dump());
}

Json matrix_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

IntegerMatrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows) throw InputError("matrix JSON row count mismatch");
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw InputError("matrix JSON column count mismatch");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from_json(entries[i][k]);
  }
  return m;
}

Json coloring_json(const PlanarDiagram& d, const Coloring& c) {
  Json values = Json::object();
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    values[std::to_string(d.arc_ids()[i])] = c.values[i];
  }
  return Json{{"modulus", c.modulus}, {"values", values}};
}

Coloring coloring_from_json(const PlanarDiagram& d, const Json& j) {
  Coloring c;
  c.modulus = j.at("modulus").get<int>();
  c.values.assign(d.arc_count(), 0);
  const auto& values = j.at("values");
  if (values.size() != static_cast<std::size_t>(d.arc_count())) {
    throw InputError("coloring JSON must assign every arc");
  }
  for (const auto& [key, value] : values.items()) {
    c.values[d.arc_of_edge(std::stoi(key))] = value.get<int>();
  }
  return c;
}

namespace {

Json counts_json(const VariantCounts& v) {
  return Json{{"crossings", v.crossings},
              {"nullity", v.nullity},
              {"aut_classes", v.aut_classes},
              {"inn_classes", v.inn_classes}};
}

}  // namespace

Json report_json(const VerifyReport& r) {
  Json variants = Json::array();
  for (const auto& v : r.variants) variants.push_back(counts_json(v));
  return Json{{"knot", r.knot},
              {"p", r.p},
              {"nullity", r.base.nullity},
              {"aut_classes", r.base.aut_classes},
              {"inn_classes", r.base.inn_classes},
              {"predicted_aut", integer_json(r.predicted_aut)},
              {"predicted_inn", integer_json(r.predicted_inn)},
              {"orbit_sizes", r.base.aut_orbit_sizes},
              {"inn_orbit_sizes", r.base.inn_orbit_sizes},
              {"variants", variants},
              {"invariant_across_moves", r.invariant_across_moves},
              {"passed", r.passed()}};
}

}  // namespace foxcolor
