#include "commtuple/json_io.hpp"

#include <string>

#include "commtuple/errors.hpp"

namespace commtuple {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

const Json& array_of(const Json& j, std::size_t size, const std::string& what) {
  if (!j.is_array() || j.size() != size) {
    throw SchemaError(what + " must be an array of length " + std::to_string(size));
  }
  return j;
}

GroupParams params_from_json(const Json& j) {
  GroupParams params{int_field(j, "n"), int_field(j, "m"), int_field(j, "p")};
  try {
    params.validate();
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
  return params;
}

}  // namespace

Json to_json(const AntisymMatrix& c) { return Json{{"n", c.size()}, {"p", c.modulus()}, {"upper", c.upper()}}; }

AntisymMatrix antisym_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int p = int_field(j, "p");
  const Json& upper = field(j, "upper");
  if (!upper.is_array()) throw SchemaError("'upper' must be an array");
  std::vector<int> entries;
  for (const auto& v : upper) {
    if (!v.is_number_integer()) throw SchemaError("'upper' entries must be integers");
    entries.push_back(v.get<int>());
  }
  try {
    return AntisymMatrix::from_upper(n, p, entries);
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
}

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, int size) {
  ComplexMatrix m(size, size);
  array_of(j, static_cast<std::size_t>(size), "matrix");
  for (int r = 0; r < size; ++r) {
    const Json& row = array_of(j[static_cast<std::size_t>(r)], static_cast<std::size_t>(size), "matrix row");
    for (int c = 0; c < size; ++c) {
      const Json& entry = array_of(row[static_cast<std::size_t>(c)], 2, "matrix entry");
      if (!entry[0].is_number() || !entry[1].is_number()) throw SchemaError("matrix entries must be [re, im] numbers");
      m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

Json to_json(const UnitaryTuple& t) {
  const auto& [n, m, p] = t.params();
  Json gens = Json::array();
  for (int k = 0; k < n; ++k) {
    Json factors = Json::array();
    for (int f = 0; f < m; ++f) factors.push_back(to_json(t.at(k, f)));
    gens.push_back(std::move(factors));
  }
  return Json{{"n", n}, {"m", m}, {"p", p}, {"matrices", std::move(gens)}};
}

UnitaryTuple tuple_from_json(const Json& j) {
  const GroupParams params = params_from_json(j);
  const Json& gens = array_of(field(j, "matrices"), static_cast<std::size_t>(params.n), "'matrices'");
  std::vector<ComplexMatrix> mats;
  for (int k = 0; k < params.n; ++k) {
    const Json& factors =
        array_of(gens[static_cast<std::size_t>(k)], static_cast<std::size_t>(params.m), "generator entry");
    for (int f = 0; f < params.m; ++f) {
      try {
        mats.push_back(matrix_from_json(factors[static_cast<std::size_t>(f)], params.p));
      } catch (const SchemaError& e) {
        throw SchemaError("matrix [" + std::to_string(k) + "][" + std::to_string(f) + "]: " + e.what());
      }
    }
  }
  return {params, std::move(mats)};
}

Json to_json(const ComponentLabel& label) {
  if (label.is_identity()) return Json{{"kind", "identity"}};
  Json decorations = Json::array();
  for (const auto& d : label.decorations()) decorations.push_back(d.coords());
  Json out{{"kind", "non_identity"},
           {"C", to_json(label.matrix())},
           {"case", label.kind() == ComponentLabel::Kind::case2 ? "2" : "3"},
           {"decorations", std::move(decorations)}};
  if (label.kind() == ComponentLabel::Kind::case2) out["sub"] = to_json(label.sub());
  return out;
}

ComponentLabel label_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind == "identity") return ComponentLabel::identity();
  if (kind != "non_identity") throw SchemaError("label kind must be 'identity' or 'non_identity'");
  AntisymMatrix c = antisym_from_json(field(j, "C"));
  const Json& decorations = field(j, "decorations");
  if (!decorations.is_array()) throw SchemaError("'decorations' must be an array");
  std::vector<CentralVector> vectors;
  for (const auto& d : decorations) {
    if (!d.is_array() || d.empty()) throw SchemaError("each decoration must be a nonempty integer array");
    std::vector<int> raw;
    for (const auto& v : d) {
      if (!v.is_number_integer()) throw SchemaError("decoration entries must be integers");
      raw.push_back(v.get<int>());
    }
    vectors.emplace_back(std::move(raw), c.modulus());
  }
  const Json& which = field(j, "case");
  try {
    if (which == "2") {
      if (vectors.size() != 1) throw SchemaError("case 2 label needs exactly one decoration");
      return ComponentLabel::case2(std::move(c), vectors.front(), label_from_json(field(j, "sub")));
    }
    if (which == "3") return ComponentLabel::case3(std::move(c), std::move(vectors));
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("label case must be \"2\" or \"3\"");
}

Json to_json(const RepPoint& point) {
  const auto& [n, m, p] = point.params();
  Json factors = Json::array();
  for (int f = 0; f < m; ++f) {
    Json rows = Json::array();
    for (int r = 0; r < p; ++r) {
      Json row = Json::array();
      for (int k = 0; k < n; ++k) row.push_back(point.at(f, r, k));
      rows.push_back(std::move(row));
    }
    factors.push_back(std::move(rows));
  }
  return Json{{"n", n}, {"m", m}, {"p", p}, {"phases", std::move(factors)}};
}

Json to_json(const GradedSeries& series) {
  Json coeffs = Json::object();
  for (const auto& [degree, c] : series.sparse()) {
    if (boost::multiprecision::denominator(c) == 1) {
      coeffs[std::to_string(degree)] = Json::parse(boost::multiprecision::numerator(c).str());
    } else {
      coeffs[std::to_string(degree)] = c.str();
    }
  }
  return Json{{"coeffs", std::move(coeffs)}, {"string", series.to_string()}};
}

Json to_json(const FiniteMatrixGroup& g) {
  Json elements = Json::array();
  for (const auto& e : g.elements()) elements.push_back(to_json(e));
  return Json{{"p", g.prime()}, {"order", g.order()}, {"elements", std::move(elements)}};
}

}  // namespace commtuple
