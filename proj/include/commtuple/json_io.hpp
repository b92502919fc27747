#pragma once

// JSON schemas shared by the CLI and its tests.
//
//   AntisymMatrix   {"n": int, "p": int, "upper": [int, ...]}   (row-major upper triangle)
//   UnitaryTuple    {"n", "m", "p", "matrices": [gen][factor][row][col] -> [re, im]}
//   ComponentLabel  {"kind": "identity"} or
//                   {"kind": "non_identity", "C": AntisymMatrix, "case": "2" | "3",
//                    "decorations": [[int, ...], ...], "sub": ComponentLabel (case 2 only)}
//   RepPoint        {"n", "m", "p", "phases": [factor][row][generator]}
//   GradedSeries    {"coeffs": {"degree": int, ...}, "string": "1 + t^2"}

#include <json.hpp>

#include "commtuple/central_data.hpp"
#include "commtuple/cohomology.hpp"
#include "commtuple/extraspecial.hpp"
#include "commtuple/labels.hpp"
#include "commtuple/su_core.hpp"

namespace commtuple {

using Json = nlohmann::ordered_json;

Json to_json(const AntisymMatrix& c);
AntisymMatrix antisym_from_json(const Json& j);

Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, int size);

Json to_json(const UnitaryTuple& t);
/// Shape errors raise SchemaError; matrices are not checked for unitarity here.
UnitaryTuple tuple_from_json(const Json& j);

Json to_json(const ComponentLabel& label);
ComponentLabel label_from_json(const Json& j);

Json to_json(const RepPoint& point);

Json to_json(const GradedSeries& series);

Json to_json(const FiniteMatrixGroup& g);

}  // namespace commtuple
