#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "boxcub/interval.hpp"

namespace boxcub {

using Json = nlohmann::ordered_json;

// Schema, fields in this order:
//   {"n": <int>, "kind": "interval"|"unit"|"box"|"cube", "dims": [...]}
// Each dimension is an array with one entry per vertex. Unit and cube
// dimensions list left endpoints as [numerator, denominator]; interval and
// box dimensions list [[lo_num, lo_den], [hi_num, hi_den]]. "interval" and
// "unit" always carry exactly one dimension.
Json to_json(const IntervalRepresentation& rep);
Json to_json(const UnitIntervalRepresentation& rep);
Json to_json(const BoxRepresentation& rep);
Json to_json(const CubeRepresentation& rep);

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyRepresentation =
    std::variant<IntervalRepresentation, UnitIntervalRepresentation,
                 BoxRepresentation, CubeRepresentation>;

// Throws SchemaError on any deviation from the schema, including zero
// denominators, per-dimension vertex counts that differ from "n", and lo > hi.
AnyRepresentation representation_from_json(const Json& j);

// Interval and unit kinds are lifted to one-dimensional box/cube form.
BoxRepresentation as_box_representation(const AnyRepresentation& rep);

}  // namespace boxcub
