#include "boxcub/representation_json.hpp"

namespace boxcub {
namespace {

Json rational_json(const Rational& r) {
  return Json::array({r.numerator(), r.denominator()});
}

Json interval_dim(const IntervalRepresentation& rep) {
  Json dim = Json::array();
  for (const auto& iv : rep.intervals) {
    dim.push_back(Json::array({rational_json(iv.lo), rational_json(iv.hi)}));
  }
  return dim;
}

Json unit_dim(const UnitIntervalRepresentation& rep) {
  Json dim = Json::array();
  for (const auto& l : rep.lefts) dim.push_back(rational_json(l));
  return dim;
}

Json header(int n, const char* kind) {
  Json j;
  j["n"] = n;
  j["kind"] = kind;
  j["dims"] = Json::array();
  return j;
}

Rational parse_rational(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw SchemaError("endpoint must be [numerator, denominator]");
  }
  const auto den = j[1].get<std::int64_t>();
  if (den == 0) throw SchemaError("zero denominator");
  return Rational(j[0].get<std::int64_t>(), den);
}

IntervalRepresentation parse_interval_dim(const Json& dim, int n) {
  if (!dim.is_array() || static_cast<int>(dim.size()) != n) {
    throw SchemaError("dimension must list one interval per vertex");
  }
  IntervalRepresentation rep;
  for (const auto& entry : dim) {
    if (!entry.is_array() || entry.size() != 2) {
      throw SchemaError("interval must be [lo, hi]");
    }
    Interval iv{parse_rational(entry[0]), parse_rational(entry[1])};
    if (iv.hi < iv.lo) throw SchemaError("interval with lo > hi");
    rep.intervals.push_back(iv);
  }
  return rep;
}

UnitIntervalRepresentation parse_unit_dim(const Json& dim, int n) {
  if (!dim.is_array() || static_cast<int>(dim.size()) != n) {
    throw SchemaError("dimension must list one left endpoint per vertex");
  }
  UnitIntervalRepresentation rep;
  for (const auto& entry : dim) rep.lefts.push_back(parse_rational(entry));
  return rep;
}

}  // namespace

Json to_json(const IntervalRepresentation& rep) {
  Json j = header(rep.num_vertices(), "interval");
  j["dims"].push_back(interval_dim(rep));
  return j;
}

Json to_json(const UnitIntervalRepresentation& rep) {
  Json j = header(rep.num_vertices(), "unit");
  j["dims"].push_back(unit_dim(rep));
  return j;
}

Json to_json(const BoxRepresentation& rep) {
  Json j = header(rep.n, "box");
  for (const auto& dim : rep.dims) j["dims"].push_back(interval_dim(dim));
  return j;
}

Json to_json(const CubeRepresentation& rep) {
  Json j = header(rep.n, "cube");
  for (const auto& dim : rep.dims) j["dims"].push_back(unit_dim(dim));
  return j;
}

AnyRepresentation representation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("kind") ||
      !j.contains("dims")) {
    throw SchemaError("representation needs \"n\", \"kind\" and \"dims\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 0) {
    throw SchemaError("\"n\" must be a non-negative integer");
  }
  if (!j["kind"].is_string() || !j["dims"].is_array()) {
    throw SchemaError("\"kind\" must be a string and \"dims\" an array");
  }
  const int n = j["n"].get<int>();
  const std::string kind = j["kind"].get<std::string>();
  const Json& dims = j["dims"];
  if (kind == "interval" || kind == "unit") {
    if (dims.size() != 1) throw SchemaError(kind + " must have exactly one dimension");
    if (kind == "interval") return parse_interval_dim(dims[0], n);
    return parse_unit_dim(dims[0], n);
  }
  if (kind == "box") {
    BoxRepresentation rep{n, {}};
    for (const auto& dim : dims) rep.dims.push_back(parse_interval_dim(dim, n));
    return rep;
  }
  if (kind == "cube") {
    CubeRepresentation rep{n, {}};
    for (const auto& dim : dims) rep.dims.push_back(parse_unit_dim(dim, n));
    return rep;
  }
  throw SchemaError("unknown representation kind \"" + kind + "\"");
}

BoxRepresentation as_box_representation(const AnyRepresentation& rep) {
  struct Visitor {
    BoxRepresentation operator()(const IntervalRepresentation& r) const {
      return {r.num_vertices(), {r}};
    }
    BoxRepresentation operator()(const UnitIntervalRepresentation& r) const {
      return {r.num_vertices(), {r.as_intervals()}};
    }
    BoxRepresentation operator()(const BoxRepresentation& r) const { return r; }
    BoxRepresentation operator()(const CubeRepresentation& r) const {
      return r.as_box();
    }
  };
  return std::visit(Visitor{}, rep);
}

}  // namespace boxcub
