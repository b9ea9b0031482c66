#include "hamband/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace hamband {

namespace {

using json = nlohmann::ordered_json;

constexpr std::int64_t kParseVolumeLimit = 100'000'000;

Shape shape_from_dims(const std::vector<int>& dims) {
  if (dims.empty()) throw ParseError("arrangement: shape must not be empty");
  if (dims.size() == 1 && dims[0] == 1) return Shape{1};
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 2)
      throw ParseError("arrangement: shape dims must be >= 2");
    if (i > 0 && dims[i - 1] > dims[i])
      throw ParseError("arrangement: shape dims must be sorted ascending");
  }
  Shape shape(dims);
  if (shape.volume() > kParseVolumeLimit)
    throw ParseError("arrangement: shape too large to materialize");
  return shape;
}

Arrangement make_arrangement(Shape shape, std::vector<Value> values) {
  try {
    return Arrangement(std::move(shape), std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json shape_to_json(const Shape& shape) { return json(shape.dims()); }

json arrangement_to_json(const Arrangement& a) {
  json j;
  j["shape"] = shape_to_json(a.shape());
  j["order"] = "row-major";
  j["values"] = a.values();
  return j;
}

}  // namespace

std::string to_json(const Arrangement& a) { return arrangement_to_json(a).dump(); }

Arrangement arrangement_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("arrangement: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("shape") || !j.contains("order") ||
      !j.contains("values"))
    throw ParseError("arrangement: expected object with shape, order, values");
  if (!j["order"].is_string() || j["order"].get<std::string>() != "row-major")
    throw ParseError("arrangement: order must be \"row-major\"");
  if (!j["shape"].is_array() || !j["values"].is_array())
    throw ParseError("arrangement: shape and values must be arrays");

  std::vector<int> dims;
  for (const auto& entry : j["shape"]) {
    if (!entry.is_number_integer())
      throw ParseError("arrangement: shape entries must be integers");
    dims.push_back(entry.get<int>());
  }
  Shape shape = shape_from_dims(dims);

  std::vector<Value> values;
  values.reserve(j["values"].size());
  for (const auto& entry : j["values"]) {
    if (!entry.is_number_integer())
      throw ParseError("arrangement: values must be integers");
    values.push_back(entry.get<Value>());
  }
  return make_arrangement(std::move(shape), std::move(values));
}

std::string to_csv(const Arrangement& a) {
  if (a.shape().dim_count() != 2)
    throw std::invalid_argument("csv: only two-dimensional arrangements");
  const int n1 = a.shape().dim(1), n2 = a.shape().dim(2);
  std::ostringstream out;
  for (int i1 = 0; i1 < n1; ++i1) {
    for (int i2 = 0; i2 < n2; ++i2) {
      if (i2) out << ',';
      out << a.values()[static_cast<std::int64_t>(i1) * n2 + i2];
    }
    out << '\n';
  }
  return out.str();
}

Arrangement arrangement_from_csv(std::string_view text) {
  std::vector<std::vector<Value>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Value> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      std::size_t pos = 0;
      Value v = 0;
      try {
        v = std::stoll(field, &pos);
      } catch (const std::exception&) {
        throw ParseError("csv: field is not an integer: '" + field + "'");
      }
      while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos])))
        ++pos;
      if (pos != field.size())
        throw ParseError("csv: field is not an integer: '" + field + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() < 2) throw ParseError("csv: expected at least two rows (d = 2)");
  const std::size_t n2 = rows.front().size();
  for (const auto& row : rows)
    if (row.size() != n2) throw ParseError("csv: rows have unequal lengths");
  if (rows.size() > n2)
    throw ParseError("csv: expected rows <= columns (shape dims sorted ascending)");

  Shape shape = shape_from_dims({static_cast<int>(rows.size()), static_cast<int>(n2)});
  std::vector<Value> values;
  values.reserve(shape.volume());
  for (const auto& row : rows) values.insert(values.end(), row.begin(), row.end());
  return make_arrangement(std::move(shape), std::move(values));
}

std::string to_json(const BoundsReport& report) {
  json j;
  j["shape"] = shape_to_json(report.shape);
  j["lower"] = report.lower;
  j["upper"] = report.upper;
  if (report.construction_spread)
    j["construction_spread"] = *report.construction_spread;
  else
    j["construction_spread"] = nullptr;
  return j.dump();
}

std::string to_json(const ConstructionResult& result) {
  json j;
  j["arrangement"] = arrangement_to_json(result.arrangement);
  j["spread"] = result.measured_spread;
  j["lower"] = result.lower;
  j["upper"] = result.upper;
  return j.dump();
}

std::string to_json(const OracleResult& result) {
  json j;
  j["shape"] = shape_to_json(result.shape);
  j["optimum"] = result.optimum;
  j["witness"] = arrangement_to_json(result.witness);
  j["extensions_visited"] = result.extensions_visited;
  return j.dump();
}

std::string to_json(const HypercubeNumbering& numbering) {
  return json(numbering.bit_strings()).dump();
}

}  // namespace hamband
