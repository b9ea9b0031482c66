#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hamband/arrangement.hpp"
#include "hamband/bounds.hpp"
#include "hamband/construct.hpp"
#include "hamband/hypercube.hpp"
#include "hamband/oracle.hpp"

namespace hamband {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"shape":[n1,...,nd],"order":"row-major","values":[v1,...,vV]}
/// with 1-based values listed row-major (last coordinate fastest) and the
/// shape in sorted order.
std::string to_json(const Arrangement& a);

/// Strict parser: rejects unsorted or degenerate shapes, any order other
/// than "row-major", and value lists that are not bijections.
Arrangement arrangement_from_json(std::string_view text);

/// Two-dimensional only: n1 lines of n2 comma-separated integers.
std::string to_csv(const Arrangement& a);
Arrangement arrangement_from_csv(std::string_view text);

/// {"shape":[...],"lower":L,"upper":U,"construction_spread":S|null}
std::string to_json(const BoundsReport& report);

/// {"arrangement":{...},"spread":S,"lower":L,"upper":U}
std::string to_json(const ConstructionResult& result);

/// {"shape":[...],"optimum":N,"witness":{...},"extensions_visited":E}
std::string to_json(const OracleResult& result);

/// JSON list of the numbering's vertices as bit strings, in order.
std::string to_json(const HypercubeNumbering& numbering);

}  // namespace hamband
