#pragma once

#include <string_view>

#include <json.hpp>

#include "frobenius/partition.hpp"
#include "frobenius/setaction.hpp"
#include "frobenius/symfunc.hpp"

namespace frob::json {

using Json = nlohmann::ordered_json;

/// Bad JSON shape or content. Syntax errors keep nlohmann's message, which
/// carries the byte position.
class FormatError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

/// {"basis":"m","degree":4,"terms":[{"partition":[2,2],"coeff":"2"},...]}
/// with terms in canonical order.
Json to_json(const SymFunc& f);
/// Accepts coefficients as strings ("3", "-1/2") or integers. Mixed
/// partition weights are rejected with a message naming both weights.
SymFunc symfunc_from_json(const Json& j);

/// {"n":4,"m":3,"gens":[[2,1,3],...]}, 1-based images.
Json to_json(const FiniteAction& a);
FiniteAction action_from_json(const Json& j);

/// [{"mu":[2,2],"orbits":"2"}, ...]
Json to_json(const OrbitReport& report);

/// Wraps nlohmann::json::parse, rethrowing syntax errors as FormatError.
Json parse(std::string_view text);

}  // namespace frob::json
