#ifndef ALONZO_AST_JSON_HPP
#define ALONZO_AST_JSON_HPP

#include <json.hpp>

#include "alonzo/expr.hpp"

namespace alonzo {

// Canonical JSON tree for types and expressions; field order is fixed
// (tag, ty, children) so emitted files are byte-stable.
nlohmann::ordered_json type_to_json(const TypePtr& t);
nlohmann::ordered_json expr_to_json(const ExprPtr& e);

TypePtr type_from_json(const nlohmann::ordered_json& j);
ExprPtr expr_from_json(const nlohmann::ordered_json& j);

}  // namespace alonzo

#endif
