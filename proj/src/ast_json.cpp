#include "alonzo/ast_json.hpp"

namespace alonzo {

using nlohmann::ordered_json;

ordered_json type_to_json(const TypePtr& t) {
  ordered_json j;
  switch (t->tag) {
    case Type::Tag::Bool:
      j["tag"] = "bool";
      break;
    case Type::Tag::Base:
      j["tag"] = "base";
      j["name"] = t->name;
      break;
    case Type::Tag::Fun:
      j["tag"] = "fun";
      j["children"] = {type_to_json(t->a), type_to_json(t->b)};
      break;
    case Type::Tag::Prod:
      j["tag"] = "prod";
      j["children"] = {type_to_json(t->a), type_to_json(t->b)};
      break;
  }
  return j;
}

ordered_json expr_to_json(const ExprPtr& e) {
  ordered_json j;
  switch (e->tag) {
    case Expr::Tag::Var:
      j["tag"] = "var";
      j["name"] = e->name;
      j["ty"] = type_to_json(e->ty);
      break;
    case Expr::Tag::Const:
      j["tag"] = "const";
      j["name"] = e->name;
      j["ty"] = type_to_json(e->ty);
      break;
    case Expr::Tag::Eq:
      j["tag"] = "eq";
      j["children"] = {expr_to_json(e->a), expr_to_json(e->b)};
      break;
    case Expr::Tag::App:
      j["tag"] = "app";
      j["children"] = {expr_to_json(e->a), expr_to_json(e->b)};
      break;
    case Expr::Tag::Abs:
      j["tag"] = "abs";
      j["name"] = e->name;
      j["ty"] = type_to_json(e->ty);
      j["children"] = {expr_to_json(e->a)};
      break;
    case Expr::Tag::Iota:
      j["tag"] = "iota";
      j["name"] = e->name;
      j["ty"] = type_to_json(e->ty);
      j["children"] = {expr_to_json(e->a)};
      break;
    case Expr::Tag::Pair:
      j["tag"] = "pair";
      j["children"] = {expr_to_json(e->a), expr_to_json(e->b)};
      break;
  }
  return j;
}

TypePtr type_from_json(const ordered_json& j) {
  const std::string tag = j.at("tag");
  if (tag == "bool") return bool_ty();
  if (tag == "base") return base_ty(j.at("name"));
  if (tag == "fun")
    return fun_ty(type_from_json(j.at("children")[0]),
                  type_from_json(j.at("children")[1]));
  if (tag == "prod")
    return prod_ty(type_from_json(j.at("children")[0]),
                   type_from_json(j.at("children")[1]));
  throw std::runtime_error("unknown type tag " + tag);
}

ExprPtr expr_from_json(const ordered_json& j) {
  const std::string tag = j.at("tag");
  if (tag == "var") return var(j.at("name"), type_from_json(j.at("ty")));
  if (tag == "const") return cnst(j.at("name"), type_from_json(j.at("ty")));
  if (tag == "eq")
    return eq(expr_from_json(j.at("children")[0]),
              expr_from_json(j.at("children")[1]));
  if (tag == "app")
    return app(expr_from_json(j.at("children")[0]),
               expr_from_json(j.at("children")[1]));
  if (tag == "abs")
    return abs(j.at("name"), type_from_json(j.at("ty")),
               expr_from_json(j.at("children")[0]));
  if (tag == "iota")
    return iota(j.at("name"), type_from_json(j.at("ty")),
                expr_from_json(j.at("children")[0]));
  if (tag == "pair")
    return pair(expr_from_json(j.at("children")[0]),
                expr_from_json(j.at("children")[1]));
  throw std::runtime_error("unknown expr tag " + tag);
}

}  // namespace alonzo
