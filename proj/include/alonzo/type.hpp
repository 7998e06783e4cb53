#ifndef ALONZO_TYPE_HPP
#define ALONZO_TYPE_HPP

#include <memory>
#include <string>

namespace alonzo {

// Types of the core language: the type of truth values `o`, named base
// types, (partial-)function types and binary product types.  Set types
// {A} are surface sugar for A -> o and never appear as a distinct node.
struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  enum class Tag { Bool, Base, Fun, Prod };
  Tag tag;
  std::string name;  // Base only
  TypePtr a, b;      // Fun: dom/cod; Prod: fst/snd

  bool is_bool() const { return tag == Tag::Bool; }
  bool is_base() const { return tag == Tag::Base; }
  bool is_fun() const { return tag == Tag::Fun; }
  bool is_prod() const { return tag == Tag::Prod; }
};

TypePtr bool_ty();
TypePtr base_ty(const std::string& name);
TypePtr fun_ty(TypePtr dom, TypePtr cod);
TypePtr prod_ty(TypePtr fst, TypePtr snd);
// {A} as sugar: A -> o
TypePtr set_ty(TypePtr elem);

bool type_eq(const TypePtr& x, const TypePtr& y);
bool is_set_type(const TypePtr& t);  // Fun(_, o)

// ASCII rendering: o, M, A -> B, A * B, {A}
std::string show_type(const TypePtr& t);

}  // namespace alonzo

#endif
