#include "alonzo/type.hpp"

namespace alonzo {

TypePtr bool_ty() {
  static const TypePtr t = std::make_shared<Type>(Type{Type::Tag::Bool, "", nullptr, nullptr});
  return t;
}

TypePtr base_ty(const std::string& name) {
  return std::make_shared<Type>(Type{Type::Tag::Base, name, nullptr, nullptr});
}

TypePtr fun_ty(TypePtr dom, TypePtr cod) {
  return std::make_shared<Type>(Type{Type::Tag::Fun, "", std::move(dom), std::move(cod)});
}

TypePtr prod_ty(TypePtr fst, TypePtr snd) {
  return std::make_shared<Type>(Type{Type::Tag::Prod, "", std::move(fst), std::move(snd)});
}

TypePtr set_ty(TypePtr elem) { return fun_ty(std::move(elem), bool_ty()); }

bool type_eq(const TypePtr& x, const TypePtr& y) {
  if (x.get() == y.get()) return true;
  if (!x || !y) return false;
  if (x->tag != y->tag) return false;
  switch (x->tag) {
    case Type::Tag::Bool: return true;
    case Type::Tag::Base: return x->name == y->name;
    case Type::Tag::Fun:
    case Type::Tag::Prod: return type_eq(x->a, y->a) && type_eq(x->b, y->b);
  }
  return false;
}

bool is_set_type(const TypePtr& t) {
  return t && t->is_fun() && t->b->is_bool();
}

namespace {
// prec: 0 = arrow (loosest), 1 = product, 2 = atom
std::string show(const TypePtr& t, int prec) {
  switch (t->tag) {
    case Type::Tag::Bool: return "o";
    case Type::Tag::Base: return t->name;
    case Type::Tag::Fun: {
      if (t->b->is_bool()) return "{" + show(t->a, 0) + "}";
      std::string s = show(t->a, 1) + " -> " + show(t->b, 0);
      return prec > 0 ? "(" + s + ")" : s;
    }
    case Type::Tag::Prod: {
      std::string s = show(t->a, 2) + " * " + show(t->b, 1);
      return prec > 1 ? "(" + s + ")" : s;
    }
  }
  return "?";
}
}  // namespace

std::string show_type(const TypePtr& t) { return show(t, 0); }

}  // namespace alonzo
