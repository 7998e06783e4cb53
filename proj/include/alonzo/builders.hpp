#ifndef ALONZO_BUILDERS_HPP
#define ALONZO_BUILDERS_HPP

#include <vector>

#include "alonzo/kernel.hpp"

// Constructors for the notational layer: every operator, binder,
// pseudoconstant, and abbreviation is a closed-form rewrite into kernel
// syntax.  These are the single source of truth for desugaring; the
// surface parser and the morphism machinery both go through them.
namespace alonzo::pc {

// --- propositional layer -------------------------------------------------
ExprPtr truth();    // (\x:o. x) = (\x:o. x)
ExprPtr falsity();  // (\x:o. T) = (\x:o. x)
ExprPtr and_(const ExprPtr& a, const ExprPtr& b);
ExprPtr or_(const ExprPtr& a, const ExprPtr& b);
ExprPtr not_(const ExprPtr& a);
ExprPtr implies(const ExprPtr& a, const ExprPtr& b);
ExprPtr iff(const ExprPtr& a, const ExprPtr& b);
// right-folded conjunction of a nonempty list (unit: truth())
ExprPtr conj(const std::vector<ExprPtr>& items);
ExprPtr neq(const ExprPtr& a, const ExprPtr& b);
// chained a1 = a2 = ... = an as a conjunction of adjacent equations
ExprPtr eq_chain(const std::vector<ExprPtr>& items);

// --- binders over plain types --------------------------------------------
ExprPtr forall(const std::string& x, const TypePtr& ty, const ExprPtr& body);
ExprPtr exists(const std::string& x, const TypePtr& ty, const ExprPtr& body);

// --- definedness ----------------------------------------------------------
ExprPtr is_defined(const ExprPtr& a);    // A = A
ExprPtr is_undefined(const ExprPtr& a);  // ~(A = A)
ExprPtr quasi_eq(const ExprPtr& a, const ExprPtr& b);  // (A! \/ B!) => A = B
ExprPtr not_quasi_eq(const ExprPtr& a, const ExprPtr& b);

// --- canonical undefined / basic function constructs ----------------------
ExprPtr bot(const TypePtr& ty);  // F at o, otherwise I x:ty. ~(x = x)
ExprPtr emp_fun(const TypePtr& dom, const TypePtr& cod);  // \x:dom. bot(cod)
ExprPtr id_fun(const TypePtr& ty);                        // \x:ty. x
// if C then A else B; at type o a conjunction of implications, otherwise
// a definite description
ExprPtr if_(const ExprPtr& c, const ExprPtr& a, const ExprPtr& b);
ExprPtr fst(const ExprPtr& p);  // applied fst pseudoconstant
ExprPtr snd(const ExprPtr& p);
ExprPtr total(const ExprPtr& f);  // forall x:dom. (f x)!
// f restricted to set s (applied restriction pseudoconstant)
ExprPtr restrict_(const ExprPtr& f, const ExprPtr& s);
ExprPtr fun_comp_pair(const TypePtr& a, const TypePtr& b, const TypePtr& c);
ExprPtr fun_app_pair(const TypePtr& a, const TypePtr& b);

// --- sets -----------------------------------------------------------------
ExprPtr emp_set(const TypePtr& elem);   // \x:elem. F
ExprPtr univ_set(const TypePtr& elem);  // \x:elem. T
ExprPtr member(const ExprPtr& x, const ExprPtr& s);      // s x
ExprPtr not_member(const ExprPtr& x, const ExprPtr& s);  // ~(s x)
ExprPtr subset(const ExprPtr& s, const ExprPtr& t);
// {A1,...,An} in applied-lambda form
ExprPtr fin_set(const std::vector<ExprPtr>& elems);
// elem type of a set-typed expression; throws TypeError otherwise
TypePtr set_elem_ty(const ExprPtr& s);
// does this term have the shape of a universal set (\x:ty. T)?
bool is_univ_set(const ExprPtr& e);

// --- quasitypes (set-typed expressions used as types) ----------------------
// Each of these collapses to its unrelativized counterpart when the
// quasitype argument(s) cover a whole type: a binder over the universal
// set is a plain binder, and the function/product/set quasitypes over
// universal sets are themselves universal sets.  This keeps terms built
// over trivial quasitypes in their simplest logically equivalent form.
ExprPtr qt_forall(const std::string& x, const ExprPtr& q, const ExprPtr& body);
ExprPtr qt_exists(const std::string& x, const ExprPtr& q, const ExprPtr& body);
ExprPtr qt_iota(const std::string& x, const ExprPtr& q, const ExprPtr& body);
// \x:Q. B  ==  \x:ty(Q). if x in Q then B else bot
ExprPtr qt_abs(const std::string& x, const ExprPtr& q, const ExprPtr& body);
ExprPtr is_defined_in(const ExprPtr& a, const ExprPtr& q);  // A! /\ A in Q
ExprPtr is_undefined_in(const ExprPtr& a, const ExprPtr& q);
// function space between quasitypes (codomain not o)
ExprPtr fun_qty(const ExprPtr& q, const ExprPtr& t);
// FunQTy(Q, o): the predicates concentrated on Q, i.e. {s | s subset Q}
ExprPtr fun_qty_pred(const ExprPtr& q);
ExprPtr prod_qty(const ExprPtr& q, const ExprPtr& t);
ExprPtr set_qty(const ExprPtr& q);  // same as fun_qty_pred

// --- monoid-specific pseudoconstants and abbreviations ---------------------
// set-op applied to f : (a*b)->c, giving ({a}*{b}) -> {c}
ExprPtr set_op(const ExprPtr& f);
ExprPtr monoid(const ExprPtr& m, const ExprPtr& f, const ExprPtr& e);
ExprPtr com_monoid(const ExprPtr& m, const ExprPtr& f, const ExprPtr& e);
ExprPtr mon_action(const ExprPtr& m, const ExprPtr& s, const ExprPtr& f,
                   const ExprPtr& e, const ExprPtr& g);
ExprPtr mon_homom(const ExprPtr& m1, const ExprPtr& m2, const ExprPtr& f1,
                  const ExprPtr& e1, const ExprPtr& f2, const ExprPtr& e2,
                  const ExprPtr& h);

// infix application c A B: paired if c : (t*t)->r, curried if c : t->t->r
ExprPtr infix(const ExprPtr& c, const ExprPtr& a, const ExprPtr& b);

// --- structural recognizers (inverses of the constructors above) -----------
// forall x:ty. body  ==  (\x:ty. T) = (\x:ty. body)
bool match_forall(const ExprPtr& e, std::string& x, TypePtr& ty, ExprPtr& body);
bool match_not(const ExprPtr& e, ExprPtr& arg);
bool match_and(const ExprPtr& e, ExprPtr& a, ExprPtr& b);
bool match_or(const ExprPtr& e, ExprPtr& a, ExprPtr& b);
bool match_implies(const ExprPtr& e, ExprPtr& a, ExprPtr& b);

}  // namespace alonzo::pc

#endif
