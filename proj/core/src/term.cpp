// SPDX-License-Identifier: Apache-2.0
#include "dax/term.hpp"

#include <algorithm>

#include "dax/errors.hpp"

namespace dax {

TermPtr t_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Variable;
  t->name = std::move(name);
  return t;
}

TermPtr t_const(Rat value) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Constant;
  t->value = std::move(value);
  return t;
}

TermPtr t_sum(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Sum;
  t->function_free = a->function_free && b->function_free;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

TermPtr t_prod(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Product;
  t->function_free = a->function_free && b->function_free;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

TermPtr t_app(FuncId f, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::FuncApp;
  t->func = f;
  t->function_free = false;
  t->left = std::move(arg);
  return t;
}

TermPtr t_sub(TermPtr a, TermPtr b) {
  return t_sum(std::move(a), t_neg(std::move(b)));
}

TermPtr t_neg(TermPtr a) { return t_prod(t_const(Rat(-1)), std::move(a)); }

bool term_equal(const TermPtr &a, const TermPtr &b) {
  if (a == b)
    return true;
  if (!a || !b || a->kind != b->kind)
    return false;
  switch (a->kind) {
  case Term::Kind::Variable:
    return a->name == b->name;
  case Term::Kind::Constant:
    return a->value == b->value;
  case Term::Kind::Sum:
  case Term::Kind::Product:
    return term_equal(a->left, b->left) && term_equal(a->right, b->right);
  case Term::Kind::FuncApp:
    return a->func == b->func && term_equal(a->left, b->left);
  }
  return false;
}

void term_vars(const TermPtr &t, std::set<std::string> &out) {
  switch (t->kind) {
  case Term::Kind::Variable:
    out.insert(t->name);
    return;
  case Term::Kind::Constant:
    return;
  case Term::Kind::Sum:
  case Term::Kind::Product:
    term_vars(t->left, out);
    term_vars(t->right, out);
    return;
  case Term::Kind::FuncApp:
    term_vars(t->left, out);
    return;
  }
}

TermPtr term_subst(const TermPtr &t, const TermPtr &pattern,
                   const TermPtr &replacement) {
  if (term_equal(t, pattern))
    return replacement;
  switch (t->kind) {
  case Term::Kind::Variable:
  case Term::Kind::Constant:
    return t;
  case Term::Kind::Sum: {
    auto l = term_subst(t->left, pattern, replacement);
    auto r = term_subst(t->right, pattern, replacement);
    return (l == t->left && r == t->right) ? t : t_sum(l, r);
  }
  case Term::Kind::Product: {
    auto l = term_subst(t->left, pattern, replacement);
    auto r = term_subst(t->right, pattern, replacement);
    return (l == t->left && r == t->right) ? t : t_prod(l, r);
  }
  case Term::Kind::FuncApp: {
    auto a = term_subst(t->left, pattern, replacement);
    return a == t->left ? t : t_app(t->func, a);
  }
  }
  return t;
}

Rat term_eval_exact(const TermPtr &t,
                    const std::vector<std::pair<std::string, Rat>> &env) {
  switch (t->kind) {
  case Term::Kind::Variable: {
    for (const auto &[name, value] : env)
      if (name == t->name)
        return value;
    throw InvalidArgument("unbound variable: " + t->name);
  }
  case Term::Kind::Constant:
    return t->value;
  case Term::Kind::Sum:
    return term_eval_exact(t->left, env) + term_eval_exact(t->right, env);
  case Term::Kind::Product:
    return term_eval_exact(t->left, env) * term_eval_exact(t->right, env);
  case Term::Kind::FuncApp:
    throw InvalidArgument("term_eval_exact: term is not function-free");
  }
  throw InvalidArgument("term_eval_exact: bad term");
}

FormulaPtr f_atom(Atom a) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Atomic;
  f->atom = std::move(a);
  return f;
}

FormulaPtr f_and(std::vector<FormulaPtr> items) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::And;
  f->items = std::move(items);
  return f;
}

FormulaPtr f_or(std::vector<FormulaPtr> items) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Or;
  f->items = std::move(items);
  return f;
}

FormulaPtr f_not(FormulaPtr g) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Not;
  f->child = std::move(g);
  return f;
}

FormulaPtr f_forall(std::string var, TermPtr lo, TermPtr hi, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Forall;
  f->var = std::move(var);
  f->lo = std::move(lo);
  f->hi = std::move(hi);
  f->body = std::move(body);
  return f;
}

FormulaPtr f_exists(std::string var, TermPtr lo, TermPtr hi, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Exists;
  f->var = std::move(var);
  f->lo = std::move(lo);
  f->hi = std::move(hi);
  f->body = std::move(body);
  return f;
}

bool formula_equal(const FormulaPtr &a, const FormulaPtr &b) {
  if (a == b)
    return true;
  if (!a || !b || a->kind != b->kind)
    return false;
  switch (a->kind) {
  case Formula::Kind::Atomic:
    return a->atom.rel == b->atom.rel && term_equal(a->atom.lhs, b->atom.lhs);
  case Formula::Kind::And:
  case Formula::Kind::Or: {
    if (a->items.size() != b->items.size())
      return false;
    for (size_t i = 0; i < a->items.size(); ++i)
      if (!formula_equal(a->items[i], b->items[i]))
        return false;
    return true;
  }
  case Formula::Kind::Not:
    return formula_equal(a->child, b->child);
  case Formula::Kind::Forall:
  case Formula::Kind::Exists:
    return a->var == b->var && term_equal(a->lo, b->lo) &&
           term_equal(a->hi, b->hi) && formula_equal(a->body, b->body);
  }
  return false;
}

} // namespace dax
