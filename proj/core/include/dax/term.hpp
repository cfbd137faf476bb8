// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dax/rational.hpp"

namespace dax {

// Opaque handle into a FuncRegistry; stable for the process lifetime.
struct FuncId {
  uint32_t index = 0;
  friend bool operator==(FuncId a, FuncId b) { return a.index == b.index; }
  friend bool operator<(FuncId a, FuncId b) { return a.index < b.index; }
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term AST: variables, exact rational constants, sums, products
// and applications of registered univariate function symbols.
struct Term {
  enum class Kind { Variable, Constant, Sum, Product, FuncApp };

  Kind kind;
  std::string name; // Variable
  Rat value;        // Constant
  TermPtr left;     // Sum/Product left, FuncApp argument
  TermPtr right;    // Sum/Product right
  FuncId func;      // FuncApp

  // Cached at construction; a term is function-free iff no FuncApp occurs.
  bool function_free = true;
};

TermPtr t_var(std::string name);
TermPtr t_const(Rat value);
TermPtr t_sum(TermPtr a, TermPtr b);
TermPtr t_prod(TermPtr a, TermPtr b);
TermPtr t_app(FuncId f, TermPtr arg);

// a - b and -a, desugared through Sum/Product with constant -1
TermPtr t_sub(TermPtr a, TermPtr b);
TermPtr t_neg(TermPtr a);

bool term_equal(const TermPtr &a, const TermPtr &b);
void term_vars(const TermPtr &t, std::set<std::string> &out);

// Substitutes replacement for every occurrence of a syntactically
// identical subterm of pattern inside t.
TermPtr term_subst(const TermPtr &t, const TermPtr &pattern,
                   const TermPtr &replacement);

// Exact evaluation of a function-free term at a rational point assignment.
struct PointEnv;
Rat term_eval_exact(const TermPtr &t,
                    const std::vector<std::pair<std::string, Rat>> &env);

enum class Rel { Geq, Gt };

// Atomic formulas are kept in the shape lhs >= 0 / lhs > 0 only.
struct Atom {
  TermPtr lhs;
  Rel rel;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Bounded-quantifier formulas. After normalization the shape is prenex
// (bounded quantifier prefix over a CNF matrix, no Not nodes).
struct Formula {
  enum class Kind { Atomic, And, Or, Not, Forall, Exists };

  Kind kind;
  Atom atom;                      // Atomic
  std::vector<FormulaPtr> items;  // And / Or (n-ary)
  FormulaPtr child;               // Not
  std::string var;                // quantifiers
  TermPtr lo, hi;                 // quantifier bounds (function-free)
  FormulaPtr body;                // quantifier body
};

FormulaPtr f_atom(Atom a);
FormulaPtr f_and(std::vector<FormulaPtr> items);
FormulaPtr f_or(std::vector<FormulaPtr> items);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_forall(std::string var, TermPtr lo, TermPtr hi, FormulaPtr body);
FormulaPtr f_exists(std::string var, TermPtr lo, TermPtr hi, FormulaPtr body);

bool formula_equal(const FormulaPtr &a, const FormulaPtr &b);

enum class Purity { GeqPure, GtPure, Mixed };

} // namespace dax
