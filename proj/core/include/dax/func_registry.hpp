// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dax/polynomial.hpp"
#include "dax/rational.hpp"
#include "dax/term.hpp"

namespace dax {

// A differentially-defined function: the first coordinate of the solution
// of an autonomous polynomial ODE system with rational initial data.
// Global existence on the windows we touch is the registrant's claim; the
// validated integrator reports divergence if it cannot hold a step.
struct FuncDef {
  std::string name;
  uint32_t dim = 0;            // number of state coordinates (n+1)
  std::vector<MultiPoly> field;
  Rat init_time = Rat(0);
  std::vector<Rat> init_state;
  uint32_t projection = 0;     // always coordinate 0
};

class FuncRegistry {
public:
  // Validates the definition; throws on duplicate name, arity mismatch or
  // nonzero projection.
  FuncId register_function(FuncDef def);

  std::optional<FuncId> lookup(const std::string &name) const;
  const FuncDef &operator[](FuncId id) const;
  size_t size() const { return defs_.size(); }

  // sin, cos, exp. sin/cos share the planar rotation field x0' = x1,
  // x1' = -x0 with initial states (0,1) and (1,0); exp is x0' = x0, x0(0)=1.
  static FuncRegistry builtins();

private:
  std::vector<FuncDef> defs_;
};

// Parses one or more (define-fn ...) forms and registers them.
// Grammar:
//   (define-fn sin (dim 2) (field (x1) (- 0 x0)) (init 0 (0 1)) (project 0))
void parse_fn_definitions(const std::string &text, FuncRegistry &registry);

} // namespace dax
