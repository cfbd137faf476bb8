// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "dax/interval.hpp"
#include "dax/rational.hpp"
#include "dax/term.hpp"

namespace dax {

// Dense univariate polynomial with exact rational coefficients,
// coeff[k] multiplying t^k. Trailing zero coefficients are trimmed.
struct UniPoly {
  std::vector<Rat> coeff;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> c) : coeff(std::move(c)) { trim(); }

  bool is_zero() const { return coeff.empty(); }
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  void trim();

  Rat eval(const Rat &t) const;                 // Horner, exact
  RatInterval eval(const RatInterval &t) const; // Horner, naive extension

  UniPoly derivative() const;
  // coefficient-wise antiderivative with zero constant term
  UniPoly antiderivative() const;
  // p(t + shift) expanded in t
  UniPoly shifted(const Rat &shift) const;
  // p(-t)
  UniPoly reflected() const;

  friend UniPoly operator+(const UniPoly &a, const UniPoly &b);
  friend UniPoly operator-(const UniPoly &a, const UniPoly &b);
  friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
  UniPoly scaled(const Rat &c) const;
  friend bool operator==(const UniPoly &a, const UniPoly &b) {
    return a.coeff == b.coeff;
  }
};

// Mean-value form range enclosure of p over box:
//   p(mid) + p'(box) * (box - mid), intersected with plain Horner.
RatInterval poly_range_quick(const UniPoly &p, const RatInterval &box);

// Certified bounds on min/max of p over box by adaptive bisection, each
// within slack of the true value. Exact rational branch-and-bound.
struct PolyRange {
  Rat min_lo, min_hi; // true min lies in [min_lo, min_hi]
  Rat max_lo, max_hi; // true max lies in [max_lo, max_hi]
};
PolyRange poly_range_tight(const UniPoly &p, const RatInterval &box,
                           const Rat &slack);

// Sparse multivariate polynomial over variables x0..x{arity-1}.
struct MultiPoly {
  struct Mono {
    Rat coef;
    std::vector<uint32_t> exp; // per-variable exponent, length = arity
  };
  uint32_t arity = 0;
  std::vector<Mono> monos;

  Rat eval(const std::vector<Rat> &point) const;
  RatInterval eval(const std::vector<RatInterval> &box) const;
  // total degree, 0 for the zero polynomial
  uint32_t total_degree() const;
};

// Builds a MultiPoly from a function-free term over variables named
// x0..x{arity-1}; throws on other variable names.
MultiPoly multipoly_from_term(const TermPtr &t, uint32_t arity);

// Truncated univariate power series with interval coefficients, used by
// the Taylor-coefficient recurrences of the validated integrator.
struct ISeries {
  std::vector<RatInterval> coeff;

  static ISeries constant(const RatInterval &c, size_t order);
  friend ISeries operator+(const ISeries &a, const ISeries &b);
  friend ISeries operator*(const ISeries &a, const ISeries &b); // truncated
  ISeries scaled(const Rat &c) const;
};

// Evaluates a multivariate field polynomial on a vector of series,
// truncating products beyond `order` coefficients.
ISeries multipoly_eval_series(const MultiPoly &p,
                              const std::vector<ISeries> &state, size_t order);

// Horner-form term for p(arg), with exact coefficients.
TermPtr poly_to_term(const UniPoly &p, const TermPtr &arg);

} // namespace dax
