// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "dax/rational.hpp"
#include "dax/term.hpp"

namespace dax {

// Closed interval with exact rational endpoints. Every operation is exact;
// nothing in this layer rounds.
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat point) : lo(point), hi(lo) {}
  RatInterval(Rat lo_, Rat hi_);

  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  // max |x| over the interval
  Rat mag() const { return rat_max(rat_abs(lo), rat_abs(hi)); }

  friend bool operator==(const RatInterval &a, const RatInterval &b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

RatInterval iadd(const RatInterval &a, const RatInterval &b);
RatInterval isub(const RatInterval &a, const RatInterval &b);
RatInterval imul(const RatInterval &a, const RatInterval &b);
RatInterval ineg(const RatInterval &a);
RatInterval iscale(const Rat &c, const RatInterval &a);

// outer.lo <= inner.lo and inner.hi <= outer.hi, exactly
bool icontains(const RatInterval &outer, const RatInterval &inner);
bool icontains(const RatInterval &outer, const Rat &point);

RatInterval ihull(const RatInterval &a, const RatInterval &b);
// Intersection; caller must ensure the intervals overlap.
RatInterval imeet(const RatInterval &a, const RatInterval &b);
bool ioverlaps(const RatInterval &a, const RatInterval &b);

using IntervalEnv = std::map<std::string, RatInterval>;

// Naive interval extension of a function-free term: the exact value of the
// term at any point assignment inside env lies in the result. x*x is
// evaluated as a plain product of identical intervals; tightening is the
// decision engine's job.
RatInterval ieval_term(const TermPtr &t, const IntervalEnv &env);

} // namespace dax
