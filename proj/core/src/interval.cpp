// SPDX-License-Identifier: Apache-2.0
#include "dax/interval.hpp"

#include "dax/errors.hpp"

namespace dax {

RatInterval::RatInterval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi)
    throw InvalidArgument("interval endpoints out of order: [" + rat_str(lo) +
                          ", " + rat_str(hi) + "]");
}

RatInterval iadd(const RatInterval &a, const RatInterval &b) {
  return RatInterval(a.lo + b.lo, a.hi + b.hi);
}

RatInterval isub(const RatInterval &a, const RatInterval &b) {
  return RatInterval(a.lo - b.hi, a.hi - b.lo);
}

RatInterval imul(const RatInterval &a, const RatInterval &b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return RatInterval(rat_min(rat_min(p1, p2), rat_min(p3, p4)),
                     rat_max(rat_max(p1, p2), rat_max(p3, p4)));
}

RatInterval ineg(const RatInterval &a) { return RatInterval(-a.hi, -a.lo); }

RatInterval iscale(const Rat &c, const RatInterval &a) {
  if (c >= 0)
    return RatInterval(c * a.lo, c * a.hi);
  return RatInterval(c * a.hi, c * a.lo);
}

bool icontains(const RatInterval &outer, const RatInterval &inner) {
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

bool icontains(const RatInterval &outer, const Rat &point) {
  return outer.lo <= point && point <= outer.hi;
}

RatInterval ihull(const RatInterval &a, const RatInterval &b) {
  return RatInterval(rat_min(a.lo, b.lo), rat_max(a.hi, b.hi));
}

RatInterval imeet(const RatInterval &a, const RatInterval &b) {
  return RatInterval(rat_max(a.lo, b.lo), rat_min(a.hi, b.hi));
}

bool ioverlaps(const RatInterval &a, const RatInterval &b) {
  return a.lo <= b.hi && b.lo <= a.hi;
}

RatInterval ieval_term(const TermPtr &t, const IntervalEnv &env) {
  switch (t->kind) {
  case Term::Kind::Variable: {
    auto it = env.find(t->name);
    if (it == env.end())
      throw InvalidArgument("ieval_term: unbound variable " + t->name);
    return it->second;
  }
  case Term::Kind::Constant:
    return RatInterval(t->value);
  case Term::Kind::Sum:
    return iadd(ieval_term(t->left, env), ieval_term(t->right, env));
  case Term::Kind::Product:
    return imul(ieval_term(t->left, env), ieval_term(t->right, env));
  case Term::Kind::FuncApp:
    throw InvalidArgument("ieval_term: term is not function-free");
  }
  throw InvalidArgument("ieval_term: bad term");
}

} // namespace dax
