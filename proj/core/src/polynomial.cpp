// SPDX-License-Identifier: Apache-2.0
#include "dax/polynomial.hpp"

#include <deque>

#include "dax/errors.hpp"

namespace dax {

void UniPoly::trim() {
  while (!coeff.empty() && coeff.back() == 0)
    coeff.pop_back();
}

Rat UniPoly::eval(const Rat &t) const {
  Rat acc(0);
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

RatInterval UniPoly::eval(const RatInterval &t) const {
  RatInterval acc{Rat(0)};
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
    acc = iadd(imul(acc, t), RatInterval(*it));
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rat> out;
  for (size_t k = 1; k < coeff.size(); ++k)
    out.push_back(coeff[k] * Rat(static_cast<long>(k)));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::antiderivative() const {
  std::vector<Rat> out;
  out.push_back(Rat(0));
  for (size_t k = 0; k < coeff.size(); ++k)
    out.push_back(coeff[k] / Rat(static_cast<long>(k + 1)));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shifted(const Rat &shift) const {
  // Horner in (t + shift): run synthetic evaluation accumulating in t
  UniPoly acc;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
    // acc = acc * (t + shift) + c
    std::vector<Rat> next(acc.coeff.size() + 1, Rat(0));
    for (size_t k = 0; k < acc.coeff.size(); ++k) {
      next[k + 1] += acc.coeff[k];
      next[k] += acc.coeff[k] * shift;
    }
    if (next.empty())
      next.push_back(Rat(0));
    next[0] += *it;
    acc = UniPoly(std::move(next));
  }
  return acc;
}

UniPoly UniPoly::reflected() const {
  std::vector<Rat> out = coeff;
  for (size_t k = 1; k < out.size(); k += 2)
    out[k] = -out[k];
  return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly &a, const UniPoly &b) {
  std::vector<Rat> out(std::max(a.coeff.size(), b.coeff.size()), Rat(0));
  for (size_t k = 0; k < a.coeff.size(); ++k)
    out[k] += a.coeff[k];
  for (size_t k = 0; k < b.coeff.size(); ++k)
    out[k] += b.coeff[k];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly &a, const UniPoly &b) {
  std::vector<Rat> out(std::max(a.coeff.size(), b.coeff.size()), Rat(0));
  for (size_t k = 0; k < a.coeff.size(); ++k)
    out[k] += a.coeff[k];
  for (size_t k = 0; k < b.coeff.size(); ++k)
    out[k] -= b.coeff[k];
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly &a, const UniPoly &b) {
  if (a.is_zero() || b.is_zero())
    return UniPoly();
  std::vector<Rat> out(a.coeff.size() + b.coeff.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeff.size(); ++i)
    for (size_t j = 0; j < b.coeff.size(); ++j)
      out[i + j] += a.coeff[i] * b.coeff[j];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rat &c) const {
  std::vector<Rat> out = coeff;
  for (auto &x : out)
    x *= c;
  return UniPoly(std::move(out));
}

RatInterval poly_range_quick(const UniPoly &p, const RatInterval &box) {
  RatInterval horner = p.eval(box);
  if (box.is_point())
    return horner;
  Rat m = box.mid();
  RatInterval centered =
      iadd(RatInterval(p.eval(m)),
           imul(p.derivative().eval(box), isub(box, RatInterval(m))));
  return imeet(horner, centered);
}

PolyRange poly_range_tight(const UniPoly &p, const RatInterval &box,
                           const Rat &slack) {
  if (slack <= 0)
    throw InvalidArgument("poly_range_tight: slack must be positive");
  // branch and bound, separately for max and min via p and -p
  auto upper = [&](const UniPoly &q) {
    // returns (lo, hi) with true max of q in [lo, hi] and hi - lo <= slack
    Rat best = q.eval(box.mid()); // certified lower bound on the max
    std::deque<RatInterval> work{box};
    Rat cover = best;             // max of enclosure uppers among processed
    bool cover_set = false;
    while (!work.empty()) {
      RatInterval cur = work.front();
      work.pop_front();
      RatInterval enc = poly_range_quick(q, cur);
      if (enc.hi <= best)
        continue; // dominated box

      Rat sample = q.eval(cur.mid());
      if (sample > best)
        best = sample;
      if (enc.hi - best <= slack) {
        if (!cover_set || enc.hi > cover) {
          cover = enc.hi;
          cover_set = true;
        }
        continue;
      }
      Rat m = cur.mid();
      work.push_back(RatInterval(cur.lo, m));
      work.push_back(RatInterval(m, cur.hi));
    }
    Rat hi = cover_set ? rat_max(cover, best) : best;
    return std::pair<Rat, Rat>(best, hi);
  };
  UniPoly neg = p.scaled(Rat(-1));
  auto [max_lo, max_hi] = upper(p);
  auto [nmin_lo, nmin_hi] = upper(neg); // max of -p = -min of p
  PolyRange out;
  out.max_lo = max_lo;
  out.max_hi = max_hi;
  out.min_lo = -nmin_hi;
  out.min_hi = -nmin_lo;
  return out;
}

Rat MultiPoly::eval(const std::vector<Rat> &point) const {
  Rat acc(0);
  for (const auto &m : monos) {
    Rat term = m.coef;
    for (size_t i = 0; i < m.exp.size(); ++i)
      for (uint32_t k = 0; k < m.exp[i]; ++k)
        term *= point[i];
    acc += term;
  }
  return acc;
}

RatInterval MultiPoly::eval(const std::vector<RatInterval> &box) const {
  RatInterval acc{Rat(0)};
  for (const auto &m : monos) {
    RatInterval term{m.coef};
    for (size_t i = 0; i < m.exp.size(); ++i)
      for (uint32_t k = 0; k < m.exp[i]; ++k)
        term = imul(term, box[i]);
    acc = iadd(acc, term);
  }
  return acc;
}

uint32_t MultiPoly::total_degree() const {
  uint32_t deg = 0;
  for (const auto &m : monos) {
    uint32_t d = 0;
    for (uint32_t e : m.exp)
      d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

namespace {

MultiPoly multipoly_mul(const MultiPoly &a, const MultiPoly &b) {
  MultiPoly out;
  out.arity = a.arity;
  for (const auto &ma : a.monos)
    for (const auto &mb : b.monos) {
      MultiPoly::Mono m;
      m.coef = ma.coef * mb.coef;
      m.exp.resize(out.arity, 0);
      for (uint32_t i = 0; i < out.arity; ++i)
        m.exp[i] = ma.exp[i] + mb.exp[i];
      out.monos.push_back(std::move(m));
    }
  return out;
}

MultiPoly multipoly_add(const MultiPoly &a, const MultiPoly &b) {
  MultiPoly out = a;
  out.monos.insert(out.monos.end(), b.monos.begin(), b.monos.end());
  return out;
}

void multipoly_combine(MultiPoly &p) {
  // merge identical exponent vectors, drop zero coefficients
  std::vector<MultiPoly::Mono> merged;
  for (auto &m : p.monos) {
    bool found = false;
    for (auto &o : merged)
      if (o.exp == m.exp) {
        o.coef += m.coef;
        found = true;
        break;
      }
    if (!found)
      merged.push_back(m);
  }
  std::erase_if(merged, [](const MultiPoly::Mono &m) { return m.coef == 0; });
  p.monos = std::move(merged);
}

MultiPoly multipoly_build(const TermPtr &t, uint32_t arity) {
  MultiPoly out;
  out.arity = arity;
  switch (t->kind) {
  case Term::Kind::Variable: {
    if (t->name.size() < 2 || t->name[0] != 'x')
      throw InvalidArgument("field polynomial: unexpected variable " + t->name);
    unsigned long idx = std::stoul(t->name.substr(1));
    if (idx >= arity)
      throw InvalidArgument("field polynomial: variable index out of range: " +
                            t->name);
    MultiPoly::Mono m;
    m.coef = Rat(1);
    m.exp.assign(arity, 0);
    m.exp[idx] = 1;
    out.monos.push_back(std::move(m));
    return out;
  }
  case Term::Kind::Constant: {
    if (t->value == 0)
      return out;
    MultiPoly::Mono m;
    m.coef = t->value;
    m.exp.assign(arity, 0);
    out.monos.push_back(std::move(m));
    return out;
  }
  case Term::Kind::Sum:
    return multipoly_add(multipoly_build(t->left, arity),
                         multipoly_build(t->right, arity));
  case Term::Kind::Product:
    return multipoly_mul(multipoly_build(t->left, arity),
                         multipoly_build(t->right, arity));
  case Term::Kind::FuncApp:
    throw InvalidArgument("field polynomial: function symbols not allowed");
  }
  return out;
}

} // namespace

MultiPoly multipoly_from_term(const TermPtr &t, uint32_t arity) {
  MultiPoly p = multipoly_build(t, arity);
  multipoly_combine(p);
  return p;
}

ISeries ISeries::constant(const RatInterval &c, size_t order) {
  ISeries s;
  s.coeff.assign(order, RatInterval{Rat(0)});
  if (!s.coeff.empty())
    s.coeff[0] = c;
  return s;
}

ISeries operator+(const ISeries &a, const ISeries &b) {
  ISeries out;
  out.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), RatInterval{Rat(0)});
  for (size_t k = 0; k < a.coeff.size(); ++k)
    out.coeff[k] = iadd(out.coeff[k], a.coeff[k]);
  for (size_t k = 0; k < b.coeff.size(); ++k)
    out.coeff[k] = iadd(out.coeff[k], b.coeff[k]);
  return out;
}

ISeries operator*(const ISeries &a, const ISeries &b) {
  size_t order = std::max(a.coeff.size(), b.coeff.size());
  ISeries out;
  out.coeff.assign(order, RatInterval{Rat(0)});
  for (size_t i = 0; i < a.coeff.size(); ++i)
    for (size_t j = 0; j < b.coeff.size(); ++j) {
      if (i + j >= order)
        break;
      out.coeff[i + j] = iadd(out.coeff[i + j], imul(a.coeff[i], b.coeff[j]));
    }
  return out;
}

ISeries ISeries::scaled(const Rat &c) const {
  ISeries out = *this;
  for (auto &x : out.coeff)
    x = iscale(c, x);
  return out;
}

ISeries multipoly_eval_series(const MultiPoly &p,
                              const std::vector<ISeries> &state,
                              size_t order) {
  ISeries acc;
  acc.coeff.assign(order, RatInterval{Rat(0)});
  for (const auto &m : p.monos) {
    ISeries term = ISeries::constant(RatInterval{m.coef}, order);
    for (size_t i = 0; i < m.exp.size(); ++i)
      for (uint32_t k = 0; k < m.exp[i]; ++k)
        term = term * state[i];
    acc = acc + term;
  }
  return acc;
}

TermPtr poly_to_term(const UniPoly &p, const TermPtr &arg) {
  if (p.is_zero())
    return t_const(Rat(0));
  TermPtr acc = t_const(p.coeff.back());
  for (auto it = p.coeff.rbegin() + 1; it != p.coeff.rend(); ++it) {
    acc = t_prod(acc, arg);
    if (*it != 0)
      acc = t_sum(acc, t_const(*it));
  }
  return acc;
}

} // namespace dax
