// SPDX-License-Identifier: Apache-2.0
#include "dax/rational.hpp"

#include <cctype>

#include "dax/errors.hpp"

namespace dax {

Rat rat_parse(const std::string &text) {
  if (text.empty())
    throw InvalidArgument("empty rational literal");
  for (char ch : text)
    if (ch == 'e' || ch == 'E')
      throw InvalidArgument("scientific notation is not accepted: " + text);

  auto dot = text.find('.');
  if (dot == std::string::npos) {
    // integer or fraction form; mpq_class validates the syntax
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw InvalidArgument("malformed rational literal: " + text);
    q.canonicalize();
    return q;
  }

  // decimal form: sign? digits "." digits  -> exact fraction over 10^k
  std::string head = text.substr(0, dot), tail = text.substr(dot + 1);
  bool neg = false;
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
    neg = head[0] == '-';
    head = head.substr(1);
  }
  if (tail.empty() || head.empty())
    throw InvalidArgument("malformed decimal literal: " + text);
  for (char ch : head)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw InvalidArgument("malformed decimal literal: " + text);
  for (char ch : tail)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw InvalidArgument("malformed decimal literal: " + text);

  mpz_class num(head + tail);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, tail.size());
  Rat q(num, den);
  q.canonicalize();
  return neg ? Rat(-q) : q;
}

std::string rat_str(const Rat &r) {
  if (r.get_den() == 1)
    return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat &base, unsigned long exp) {
  Rat out(1);
  Rat acc = base;
  while (exp) {
    if (exp & 1)
      out *= acc;
    exp >>= 1;
    if (exp)
      acc *= acc;
  }
  return out;
}

double rat_to_double(const Rat &r) { return r.get_d(); }

} // namespace dax
